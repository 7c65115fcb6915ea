#include <random>

#include "bicoalg/coalgebra.hpp"
#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bicoalg;

namespace {

// Bicomodule over grouplike(n) where basis vector i has left label l[i] and right label r[i].
Bicomodule labelled(std::size_t n, const std::vector<std::size_t>& l, const std::vector<std::size_t>& r) {
  const std::size_t d = l.size();
  std::vector<SparseVec> lam, rho;
  for (std::size_t i = 0; i < d; ++i) {
    lam.push_back(SparseVec::unit(l[i] * d + i));
    rho.push_back(SparseVec::unit(i * n + r[i]));
  }
  return {d, grouplike_coalgebra(n), LinMap::from_columns(n * d, lam), LinMap::from_columns(d * n, rho), "labelled"};
}

}  // namespace

TEST_CASE("generated coalgebras satisfy the axioms") {
  for (const Coalgebra& c : {grouplike_coalgebra(3), dual_group_coalgebra(FiniteGroup::symmetric3()), testing_support::divided_power(4),
                             testing_support::skew_primitive(), coenveloping(testing_support::skew_primitive()),
                             coopposite(testing_support::skew_primitive())}) {
    CAPTURE(c.label);
    CHECK(verify_coalgebra(c).passed());
  }
}

TEST_CASE("a broken coproduct is reported with a witness") {
  Coalgebra c = testing_support::divided_power(3);
  c.delta = c.delta.with_entry(0, 2, Scalar(1));
  const CheckReport r = verify_coalgebra(c);
  CHECK_FALSE(r.passed());
  for (const auto& chk : r.checks())
    if (!chk.passed()) CHECK(chk.witness.has_value());
}

TEST_CASE("cotensor dimension counts composable label pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    auto labels = [&](std::size_t d) {
      std::vector<std::size_t> v(d);
      for (auto& x : v) x = rng() % n;
      return v;
    };
    const std::size_t dm = 1 + rng() % 4, dn = 1 + rng() % 4;
    const auto ml = labels(dm), mr = labels(dm), nl = labels(dn), nr = labels(dn);
    const Bicomodule m = labelled(n, ml, mr), k = labelled(n, nl, nr);
    REQUIRE(verify_bicomodule(m).passed());
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) pairs += mr[i] == nl[j];
    CHECK(cotensor(m.rho, k.lambda, n).dim() == pairs);
    const CotensorBicomodule mk = cotensor_bicomodule(m, k);
    CHECK(verify_bicomodule(mk.module).passed());
  }
}

TEST_CASE("cocenter of a grouplike bicomodule identifies nothing across labels") {
  // Vectors with equal left and right labels survive; the rest die.
  const Bicomodule m = labelled(2, {0, 0, 1}, {0, 1, 1});
  const Cocenter z = cocenter(m);
  CHECK(z.quotient.dim() == 2);
  const LinMap f = LinMap::from_rows({{1, 0, 2}});
  CHECK(factor_through_cocenter(f, m, z) * z.zeta == f);
  CHECK_THROWS_AS(factor_through_cocenter(LinMap::from_rows({{0, 1, 0}}), m, z), CocenterObstruction);
}

TEST_CASE("free bicomodules and random bicomodules are valid") {
  std::mt19937_64 rng(1);
  for (const Coalgebra& c : {grouplike_coalgebra(2), testing_support::skew_primitive(), dual_group_coalgebra(FiniteGroup::cyclic(3))}) {
    CHECK(verify_bicomodule(free_bicomodule(c)).passed());
    for (int i = 0; i < 5; ++i) CHECK(verify_bicomodule(random_bicomodule(c, find_grouplikes(c), 4, rng)).passed());
  }
}

TEST_CASE("grouplike search finds exactly the grouplikes") {
  CHECK(find_grouplikes(testing_support::skew_primitive()).size() == 2);
  CHECK(find_grouplikes(grouplike_coalgebra(3)).size() == 3);
  CHECK(find_grouplikes(testing_support::divided_power(3)).size() == 1);
}
