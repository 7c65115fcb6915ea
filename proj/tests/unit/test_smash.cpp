#include <numeric>

#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "bicoalg/smash.hpp"
#include "doctest.h"

using namespace bicoalg;

namespace {

// Action groupoid written out from the tables: arrows (x, g) at x·|G| + g,
// all grouplike, α = x, β = x◁g, (x,g)(y,h) = (x,gh) when y = x◁g.
Bicoalgebroid groupoid_by_hand(const FiniteGroup& g, const GSet& x) {
  const std::size_t n = x.size * g.order, c = x.size;
  std::vector<SparseVec> delta, alpha, beta, mu(n * n), eta;
  for (std::size_t p = 0; p < x.size; ++p)
    for (std::size_t a = 0; a < g.order; ++a) {
      const std::size_t i = p * g.order + a;
      delta.push_back(SparseVec::unit(i * n + i));
      alpha.push_back(SparseVec::unit(p));
      beta.push_back(SparseVec::unit(x.action[p][a]));
      for (std::size_t b = 0; b < g.order; ++b) {
        const std::size_t q = x.action[p][a];
        mu[i * n + q * g.order + b] = SparseVec::unit(p * g.order + g.mul(a, b));
      }
    }
  for (std::size_t p = 0; p < c; ++p) eta.push_back(SparseVec::unit(p * g.order + g.identity));
  Coalgebra total{n, LinMap::from_columns(n * n, delta), LinMap(1, n, std::vector<Scalar>(n, Scalar(1))), "arrows"};
  return {grouplike_coalgebra(c),          total, LinMap::from_columns(c, alpha), LinMap::from_columns(c, beta),
          LinMap::from_columns(n, mu), LinMap::from_columns(n, eta), "hand groupoid"};
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("scalar extension of a regular G-set is its action groupoid") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
    CAPTURE(g.name);
    const Bicoalgebroid h = group_hopf(g);
    const GSet x = GSet::regular(g);
    const Bicoalgebroid s = scalar_extension(action_groupoid_bcc(g, x, h), h);
    const Bicoalgebroid oracle = groupoid_by_hand(g, x);
    REQUIRE(verify_bicoalgebroid(oracle).passed());
    const CheckReport r = compare_bicoalgebroids(s, oracle, identity_perm(s.n()), identity_perm(s.c()));
    CHECK_MESSAGE(r.passed(), r.text());
  }
}

TEST_CASE("coset G-sets extend to groupoids too") {
  const FiniteGroup g = FiniteGroup::symmetric3();
  const Bicoalgebroid h = group_hopf(g);
  for (const auto& sub : subgroups(g)) {
    const GSet x = GSet::cosets(g, sub);
    const Bicoalgebroid s = scalar_extension(action_groupoid_bcc(g, x, h), h);
    CHECK(verify_bicoalgebroid(s).passed());
    CHECK(compare_bicoalgebroids(s, groupoid_by_hand(g, x), identity_perm(s.n()), identity_perm(s.c())).passed());
  }
}

TEST_CASE("smash coproduct of the regular G-set is a coalgebra") {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  const Bicoalgebroid h = group_hopf(g);
  const SmashCoproduct sc = smash_coproduct(action_groupoid_bcc(g, GSet::regular(g), h), h);
  CHECK(sc.coalgebra.dim == 9);
  CHECK(verify_coalgebra(sc.coalgebra).passed());
}

TEST_CASE("the gate refuses non-cocommutative-comonoid input") {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  const Bicoalgebroid h = group_hopf(g);
  CHECK_THROWS_AS(scalar_extension(conjugation_bcc(g, h), h), BCCViolation);
}
