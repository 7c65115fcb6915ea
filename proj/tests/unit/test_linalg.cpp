#include <random>

#include "bicoalg/errors.hpp"
#include "bicoalg/linalg.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bicoalg;

namespace {

// Number of x in F_p^n with f(x) = 0, by enumeration.
std::size_t count_kernel(const LinMap& f, std::uint64_t p) {
  const std::size_t n = f.cols();
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    SparseVec x;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) {
      if (c % p) x.axpy(Scalar::residue(static_cast<std::int64_t>(c % p), p), SparseVec::unit(i));
    }
    count += f.apply(x).is_zero();
  }
  return count;
}

}  // namespace

TEST_CASE("kernel dimension matches enumeration over small prime fields") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {2u, 3u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
      const LinMap f = testing_support::dense(rows, cols, [&](std::size_t, std::size_t) {
        return Scalar::residue(static_cast<std::int64_t>(rng() % p), p);
      });
      const Subspace k = kernel(f);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < k.dim(); ++i) expected *= p;
      CHECK(count_kernel(f, p) == expected);
      for (const auto& v : k.basis()) CHECK(f.apply(v).is_zero());
      CHECK(rank(f) + k.dim() == cols);
    }
  }
}

TEST_CASE("subspace coordinates and quotients over Q") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const LinMap f = testing_support::dense(3, 6, [&](std::size_t, std::size_t) { return Scalar(small(rng)); });
    const Subspace k = kernel(f);
    SparseVec combo;
    for (const auto& v : k.basis()) combo.axpy(Scalar(small(rng)), v);
    const auto coords = k.coordinates(combo);
    REQUIRE(coords.has_value());
    CHECK(k.embed(*coords) == combo);

    const Quotient q = cokernel(f);
    CHECK(q.dim() == 3 - rank(f));
    for (std::size_t c = 0; c < 6; ++c) CHECK(q.project(f.column(c)).is_zero());
    CHECK(q.projection() * q.section() == LinMap::identity(q.dim()));
  }
}

TEST_CASE("preimages and corestriction") {
  const LinMap f = LinMap::from_rows({{1, 2, 0}, {0, 1, 1}});
  const SparseVec v = SparseVec::from_unsorted({{0, Scalar(3)}, {1, Scalar(1)}});
  CHECK(f.apply(solve_preimage(f, v)) == v);
  const LinMap g = LinMap::from_rows({{1, 0}, {0, 0}});
  CHECK_THROWS_AS(solve_preimage(g, SparseVec::unit(1)), NoPreimage);
  const Subspace line = Subspace::span(2, {SparseVec::unit(0)});
  CHECK(corestrict(g, line) == LinMap::from_rows({{1, 0}}));
  CHECK_THROWS_AS(corestrict(LinMap::identity(2), line), NotInSubspace);
}

TEST_CASE("tensor_map follows row-major flattening") {
  const LinMap f = LinMap::from_rows({{1, 2}, {3, 4}});
  const LinMap g = LinMap::from_rows({{0, 1, 5}});
  const LinMap t = tensor_map(f, g);
  REQUIRE(t.rows() == 2);
  REQUIRE(t.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 3; ++b) CHECK(t.at(i, a * 3 + b) == f.at(i, a) * g.at(0, b));
  const LinMap tw = twist(2, 3);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(tw.apply(SparseVec::unit(a * 3 + b)) == SparseVec::unit(b * 2 + a));
}
