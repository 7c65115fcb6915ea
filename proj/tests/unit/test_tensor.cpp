#include <random>

#include "bicoalg/tensor.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bicoalg;

TEST_CASE("applying a map to a middle leg matches index loops") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(-3, 3);
  const std::vector<std::size_t> shape{2, 3, 2};
  SparseVec data;
  for (std::size_t i = 0; i < 12; ++i) data.axpy(Scalar(small(rng)), SparseVec::unit(i));
  const Tensor t(shape, data);
  const LinMap f = testing_support::dense(4, 3, [&](std::size_t, std::size_t) { return Scalar(small(rng)); });
  const Tensor u = t.apply(f, 1);
  REQUIRE(u.shape() == std::vector<std::size_t>{2, 4, 2});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        Scalar expect(0);
        for (std::size_t b = 0; b < 3; ++b) expect += f.at(r, b) * data.at((a * 3 + b) * 2 + c);
        CHECK(u.data().at((a * 4 + r) * 2 + c) == expect);
      }
}

TEST_CASE("permute, merge and split") {
  const Tensor t = Tensor::basis({2, 3, 4}, (1 * 3 + 2) * 4 + 3);
  const Tensor p = t.permute({2, 0, 1});
  CHECK(p.shape() == std::vector<std::size_t>{4, 2, 3});
  CHECK(p == Tensor::basis({4, 2, 3}, (3 * 2 + 1) * 3 + 2));
  CHECK(t.merge(1, 2).split(1, {3, 4}) == t);
  CHECK(t.swap(0) == Tensor::basis({3, 2, 4}, (2 * 2 + 1) * 4 + 3));
}

TEST_CASE("dropping legs with a functional") {
  const Tensor t = Tensor::basis({2, 2}, 3) + Tensor::basis({2, 2}, 2);
  const LinMap ones = LinMap::from_rows({{1, 1}});
  const Tensor u = t.apply(ones, 0, 1, {});
  CHECK(u.shape() == std::vector<std::size_t>{2});
  CHECK(u.data() == SparseVec::from_unsorted({{0, Scalar(1)}, {1, Scalar(1)}}));
}

TEST_CASE("restricted application refuses off-domain slices") {
  auto line = std::make_shared<const Subspace>(Subspace::span(4, {SparseVec::unit(0) + SparseVec::unit(3)}));
  const RestrictedMap m{"m", LinMap::from_rows({{1, 0, 0, 1}}), line, {2, 2}};
  const Tensor ok = Tensor::basis({2, 2}, 0) + Tensor::basis({2, 2}, 3);
  CHECK(ok.apply_restricted(m, 0).data() == SparseVec::unit(0, 2));
  CHECK_THROWS(Tensor::basis({2, 2}, 1).apply_restricted(m, 0));
}
