#pragma once

// Test-side constructions that do not go through the library's generators.

#include <cstddef>
#include <vector>

#include "bicoalg/coalgebra.hpp"

namespace testing_support {

using bicoalg::Coalgebra;
using bicoalg::LinMap;
using bicoalg::Scalar;

/// Divided-power coalgebra on x_0..x_{n-1}: Δx_k = Σ_{i+j=k} x_i ⊗ x_j, ε(x_k) = δ_{k0}.
inline Coalgebra divided_power(std::size_t n) {
  std::vector<Scalar> delta(n * n * n, Scalar(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) delta[(i * n + (k - i)) * n + k] = Scalar(1);
  }
  std::vector<Scalar> counit(n, Scalar(0));
  counit[0] = Scalar(1);
  return {n, LinMap(n * n, n, std::move(delta)), LinMap(1, n, std::move(counit)), "dp" + std::to_string(n)};
}

/// Basis g, h, x with g, h grouplike and Δx = g⊗x + x⊗h. Not cocommutative.
inline Coalgebra skew_primitive() {
  std::vector<Scalar> delta(27, Scalar(0));
  auto set = [&](std::size_t a, std::size_t b, std::size_t col) { delta[(a * 3 + b) * 3 + col] = Scalar(1); };
  set(0, 0, 0);
  set(1, 1, 1);
  set(0, 2, 2);
  set(2, 1, 2);
  return {3, LinMap(9, 3, std::move(delta)), LinMap(1, 3, {Scalar(1), Scalar(1), Scalar(0)}), "skew3"};
}

/// Dense row-major matrix with entries read from a callback.
template <class F>
LinMap dense(std::size_t rows, std::size_t cols, F f) {
  std::vector<Scalar> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) data.push_back(f(r, c));
  }
  return LinMap(rows, cols, std::move(data));
}

}  // namespace testing_support
