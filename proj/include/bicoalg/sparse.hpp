#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bicoalg/scalar.hpp"

namespace bicoalg {

/// Sparse coordinate vector: entries sorted by index, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;

  /// Sorts, merges duplicate indices and drops zeros.
  static SparseVec from_unsorted(std::vector<Entry> raw);
  /// Caller guarantees sorted, distinct, nonzero entries.
  static SparseVec from_sorted(std::vector<Entry> sorted);
  static SparseVec unit(std::size_t i, Scalar value = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  Scalar at(std::size_t i) const;
  /// Largest stored index + 1 (0 when empty).
  std::size_t extent() const noexcept { return entries_.empty() ? 0 : entries_.back().first + 1; }

  /// this += a * x
  void axpy(const Scalar& a, const SparseVec& x);
  SparseVec scaled(const Scalar& a) const;

  friend SparseVec operator+(const SparseVec& x, const SparseVec& y);
  friend SparseVec operator-(const SparseVec& x, const SparseVec& y);
  friend bool operator==(const SparseVec& x, const SparseVec& y);

  /// "{i: v, ...}"
  std::string str() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace bicoalg
