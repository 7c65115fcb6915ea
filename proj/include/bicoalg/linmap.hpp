#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicoalg/scalar.hpp"
#include "bicoalg/sparse.hpp"

namespace bicoalg {

/// Linear map between finite-dimensional spaces, stored as a dense row-major
/// grid (rows = target dimension, cols = source dimension).
///
/// The matrix is immutable after construction; sparse columns are cached
/// alongside the grid because almost every structure map in this library is
/// applied to basis tensors one column at a time.
///
/// Optional space labels are checked on composition when both sides carry one.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t rows, std::size_t cols);
  LinMap(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

  static LinMap identity(std::size_t n);
  static LinMap zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static LinMap from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_if_empty = 0);
  static LinMap from_columns(std::size_t rows, const std::vector<SparseVec>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const noexcept { return data_; }
  const SparseVec& column(std::size_t c) const { return columns_.at(c); }
  const std::vector<SparseVec>& columns() const noexcept { return columns_; }

  const std::string& src_label() const noexcept { return src_; }
  const std::string& tgt_label() const noexcept { return tgt_; }
  LinMap labeled(std::string src, std::string tgt) const;

  SparseVec apply(const SparseVec& x) const;
  LinMap with_entry(std::size_t r, std::size_t c, const Scalar& value) const;
  LinMap transpose() const;
  LinMap in_field(const Field& field) const;
  bool is_zero() const;

  /// g * f is the composite g after f.
  friend LinMap operator*(const LinMap& g, const LinMap& f);
  friend LinMap operator+(const LinMap& x, const LinMap& y);
  friend LinMap operator-(const LinMap& x, const LinMap& y);
  friend LinMap operator*(const Scalar& a, const LinMap& f);
  /// Entry-wise equality; labels are ignored.
  friend bool operator==(const LinMap& x, const LinMap& y);

 private:
  void build_columns();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
  std::vector<SparseVec> columns_;
  std::string src_;
  std::string tgt_;
};

}  // namespace bicoalg
