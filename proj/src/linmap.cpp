#include "bicoalg/linmap.hpp"

#include "bicoalg/errors.hpp"

namespace bicoalg {

namespace {

std::string shape(const LinMap& f) { return std::to_string(f.rows()) + "x" + std::to_string(f.cols()); }

}  // namespace

LinMap::LinMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols), columns_(cols) {}

LinMap::LinMap(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("matrix grid has " + std::to_string(data_.size()) + " entries, expected " +
                            std::to_string(rows * cols));
  }
  build_columns();
}

void LinMap::build_columns() {
  columns_.assign(cols_, SparseVec{});
  std::vector<std::vector<SparseVec::Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& v = data_[r * cols_ + c];
      if (!v.is_zero()) cols[c].emplace_back(r, v);
    }
  }
  for (std::size_t c = 0; c < cols_; ++c) columns_[c] = SparseVec::from_sorted(std::move(cols[c]));
}

LinMap LinMap::identity(std::size_t n) {
  std::vector<Scalar> d(n * n);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 1;
  return {n, n, std::move(d)};
}

LinMap LinMap::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  std::vector<Scalar> d;
  d.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix rows");
    d.insert(d.end(), row.begin(), row.end());
  }
  return {rows.size(), cols, std::move(d)};
}

LinMap LinMap::from_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
  LinMap f;
  f.rows_ = rows;
  f.cols_ = columns.size();
  f.data_.assign(rows * columns.size(), Scalar{});
  f.columns_ = columns;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c].entries()) {
      if (r >= rows) throw DimensionMismatch("column entry " + std::to_string(r) + " outside " + std::to_string(rows) + " rows");
      f.data_[r * f.cols_ + c] = v;
    }
  }
  return f;
}

LinMap LinMap::labeled(std::string src, std::string tgt) const {
  LinMap f = *this;
  f.src_ = std::move(src);
  f.tgt_ = std::move(tgt);
  return f;
}

SparseVec LinMap::apply(const SparseVec& x) const {
  std::vector<SparseVec::Entry> raw;
  for (const auto& [i, a] : x.entries()) {
    if (i >= cols_) throw DimensionMismatch("vector index " + std::to_string(i) + " outside map with " + std::to_string(cols_) + " columns");
    for (const auto& [r, v] : columns_[i].entries()) raw.emplace_back(r, a * v);
  }
  return SparseVec::from_unsorted(std::move(raw));
}

LinMap LinMap::with_entry(std::size_t r, std::size_t c, const Scalar& value) const {
  std::vector<Scalar> d = data_;
  d.at(r * cols_ + c) = value;
  return LinMap(rows_, cols_, std::move(d)).labeled(src_, tgt_);
}

LinMap LinMap::transpose() const {
  std::vector<Scalar> d(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) d[c * rows_ + r] = data_[r * cols_ + c];
  }
  return LinMap(cols_, rows_, std::move(d)).labeled(tgt_, src_);
}

LinMap LinMap::in_field(const Field& field) const {
  std::vector<Scalar> d;
  d.reserve(data_.size());
  for (const auto& v : data_) d.push_back(v.in_field(field));
  return LinMap(rows_, cols_, std::move(d)).labeled(src_, tgt_);
}

bool LinMap::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

LinMap operator*(const LinMap& g, const LinMap& f) {
  if (g.cols_ != f.rows_) throw DimensionMismatch("cannot compose " + shape(g) + " after " + shape(f));
  if (!g.src_.empty() && !f.tgt_.empty() && g.src_ != f.tgt_) {
    throw DimensionMismatch("label mismatch composing " + g.src_ + " with " + f.tgt_);
  }
  std::vector<SparseVec> cols;
  cols.reserve(f.cols_);
  for (const auto& c : f.columns_) cols.push_back(g.apply(c));
  return LinMap::from_columns(g.rows_, cols).labeled(f.src_, g.tgt_);
}

LinMap operator+(const LinMap& x, const LinMap& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("cannot add " + shape(x) + " and " + shape(y));
  std::vector<Scalar> d(x.data_.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = x.data_[k] + y.data_[k];
  return LinMap(x.rows_, x.cols_, std::move(d)).labeled(x.src_, x.tgt_);
}

LinMap operator-(const LinMap& x, const LinMap& y) { return x + Scalar(-1) * y; }

LinMap operator*(const Scalar& a, const LinMap& f) {
  std::vector<Scalar> d(f.data_.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = a * f.data_[k];
  return LinMap(f.rows_, f.cols_, std::move(d)).labeled(f.src_, f.tgt_);
}

bool operator==(const LinMap& x, const LinMap& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  for (std::size_t k = 0; k < x.data_.size(); ++k) {
    if (!(x.data_[k] == y.data_[k])) return false;
  }
  return true;
}

}  // namespace bicoalg
