#include "bicoalg/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "bicoalg/errors.hpp"

namespace bicoalg {

SparseVec RowEchelon::reduce(SparseVec v) const {
  std::size_t cursor = 0;
  for (;;) {
    const auto& es = v.entries();
    auto it = std::lower_bound(es.begin(), es.end(), cursor,
                               [](const SparseVec::Entry& e, std::size_t k) { return e.first < k; });
    while (it != es.end() && (it->first >= row_at_col_.size() || row_at_col_[it->first] < 0)) ++it;
    if (it == es.end()) break;
    std::size_t col = it->first;
    Scalar a = it->second;
    v.axpy(-a, rows_[static_cast<std::size_t>(row_at_col_[col])]);
    cursor = col + 1;
  }
  return v;
}

bool RowEchelon::insert(SparseVec v) {
  if (v.extent() > row_at_col_.size()) throw DimensionMismatch("echelon row longer than column count");
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  std::size_t pivot = v.entries().front().first;
  Scalar lead = v.entries().front().second;
  if (!lead.is_one()) v = v.scaled(lead.inverse());
  row_at_col_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  reduced_ = false;
  return true;
}

void RowEchelon::make_reduced() {
  if (reduced_) return;
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivots_[x] > pivots_[y]; });
  for (std::size_t r : order) {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [c, a] : rows_[r].entries()) {
      if (c != pivots_[r] && row_at_col_[c] >= 0) hits.emplace_back(c, a);
    }
    for (const auto& [c, a] : hits) rows_[r].axpy(-a, rows_[static_cast<std::size_t>(row_at_col_[c])]);
  }
  reduced_ = true;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVec>& vectors, std::string label) {
  RowEchelon ech(ambient);
  for (const auto& v : vectors) ech.insert(v);
  ech.make_reduced();
  std::vector<std::size_t> order(ech.rank());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ech.pivots()[x] < ech.pivots()[y]; });
  Subspace s;
  s.ambient_ = ambient;
  s.label_ = std::move(label);
  for (std::size_t r : order) {
    s.basis_.push_back(ech.rows()[r]);
    s.pivots_.push_back(ech.pivots()[r]);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient, std::string label) {
  Subspace s;
  s.ambient_ = ambient;
  s.label_ = std::move(label);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(SparseVec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
  if (v.extent() > ambient_) throw DimensionMismatch("vector outside the ambient space of a subspace");
  std::vector<SparseVec::Entry> coords;
  SparseVec rest = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Scalar a = v.at(pivots_[k]);
    if (a.is_zero()) continue;
    coords.emplace_back(k, a);
    rest.axpy(-a, basis_[k]);
  }
  if (!rest.is_zero()) return std::nullopt;
  return SparseVec::from_sorted(std::move(coords));
}

SparseVec Subspace::coordinates_or_throw(const SparseVec& v, std::size_t column) const {
  auto c = coordinates(v);
  if (!c) {
    throw NotInSubspace(column, "column " + std::to_string(column) + " = " + v.str() + " is not in subspace " +
                                    (label_.empty() ? std::string("<unnamed>") : label_));
  }
  return *c;
}

SparseVec Subspace::embed(const SparseVec& coords) const {
  SparseVec v;
  for (const auto& [k, a] : coords.entries()) v.axpy(a, basis_.at(k));
  return v;
}

LinMap Subspace::inclusion() const { return LinMap::from_columns(ambient_, basis_).labeled(label_, {}); }

Quotient Quotient::of_relations(std::size_t ambient, const std::vector<SparseVec>& relations) {
  Quotient q;
  q.relations_ = RowEchelon(ambient);
  for (const auto& r : relations) q.relations_.insert(r);
  q.relations_.make_reduced();
  q.index_of_.assign(ambient, -1);
  for (std::size_t i = 0; i < ambient; ++i) {
    if (q.relations_.row_at(i) < 0) {
      q.index_of_[i] = static_cast<long>(q.free_.size());
      q.free_.push_back(i);
    }
  }
  return q;
}

SparseVec Quotient::project(const SparseVec& v) const {
  SparseVec r = relations_.reduce(v);
  std::vector<SparseVec::Entry> out;
  out.reserve(r.nnz());
  for (const auto& [i, a] : r.entries()) out.emplace_back(static_cast<std::size_t>(index_of_[i]), a);
  return SparseVec::from_sorted(std::move(out));
}

SparseVec Quotient::lift(const SparseVec& q) const {
  std::vector<SparseVec::Entry> out;
  for (const auto& [t, a] : q.entries()) out.emplace_back(free_.at(t), a);
  return SparseVec::from_sorted(std::move(out));
}

LinMap Quotient::projection() const {
  std::vector<SparseVec> cols;
  cols.reserve(ambient_dim());
  for (std::size_t i = 0; i < ambient_dim(); ++i) cols.push_back(project(SparseVec::unit(i)));
  return LinMap::from_columns(dim(), cols);
}

LinMap Quotient::section() const {
  std::vector<SparseVec> cols;
  cols.reserve(dim());
  for (std::size_t q : free_) cols.push_back(SparseVec::unit(q));
  return LinMap::from_columns(ambient_dim(), cols);
}

namespace {

std::vector<SparseVec> rows_of(std::size_t rows, const std::vector<SparseVec>& columns) {
  std::vector<std::vector<SparseVec::Entry>> raw(rows);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, a] : columns[c].entries()) raw.at(r).emplace_back(c, a);
  }
  std::vector<SparseVec> out;
  out.reserve(rows);
  for (auto& r : raw) out.push_back(SparseVec::from_sorted(std::move(r)));
  return out;
}

}  // namespace

std::size_t rank(const LinMap& f) {
  RowEchelon ech(f.rows());
  for (const auto& c : f.columns()) ech.insert(c);
  return ech.rank();
}

Subspace kernel_of_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
  const std::size_t n = columns.size();
  RowEchelon ech(n);
  for (auto& r : rows_of(rows, columns)) {
    if (!r.is_zero()) ech.insert(std::move(r));
  }
  ech.make_reduced();
  std::vector<SparseVec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (ech.row_at(f) >= 0) continue;
    std::vector<SparseVec::Entry> raw{{f, Scalar(1)}};
    for (std::size_t r = 0; r < ech.rank(); ++r) {
      Scalar a = ech.rows()[r].at(f);
      if (!a.is_zero()) raw.emplace_back(ech.pivots()[r], -a);
    }
    vecs.push_back(SparseVec::from_unsorted(std::move(raw)));
  }
  return Subspace::span(n, vecs);
}

Subspace kernel(const LinMap& f) { return kernel_of_columns(f.rows(), f.columns()); }

Quotient cokernel_of_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
  return Quotient::of_relations(rows, columns);
}

Quotient cokernel(const LinMap& f) { return cokernel_of_columns(f.rows(), f.columns()); }

SparseVec solve_preimage(const LinMap& f, const SparseVec& v) {
  const std::size_t n = f.cols();
  std::vector<SparseVec> cols = f.columns();
  cols.push_back(v);
  RowEchelon ech(n + 1);
  for (auto& r : rows_of(f.rows(), cols)) {
    if (!r.is_zero()) ech.insert(std::move(r));
  }
  ech.make_reduced();
  if (ech.row_at(n) >= 0) throw NoPreimage("vector " + v.str() + " is not in the image");
  std::vector<SparseVec::Entry> x;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    Scalar a = ech.rows()[r].at(n);
    if (!a.is_zero()) x.emplace_back(ech.pivots()[r], a);
  }
  return SparseVec::from_unsorted(std::move(x));
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  const std::size_t rows = f.rows() * g.rows();
  std::vector<SparseVec> cols;
  cols.reserve(f.cols() * g.cols());
  for (std::size_t i = 0; i < f.cols(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::vector<SparseVec::Entry> raw;
      for (const auto& [r, a] : f.column(i).entries()) {
        for (const auto& [s, b] : g.column(j).entries()) raw.emplace_back(r * g.rows() + s, a * b);
      }
      cols.push_back(SparseVec::from_sorted(std::move(raw)));
    }
  }
  return LinMap::from_columns(rows, cols);
}

LinMap twist(std::size_t dim_v, std::size_t dim_w) {
  std::vector<SparseVec> cols;
  cols.reserve(dim_v * dim_w);
  for (std::size_t i = 0; i < dim_v; ++i) {
    for (std::size_t j = 0; j < dim_w; ++j) cols.push_back(SparseVec::unit(j * dim_v + i));
  }
  return LinMap::from_columns(dim_v * dim_w, cols);
}

LinMap corestrict(const LinMap& f, const Subspace& s) {
  if (f.rows() != s.ambient_dim()) throw DimensionMismatch("corestriction target does not match the ambient space");
  std::vector<SparseVec> cols;
  cols.reserve(f.cols());
  for (std::size_t c = 0; c < f.cols(); ++c) cols.push_back(s.coordinates_or_throw(f.column(c), c));
  return LinMap::from_columns(s.dim(), cols);
}

LinMap extend_from_basis(const Subspace& domain, std::size_t rows, const std::vector<SparseVec>& values) {
  if (values.size() != domain.dim()) throw DimensionMismatch("one value per basis vector expected");
  std::vector<SparseVec> cols(domain.ambient_dim());
  for (std::size_t k = 0; k < values.size(); ++k) cols[domain.pivots()[k]] = values[k];
  return LinMap::from_columns(rows, cols);
}

}  // namespace bicoalg
