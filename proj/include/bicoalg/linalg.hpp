#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicoalg/linmap.hpp"
#include "bicoalg/sparse.hpp"

namespace bicoalg {

/// Incremental row echelon form over sparse rows.
///
/// Rows are stored with a leading 1; every stored row vanishes on the pivot
/// columns of the rows inserted before it. make_reduced() clears the remaining
/// pivot entries so the form becomes reduced.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols = 0) : row_at_col_(ncols, -1) {}

  /// Remainder of v after eliminating every pivot column.
  SparseVec reduce(SparseVec v) const;
  /// Adds v; returns false when v was already in the row span.
  bool insert(SparseVec v);
  void make_reduced();

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return row_at_col_.size(); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  long row_at(std::size_t col) const { return row_at_col_[col]; }

 private:
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_at_col_;
  bool reduced_ = false;
};

/// Subspace of k^ambient with a canonical basis: reduced echelon form, sorted
/// by pivot. Each basis vector is 1 at its own pivot and 0 at the others, so
/// the coordinates of a member are read off at the pivots.
class Subspace {
 public:
  Subspace() = default;
  /// Canonical basis of the span of `vectors`.
  static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors, std::string label = {});
  static Subspace full(std::size_t ambient, std::string label = {});

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::string& label() const noexcept { return label_; }

  bool contains(const SparseVec& v) const { return coordinates(v).has_value(); }
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  /// Coordinates, or NotInSubspace naming `column`.
  SparseVec coordinates_or_throw(const SparseVec& v, std::size_t column = 0) const;
  SparseVec embed(const SparseVec& coords) const;
  /// Dense ambient x dim matrix; built on demand.
  LinMap inclusion() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivots_;
  std::string label_;
};

/// Quotient of k^ambient by the span of some vectors. The quotient basis is
/// indexed by the non-pivot coordinates of the reduced echelon form of the
/// relations.
class Quotient {
 public:
  Quotient() = default;
  static Quotient of_relations(std::size_t ambient, const std::vector<SparseVec>& relations);

  std::size_t ambient_dim() const noexcept { return relations_.ncols(); }
  std::size_t dim() const noexcept { return free_.size(); }
  /// Rank of the relation span (the image being divided out).
  std::size_t image_rank() const noexcept { return relations_.rank(); }

  SparseVec project(const SparseVec& v) const;
  SparseVec lift(const SparseVec& q) const;
  LinMap projection() const;
  LinMap section() const;
  const std::vector<std::size_t>& free_columns() const noexcept { return free_; }

 private:
  RowEchelon relations_;
  std::vector<std::size_t> free_;
  std::vector<long> index_of_;
};

std::size_t rank(const LinMap& f);
/// Kernel of the map whose i-th column is columns[i] (target dimension `rows`).
Subspace kernel_of_columns(std::size_t rows, const std::vector<SparseVec>& columns);
Subspace kernel(const LinMap& f);
Quotient cokernel(const LinMap& f);
Quotient cokernel_of_columns(std::size_t rows, const std::vector<SparseVec>& columns);

/// Least-pivot solution of f(x) = v: free variables are set to zero.
SparseVec solve_preimage(const LinMap& f, const SparseVec& v);

/// f ⊗ g with row-major flattening index(i, j) = i * dim2 + j.
LinMap tensor_map(const LinMap& f, const LinMap& g);
/// Flip V ⊗ W -> W ⊗ V.
LinMap twist(std::size_t dim_v, std::size_t dim_w);

/// g with ι_S ∘ g = f, or NotInSubspace with the first bad column.
LinMap corestrict(const LinMap& f, const Subspace& s);

/// Total map on the ambient space that agrees with values[k] on basis vector k
/// of `domain` and vanishes on the non-pivot coordinates.
LinMap extend_from_basis(const Subspace& domain, std::size_t rows, const std::vector<SparseVec>& values);

}  // namespace bicoalg
