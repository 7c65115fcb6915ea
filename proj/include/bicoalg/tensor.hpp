#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bicoalg/linalg.hpp"

namespace bicoalg {

/// A linear map that is only defined on a subspace of its (multi-leg) source.
/// The total matrix is any extension; applications check membership first.
struct RestrictedMap {
  std::string name;
  LinMap total;
  std::shared_ptr<const Subspace> domain;
  std::vector<std::size_t> domain_shape;  // leg dimensions of the source
};

/// Element of V_0 ⊗ ... ⊗ V_{n-1}, stored sparsely on the row-major flattening.
/// Sweedler-style composites are evaluated by acting on ranges of legs.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<std::size_t> shape, SparseVec data);
  static Tensor basis(std::vector<std::size_t> shape, std::size_t flat_index);

  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  const SparseVec& data() const noexcept { return data_; }
  std::size_t legs() const noexcept { return shape_.size(); }
  std::size_t size() const;
  bool is_zero() const noexcept { return data_.is_zero(); }

  /// Applies f to legs [first, first + count), whose flattening must have
  /// f.cols() entries. The image legs are `out_shape` (empty drops the legs,
  /// which requires f.rows() == 1); by default a single leg of f.rows().
  Tensor apply(const LinMap& f, std::size_t first, std::size_t count = 1) const;
  Tensor apply(const LinMap& f, std::size_t first, std::size_t count, const std::vector<std::size_t>& out_shape) const;

  /// Like apply, but every slice over the other legs must lie in m.domain;
  /// otherwise NotInCotensorDomain.
  Tensor apply_restricted(const RestrictedMap& m, std::size_t first) const;

  /// Result leg k is input leg perm[k].
  Tensor permute(const std::vector<std::size_t>& perm) const;
  /// Swaps legs i and i + 1.
  Tensor swap(std::size_t i) const;
  /// Replaces legs [first, first + count) by coordinates in s, or NotInSubspace.
  Tensor corestrict(const Subspace& s, std::size_t first, std::size_t count) const;
  /// Inverse of corestrict: one leg of coordinates becomes `ambient_shape` legs.
  Tensor embed(const Subspace& s, std::size_t leg, const std::vector<std::size_t>& ambient_shape) const;
  /// Merges legs [first, first + count) into one leg (no data change).
  Tensor merge(std::size_t first, std::size_t count) const;
  /// Splits a leg into `parts` (no data change).
  Tensor split(std::size_t leg, const std::vector<std::size_t>& parts) const;

  /// True when every slice on legs [first, first + count) lies in s.
  bool slices_in(const Subspace& s, std::size_t first, std::size_t count) const;

  friend Tensor operator+(const Tensor& x, const Tensor& y);
  friend Tensor operator-(const Tensor& x, const Tensor& y);
  friend bool operator==(const Tensor& x, const Tensor& y);

  std::string str() const;

 private:
  std::vector<std::size_t> shape_;
  SparseVec data_;
};

}  // namespace bicoalg
