#include "bicoalg/tensor.hpp"

#include <map>
#include <numeric>

#include "bicoalg/errors.hpp"

namespace bicoalg {

namespace {

std::size_t product(const std::vector<std::size_t>& v, std::size_t first, std::size_t last) {
  std::size_t p = 1;
  for (std::size_t i = first; i < last; ++i) p *= v[i];
  return p;
}

std::string shape_str(const std::vector<std::size_t>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

// Slices of a tensor over legs [first, first+count), keyed by (outer, inner).
using SliceMap = std::map<std::pair<std::size_t, std::size_t>, std::vector<SparseVec::Entry>>;

SliceMap slices(const SparseVec& data, std::size_t mid, std::size_t inner) {
  SliceMap out;
  for (const auto& [idx, a] : data.entries()) {
    std::size_t i = idx % inner;
    std::size_t m = (idx / inner) % mid;
    std::size_t o = idx / (inner * mid);
    out[{o, i}].emplace_back(m, a);
  }
  return out;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape, SparseVec data) : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.extent() > size()) throw DimensionMismatch("tensor data outside shape " + shape_str(shape_));
}

Tensor Tensor::basis(std::vector<std::size_t> shape, std::size_t flat_index) {
  return {std::move(shape), SparseVec::unit(flat_index)};
}

std::size_t Tensor::size() const { return product(shape_, 0, shape_.size()); }

Tensor Tensor::apply(const LinMap& f, std::size_t first, std::size_t count) const {
  return apply(f, first, count, {f.rows()});
}

Tensor Tensor::apply(const LinMap& f, std::size_t first, std::size_t count, const std::vector<std::size_t>& out_shape) const {
  if (first + count > shape_.size()) throw DimensionMismatch("leg range outside tensor " + shape_str(shape_));
  const std::size_t mid = product(shape_, first, first + count);
  const std::size_t inner = product(shape_, first + count, shape_.size());
  if (f.cols() != mid) {
    throw DimensionMismatch("map with " + std::to_string(f.cols()) + " columns applied to legs of size " + std::to_string(mid) +
                            " in " + shape_str(shape_));
  }
  const std::size_t out_mid = product(out_shape, 0, out_shape.size());
  if (out_mid != f.rows()) throw DimensionMismatch("output legs do not match the map's row count");
  std::vector<SparseVec::Entry> raw;
  raw.reserve(data_.nnz() * 2);
  for (const auto& [idx, a] : data_.entries()) {
    std::size_t i = idx % inner;
    std::size_t m = (idx / inner) % mid;
    std::size_t o = idx / (inner * mid);
    for (const auto& [r, v] : f.column(m).entries()) raw.emplace_back((o * out_mid + r) * inner + i, a * v);
  }
  std::vector<std::size_t> shape(shape_.begin(), shape_.begin() + static_cast<long>(first));
  shape.insert(shape.end(), out_shape.begin(), out_shape.end());
  shape.insert(shape.end(), shape_.begin() + static_cast<long>(first + count), shape_.end());
  return {std::move(shape), SparseVec::from_unsorted(std::move(raw))};
}

bool Tensor::slices_in(const Subspace& s, std::size_t first, std::size_t count) const {
  const std::size_t mid = product(shape_, first, first + count);
  const std::size_t inner = product(shape_, first + count, shape_.size());
  if (mid != s.ambient_dim()) throw DimensionMismatch("slice size does not match subspace ambient dimension");
  for (auto& [key, entries] : slices(data_, mid, inner)) {
    if (!s.contains(SparseVec::from_sorted(std::move(entries)))) return false;
  }
  return true;
}

Tensor Tensor::apply_restricted(const RestrictedMap& m, std::size_t first) const {
  const std::size_t count = m.domain_shape.size();
  if (first + count > shape_.size()) throw DimensionMismatch("leg range outside tensor for " + m.name);
  for (std::size_t k = 0; k < count; ++k) {
    if (shape_[first + k] != m.domain_shape[k]) throw DimensionMismatch(m.name + " applied to legs of the wrong size");
  }
  const std::size_t mid = product(shape_, first, first + count);
  const std::size_t inner = product(shape_, first + count, shape_.size());
  for (auto& [key, entries] : slices(data_, mid, inner)) {
    SparseVec slice = SparseVec::from_sorted(std::move(entries));
    if (!m.domain->contains(slice)) {
      throw NotInCotensorDomain(m.name + " applied outside its cotensor domain: slice " + slice.str());
    }
  }
  return apply(m.total, first, count);
}

Tensor Tensor::permute(const std::vector<std::size_t>& perm) const {
  const std::size_t n = shape_.size();
  if (perm.size() != n) throw DimensionMismatch("permutation length differs from leg count");
  std::vector<std::size_t> shape(n);
  for (std::size_t k = 0; k < n; ++k) shape[k] = shape_.at(perm[k]);
  // stride of input leg j inside the output flattening
  std::vector<std::size_t> out_stride(n, 1);
  for (std::size_t k = n; k-- > 1;) out_stride[k - 1] = out_stride[k] * shape[k];
  std::vector<std::size_t> stride_of_input(n);
  for (std::size_t k = 0; k < n; ++k) stride_of_input[perm[k]] = out_stride[k];
  std::vector<SparseVec::Entry> raw;
  raw.reserve(data_.nnz());
  for (const auto& [idx, a] : data_.entries()) {
    std::size_t rest = idx;
    std::size_t out = 0;
    for (std::size_t j = n; j-- > 0;) {
      out += (rest % shape_[j]) * stride_of_input[j];
      rest /= shape_[j];
    }
    raw.emplace_back(out, a);
  }
  return {std::move(shape), SparseVec::from_unsorted(std::move(raw))};
}

Tensor Tensor::swap(std::size_t i) const {
  std::vector<std::size_t> perm(shape_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm.at(i), perm.at(i + 1));
  return permute(perm);
}

Tensor Tensor::corestrict(const Subspace& s, std::size_t first, std::size_t count) const {
  const std::size_t mid = product(shape_, first, first + count);
  const std::size_t inner = product(shape_, first + count, shape_.size());
  if (mid != s.ambient_dim()) throw DimensionMismatch("corestriction legs do not match subspace ambient dimension");
  std::vector<SparseVec::Entry> raw;
  for (auto& [key, entries] : slices(data_, mid, inner)) {
    SparseVec c = s.coordinates_or_throw(SparseVec::from_sorted(std::move(entries)), key.first * inner + key.second);
    for (const auto& [k, a] : c.entries()) raw.emplace_back((key.first * s.dim() + k) * inner + key.second, a);
  }
  std::vector<std::size_t> shape(shape_.begin(), shape_.begin() + static_cast<long>(first));
  shape.push_back(s.dim());
  shape.insert(shape.end(), shape_.begin() + static_cast<long>(first + count), shape_.end());
  return {std::move(shape), SparseVec::from_unsorted(std::move(raw))};
}

Tensor Tensor::embed(const Subspace& s, std::size_t leg, const std::vector<std::size_t>& ambient_shape) const {
  if (shape_.at(leg) != s.dim()) throw DimensionMismatch("embedding leg does not match subspace dimension");
  LinMap inc = LinMap::from_columns(s.ambient_dim(), s.basis());
  return apply(inc, leg, 1, ambient_shape);
}

Tensor Tensor::merge(std::size_t first, std::size_t count) const {
  std::vector<std::size_t> shape(shape_.begin(), shape_.begin() + static_cast<long>(first));
  shape.push_back(product(shape_, first, first + count));
  shape.insert(shape.end(), shape_.begin() + static_cast<long>(first + count), shape_.end());
  return {std::move(shape), data_};
}

Tensor Tensor::split(std::size_t leg, const std::vector<std::size_t>& parts) const {
  if (product(parts, 0, parts.size()) != shape_.at(leg)) throw DimensionMismatch("split parts do not multiply to the leg size");
  std::vector<std::size_t> shape(shape_.begin(), shape_.begin() + static_cast<long>(leg));
  shape.insert(shape.end(), parts.begin(), parts.end());
  shape.insert(shape.end(), shape_.begin() + static_cast<long>(leg + 1), shape_.end());
  return {std::move(shape), data_};
}

Tensor operator+(const Tensor& x, const Tensor& y) {
  if (x.shape_ != y.shape_) throw DimensionMismatch("adding tensors of shapes " + shape_str(x.shape_) + " and " + shape_str(y.shape_));
  return {x.shape_, x.data_ + y.data_};
}

Tensor operator-(const Tensor& x, const Tensor& y) {
  if (x.shape_ != y.shape_) throw DimensionMismatch("subtracting tensors of shapes " + shape_str(x.shape_) + " and " + shape_str(y.shape_));
  return {x.shape_, x.data_ - y.data_};
}

bool operator==(const Tensor& x, const Tensor& y) { return x.shape_ == y.shape_ && x.data_ == y.data_; }

std::string Tensor::str() const { return shape_str(shape_) + data_.str(); }

}  // namespace bicoalg
