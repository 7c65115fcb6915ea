#include "bicoalg/sparse.hpp"

#include <algorithm>

namespace bicoalg {

SparseVec SparseVec::from_unsorted(std::vector<Entry> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  SparseVec v;
  v.entries_.reserve(raw.size());
  for (auto& e : raw) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
      if (v.entries_.back().second.is_zero()) v.entries_.pop_back();
    } else if (!e.second.is_zero()) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

SparseVec SparseVec::from_sorted(std::vector<Entry> sorted) {
  SparseVec v;
  v.entries_ = std::move(sorted);
  return v;
}

SparseVec SparseVec::unit(std::size_t i, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(i, std::move(value));
  return v;
}

Scalar SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Scalar{};
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = i->second + a * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& a) const {
  SparseVec v;
  if (a.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) v.entries_.emplace_back(i, a * x);
  return v;
}

SparseVec operator+(const SparseVec& x, const SparseVec& y) {
  SparseVec r = x;
  r.axpy(Scalar(1), y);
  return r;
}

SparseVec operator-(const SparseVec& x, const SparseVec& y) {
  SparseVec r = x;
  r.axpy(Scalar(-1), y);
  return r;
}

bool operator==(const SparseVec& x, const SparseVec& y) {
  if (x.entries_.size() != y.entries_.size()) return false;
  for (std::size_t k = 0; k < x.entries_.size(); ++k) {
    if (x.entries_[k].first != y.entries_[k].first || !(x.entries_[k].second == y.entries_[k].second)) return false;
  }
  return true;
}

std::string SparseVec::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k > 0) s += ", ";
    s += std::to_string(entries_[k].first) + ": " + entries_[k].second.str();
  }
  return s + "}";
}

}  // namespace bicoalg
