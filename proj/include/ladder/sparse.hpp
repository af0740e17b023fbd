#pragma once

#include "ladder/scalar.hpp"

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace ladder {

/// Finite linear combination over an ordered index set, kept canonical:
/// no stored zero coefficients, iteration in index order. Two vectors are
/// equal iff they represent the same combination.
template <class Index>
class SparseVector {
 public:
  using map_type = std::map<Index, Scalar>;
  using const_iterator = typename map_type::const_iterator;
  using index_type = Index;

  SparseVector() = default;

  SparseVector(std::initializer_list<std::pair<Index, Scalar>> terms) {
    for (const auto& [index, coeff] : terms) add(index, coeff);
  }

  static SparseVector unit(const Index& index) {
    SparseVector v;
    v.entries_.emplace(index, Scalar(1));
    return v;
  }

  void add(const Index& index, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = entries_.try_emplace(index, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) entries_.erase(it);
    }
  }

  /// this += factor * other
  void add_scaled(const SparseVector& other, const Scalar& factor) {
    if (factor == 0) return;
    for (const auto& [index, coeff] : other.entries_) add(index, coeff * factor);
  }

  Scalar coeff(const Index& index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  bool contains(const Index& index) const { return entries_.count(index) != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const map_type& entries() const { return entries_; }

  SparseVector& operator+=(const SparseVector& rhs) {
    add_scaled(rhs, Scalar(1));
    return *this;
  }
  SparseVector& operator-=(const SparseVector& rhs) {
    add_scaled(rhs, Scalar(-1));
    return *this;
  }
  SparseVector& operator*=(const Scalar& factor) {
    if (factor == 0) {
      entries_.clear();
    } else {
      for (auto& entry : entries_) entry.second *= factor;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector lhs, const SparseVector& rhs) { return lhs += rhs; }
  friend SparseVector operator-(SparseVector lhs, const SparseVector& rhs) { return lhs -= rhs; }
  friend SparseVector operator-(SparseVector v) { return v *= Scalar(-1); }
  friend SparseVector operator*(const Scalar& factor, SparseVector v) { return v *= factor; }
  friend SparseVector operator*(SparseVector v, const Scalar& factor) { return v *= factor; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

  /// Applies an index map; colliding images are summed.
  template <class OtherIndex, class F>
  SparseVector<OtherIndex> reindex(F&& f) const {
    SparseVector<OtherIndex> out;
    for (const auto& [index, coeff] : entries_) out.add(f(index), coeff);
    return out;
  }

 private:
  map_type entries_;
};

/// Σ scalar_i · vector_i, canonical.
template <class Index>
SparseVector<Index> lin_combine(const std::vector<std::pair<Scalar, SparseVector<Index>>>& terms) {
  SparseVector<Index> out;
  for (const auto& [factor, vec] : terms) out.add_scaled(vec, factor);
  return out;
}

}  // namespace ladder
