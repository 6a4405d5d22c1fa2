#include "plk/tensor.hpp"

#include <set>
#include <stdexcept>

namespace plk {

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {}

void Tensor::check_index(const Index& idx) const {
  if (idx.size() != shape_.size()) throw std::out_of_range("tensor index rank mismatch");
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (idx[a] >= shape_[a]) throw std::out_of_range("tensor index out of range");
}

Scalar Tensor::get(const Index& idx) const {
  check_index(idx);
  auto it = entries_.find(idx);
  return it == entries_.end() ? Scalar() : it->second;
}

void Tensor::set(const Index& idx, const Scalar& v) {
  check_index(idx);
  if (v.is_zero()) entries_.erase(idx);
  else entries_[idx] = v;
}

void Tensor::add(const Index& idx, const Scalar& v) {
  if (v.is_zero()) return;
  check_index(idx);
  auto [it, inserted] = entries_.try_emplace(idx, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& [k, v] : out.entries_) v = -v;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.shape_ != shape_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, v] : o.entries_) add(k, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.shape_ != shape_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, v] : o.entries_) add(k, -v);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= s;
  return *this;
}

Tensor tensor_contract(const Tensor& a, const Tensor& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::set<std::size_t> used_a, used_b;
  for (auto [pa, pb] : pairs) {
    if (pa >= a.rank() || pb >= b.rank()) throw std::invalid_argument("contraction axis out of range");
    if (!used_a.insert(pa).second || !used_b.insert(pb).second)
      throw std::invalid_argument("contraction axis repeated");
    if (a.extent(pa) != b.extent(pb)) throw std::invalid_argument("contraction dimension mismatch");
  }
  std::vector<std::size_t> free_a, free_b, shape;
  for (std::size_t ax = 0; ax < a.rank(); ++ax)
    if (!used_a.count(ax)) {
      free_a.push_back(ax);
      shape.push_back(a.extent(ax));
    }
  for (std::size_t ax = 0; ax < b.rank(); ++ax)
    if (!used_b.count(ax)) {
      free_b.push_back(ax);
      shape.push_back(b.extent(ax));
    }

  // Bucket b's entries by their contracted coordinates.
  std::map<Index, std::vector<const std::pair<const Index, Scalar>*>> buckets;
  for (const auto& e : b.entries()) {
    Index key;
    for (auto [pa, pb] : pairs) key.push_back(e.first[pb]);
    buckets[key].push_back(&e);
  }

  Tensor out(shape);
  Index key, idx(shape.size());
  for (const auto& [ia, va] : a.entries()) {
    key.clear();
    for (auto [pa, pb] : pairs) key.push_back(ia[pa]);
    auto it = buckets.find(key);
    if (it == buckets.end()) continue;
    std::size_t n = 0;
    for (auto ax : free_a) idx[n++] = ia[ax];
    for (const auto* eb : it->second) {
      std::size_t m = n;
      for (auto ax : free_b) idx[m++] = eb->first[ax];
      out.add(idx, va * eb->second);
    }
  }
  return out;
}

Tensor tensor_outer(const Tensor& a, const Tensor& b) { return tensor_contract(a, b, {}); }

Tensor kronecker_delta(std::size_t n) {
  Tensor d({n, n});
  for (std::size_t i = 0; i < n; ++i) d.set({i, i}, 1);
  return d;
}

Tensor vector_tensor(const std::vector<Scalar>& v) {
  Tensor t({v.size()});
  for (std::size_t i = 0; i < v.size(); ++i) t.set({i}, v[i]);
  return t;
}

}  // namespace plk
