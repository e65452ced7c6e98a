#include "sdep/multidegree.hpp"

#include <algorithm>

#include "sdep/error.hpp"

namespace sdep {

MultiDegree MultiDegree::unit(std::size_t n, std::size_t k) {
  MultiDegree d(n);
  d.c_[k] = 1;
  return d;
}

bool MultiDegree::precedes(const MultiDegree& o) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] > o.c_[i]) return false;
  }
  return true;
}

bool MultiDegree::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool MultiDegree::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  MultiDegree d = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) d.c_[i] += o.c_[i];
  return d;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  MultiDegree d = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) d.c_[i] -= o.c_[i];
  return d;
}

MultiDegree MultiDegree::meet(const MultiDegree& o) const {
  MultiDegree d = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) d.c_[i] = std::min(c_[i], o.c_[i]);
  return d;
}

MultiDegree MultiDegree::join(const MultiDegree& o) const {
  MultiDegree d = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) d.c_[i] = std::max(c_[i], o.c_[i]);
  return d;
}

std::string MultiDegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

VarSet VarSet::all(std::size_t n) {
  return VarSet(n >= 32 ? ~0U : ((1U << n) - 1));
}

VarSet VarSet::of(std::initializer_list<std::size_t> indices) {
  VarSet s;
  for (std::size_t j : indices) s.insert(j);
  return s;
}

std::vector<std::size_t> VarSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 32; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::string VarSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t j : members()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(j + 1);
  }
  return s + "}";
}

VarSet support(const MultiDegree& d) {
  VarSet s;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] != 0) s.insert(j);
  }
  return s;
}

VarSet saturated_coordinates(const MultiDegree& d, const MultiDegree& g) {
  VarSet s;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] == g[j]) s.insert(j);
  }
  return s;
}

Box::Box(MultiDegree upper) : upper_(std::move(upper)) {
  if (upper_.size() > 32) {
    throw Error(ErrorKind::kDomain, "at most 32 ring variables are supported");
  }
  if (!upper_.is_nonnegative()) {
    throw Error(ErrorKind::kRange, "box corner " + upper_.to_string() + " is negative");
  }
  stride_.assign(upper_.size(), 1);
  size_ = 1;
  for (std::size_t i = upper_.size(); i-- > 0;) {
    stride_[i] = size_;
    size_ *= static_cast<std::size_t>(upper_[i] + 1);
  }
}

bool Box::contains(const MultiDegree& d) const {
  if (d.size() != upper_.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0 || d[i] > upper_[i]) return false;
  }
  return true;
}

std::size_t Box::index(const MultiDegree& d) const {
  if (!contains(d)) {
    throw Error(ErrorKind::kRange, d.to_string() + " outside [0," + upper_.to_string() + "]");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d.size(); ++i) idx += stride_[i] * static_cast<std::size_t>(d[i]);
  return idx;
}

MultiDegree Box::degree(std::size_t index) const {
  MultiDegree d(upper_.size());
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    d[i] = static_cast<int>(index / stride_[i]);
    index %= stride_[i];
  }
  return d;
}

std::vector<MultiDegree> Box::degrees() const {
  std::vector<MultiDegree> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(degree(i));
  return out;
}

std::vector<MultiDegree> interval_degrees(const MultiDegree& lower, const MultiDegree& upper) {
  std::vector<MultiDegree> out;
  if (!lower.precedes(upper)) return out;
  MultiDegree cur = lower;
  const std::size_t n = lower.size();
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < upper[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = lower[j];
        break;
      }
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace sdep
