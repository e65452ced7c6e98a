#ifndef SDEP_MULTIDEGREE_HPP
#define SDEP_MULTIDEGREE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sdep {

/// A point of N^n. Ordered lexicographically for containers; the
/// componentwise partial order is `precedes`.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t n, int fill = 0) : c_(n, fill) {}
  explicit MultiDegree(std::vector<int> components) : c_(std::move(components)) {}
  MultiDegree(std::initializer_list<int> components) : c_(components) {}

  static MultiDegree unit(std::size_t n, std::size_t k);

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& components() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  /// Componentwise a <= b.
  bool precedes(const MultiDegree& o) const;
  bool is_nonnegative() const;
  bool is_zero() const;

  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree operator-(const MultiDegree& o) const;
  /// Componentwise minimum.
  MultiDegree meet(const MultiDegree& o) const;
  /// Componentwise maximum.
  MultiDegree join(const MultiDegree& o) const;

  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

  /// "(1,0,2)".
  std::string to_string() const;

 private:
  std::vector<int> c_;
};

/// A subset of the ring variables {1..n} (n <= 32), stored 0-based.
class VarSet {
 public:
  VarSet() = default;
  static VarSet from_bits(std::uint32_t bits) { return VarSet(bits); }
  static VarSet all(std::size_t n);
  /// Indices are 0-based.
  static VarSet of(std::initializer_list<std::size_t> indices);

  bool contains(std::size_t j) const { return (bits_ >> j) & 1U; }
  void insert(std::size_t j) { bits_ |= (1U << j); }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  bool is_subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::uint32_t bits() const { return bits_; }
  /// 0-based members, ascending.
  std::vector<std::size_t> members() const;

  friend auto operator<=>(const VarSet&, const VarSet&) = default;

  /// 1-based listing, e.g. "{1,3}".
  std::string to_string() const;

 private:
  explicit VarSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// supp(d) for d in N^n.
VarSet support(const MultiDegree& d);
/// {j : d_j == g_j}.
VarSet saturated_coordinates(const MultiDegree& d, const MultiDegree& g);

/// The box [0, upper] with a dense index in lexicographic order; index order
/// is a linear extension of the componentwise partial order.
class Box {
 public:
  Box() = default;
  explicit Box(MultiDegree upper);

  const MultiDegree& upper() const { return upper_; }
  std::size_t dimension() const { return upper_.size(); }
  std::size_t size() const { return size_; }
  bool contains(const MultiDegree& d) const;
  /// Throws kRange if d lies outside the box.
  std::size_t index(const MultiDegree& d) const;
  MultiDegree degree(std::size_t index) const;
  /// All degrees in index order.
  std::vector<MultiDegree> degrees() const;

 private:
  MultiDegree upper_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

/// Degrees of the interval [lower, upper] in lexicographic order.
std::vector<MultiDegree> interval_degrees(const MultiDegree& lower, const MultiDegree& upper);

}  // namespace sdep

#endif  // SDEP_MULTIDEGREE_HPP
