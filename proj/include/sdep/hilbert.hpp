#ifndef SDEP_HILBERT_HPP
#define SDEP_HILBERT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdep/module.hpp"
#include "sdep/multidegree.hpp"

namespace sdep {

/// Stanley/Hilbert depth value; the zero module has infinite depth.
struct Depth {
  std::optional<std::size_t> value;

  static Depth infinite() { return Depth{}; }
  static Depth finite(std::size_t v) { return Depth{v}; }
  bool is_infinite() const { return !value.has_value(); }
  /// "inf" or the decimal value.
  std::string to_string() const;
  friend bool operator==(const Depth&, const Depth&) = default;
};

/// Coefficients of the Hilbert series truncated to the box [0, g].
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(MultiDegree g);

  const MultiDegree& g() const { return box_.upper(); }
  const Box& box() const { return box_; }
  long operator[](const MultiDegree& a) const { return coeff_[box_.index(a)]; }
  long& operator[](const MultiDegree& a) { return coeff_[box_.index(a)]; }
  const std::vector<long>& coefficients() const { return coeff_; }
  std::vector<long>& coefficients() { return coeff_; }
  long total() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.box_.upper() == b.box_.upper() && a.coeff_ == b.coeff_;
  }

  std::string to_string() const;

 private:
  Box box_;
  std::vector<long> coeff_;
};

TruncatedSeries truncated_series(const GradedModule& gm);

struct Interval {
  MultiDegree lower;
  MultiDegree upper;

  friend auto operator<=>(const Interval&, const Interval&) = default;
  std::string to_string() const;
};

/// Indicator series Q[a,b] on the box [0, g]. Throws kRange unless a <= b <= g.
TruncatedSeries interval_poly(const Interval& iv, const MultiDegree& g);

struct HilbertPartition {
  std::vector<Interval> intervals;

  /// Sorts intervals so equal multisets compare equal.
  void canonicalize();
  friend auto operator<=>(const HilbertPartition&, const HilbertPartition&) = default;
};

/// One summand K[Z](-s) of a Hilbert decomposition.
struct Summand {
  VarSet vars;
  MultiDegree shift;

  /// True if K[vars](-shift) is nonzero in degree a.
  bool alive_at(const MultiDegree& a) const;
  friend auto operator<=>(const Summand&, const Summand&) = default;
  std::string to_string() const;
};

struct HilbertDecomposition {
  std::vector<Summand> summands;

  /// min |Z_i|; infinite for the empty decomposition.
  Depth depth() const;
  void canonicalize();
  /// C(a): indices of summands alive at a, ascending.
  std::vector<std::size_t> contributing(const MultiDegree& a) const;
  friend auto operator<=>(const HilbertDecomposition&, const HilbertDecomposition&) = default;
};

/// Sum of the interval polynomials of a partition over [0, g].
TruncatedSeries partition_series(const HilbertPartition& p, const MultiDegree& g);

/// The decomposition induced by the intervals: for [a,b] one summand
/// K[Z_b](-c) per c in G[a,b] = {c in [a,b] : c_j = a_j whenever b_j = g_j},
/// with Z_b = {j : b_j = g_j}. No check against a series.
HilbertDecomposition induced_decomposition(const HilbertPartition& p, const MultiDegree& g);

/// As induced_decomposition, after checking that the intervals sum to
/// `series`. Throws kPartitionMismatch otherwise.
HilbertDecomposition partition_to_decomposition(const HilbertPartition& p,
                                                const TruncatedSeries& series);

/// Inverse direction for g-determined decompositions: summand (Z, s) becomes
/// the interval [s, b] with b_j = g_j for j in Z and b_j = s_j otherwise.
HilbertPartition decomposition_to_partition(const HilbertDecomposition& d, const MultiDegree& g);

struct ValidationResult {
  bool ok = true;
  std::optional<MultiDegree> degree;
  std::string reason;
};

/// Checks the g-determined shape (s <= g, {j : s_j = g_j} inside Z) and that
/// the number of summands alive at each a in [0, g] equals dim M_a.
ValidationResult validate_decomposition(const HilbertDecomposition& d, const GradedModule& gm);

struct EnumerationStats {
  std::size_t partitions = 0;
  std::size_t nodes = 0;
  bool stopped = false;
};

/// Return false to stop the enumeration.
using PartitionVisitor = std::function<bool(const HilbertPartition&)>;

/// Depth-first enumeration of all Hilbert partitions of `series` whose
/// intervals [a,b] satisfy rho(b) = |{j : b_j = g_j}| >= min_depth. Always
/// covers the lexicographically smallest degree with positive residual; covers
/// are tried by descending rho(b), then lexicographically. Each multiset is
/// emitted once, canonicalized.
EnumerationStats enumerate_partitions(const TruncatedSeries& series, std::size_t min_depth,
                                      const PartitionVisitor& visitor);

/// Largest s admitting a partition of depth >= s; infinite for the zero module.
Depth hdepth(const GradedModule& gm);

}  // namespace sdep

#endif  // SDEP_HILBERT_HPP
