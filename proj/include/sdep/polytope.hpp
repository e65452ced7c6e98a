#ifndef SDEP_POLYTOPE_HPP
#define SDEP_POLYTOPE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdep/hilbert.hpp"
#include "sdep/module.hpp"

namespace sdep {

/// u(b, Z): the number of summands K[Z](-b) in a g-determined decomposition.
/// Z always contains {j : b_j = g_j}.
struct OmegaVariable {
  MultiDegree shift;
  VarSet z;

  friend auto operator<=>(const OmegaVariable&, const OmegaVariable&) = default;
  /// "u[b1,...,bn;z1,...]" with Z sorted and 1-based, e.g. "u[1,0;1,2]".
  std::string name() const;
  /// Same name with brackets and separators replaced for LP files.
  std::string lp_name() const;
  bool alive_at(const MultiDegree& a) const;
};

/// All (b, Z) with b <= g, Z containing the saturated coordinates of b and
/// |Z| >= min_depth. Ordered by b in box order, then Z by bitmask.
std::vector<OmegaVariable> omega_variables(const MultiDegree& g, std::size_t min_depth = 0);

/// sum coeffs[k].second * u[coeffs[k].first]  (= or <=)  rhs.
struct LinearRow {
  MultiDegree degree;
  /// Inequalities only: the shifts J.
  std::vector<MultiDegree> subset;
  std::vector<std::pair<std::size_t, long>> coeffs;
  long rhs = 0;
};

struct LinearSystem {
  std::size_t n = 0;
  FieldSpec field;
  MultiDegree g;
  std::size_t min_depth = 0;
  std::vector<OmegaVariable> variables;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;
  /// Largest |J| enumerated; nullopt when every subset was used.
  std::optional<std::size_t> max_subset;
  bool has_inequalities = false;

  /// True when the inequalities omit some subsets J.
  bool relaxation() const;
  std::optional<std::size_t> find(const std::string& name) const;
};

inline constexpr std::size_t kDefaultMaxSubset = 4;
/// Exhaustive subsets are refused above this many degrees in one [0, a].
inline constexpr std::size_t kMaxExhaustiveInterval = 20;

/// One equality per a in [0, g]: the summands alive at a number dim M_a.
LinearSystem build_hilbert_system(const GradedModule& gm, std::size_t min_depth = 0);

/// The Hilbert system plus, for every a and nonempty J in [0, a] with
/// |J| <= k, the bound sum_{b in J} #(summands with shift b alive at a)
/// <= dim sum_{b in J} X^(a-b) M_b. k = nullopt uses every J and throws
/// kResource if some [0, a] has more than kMaxExhaustiveInterval degrees.
LinearSystem build_stanley_inequalities(const GradedModule& gm,
                                        std::optional<std::size_t> k = kDefaultMaxSubset,
                                        std::size_t min_depth = 0, int threads = 1);

/// Plain-text integer program (grammar in docs/formats.md).
void write_sip(const LinearSystem& sys, std::ostream& out);
/// CPLEX LP format; names are lp_name().
void write_lp(const LinearSystem& sys, std::ostream& out);
/// Writes `<stem>.sip` and `<stem>.lp`.
void export_ip(const LinearSystem& sys, const std::string& stem);

/// u-vector of a decomposition. Throws kDomain if a summand is not in Omega.
std::vector<long> to_u_vector(const LinearSystem& sys, const HilbertDecomposition& d);
HilbertDecomposition from_u_vector(const LinearSystem& sys, const std::vector<long>& u);

/// Index of the first violated row, if any.
std::optional<std::size_t> violated_equality(const LinearSystem& sys, const std::vector<long>& u);
std::optional<std::size_t> violated_inequality(const LinearSystem& sys,
                                               const std::vector<long>& u);

struct SubsetViolation {
  MultiDegree degree;
  std::vector<MultiDegree> subset;
  long count = 0;
  std::size_t dim = 0;
};

/// Every subset-sum inequality, exactly: at each a only shifts of summands
/// alive at a can tighten a bound, so J ranges over subsets of those.
/// Throws kResource if more than kMaxExhaustiveInterval distinct shifts are
/// alive in one degree.
std::optional<SubsetViolation> stanley_inequality_violation(const GradedModule& gm,
                                                            const HilbertDecomposition& d);

/// Reads "name<TAB>value" lines ('#' comments, blank lines allowed; either
/// name form). Unlisted variables are 0. Throws kParse on malformed input and
/// kPrecondition when an equality fails.
HilbertDecomposition import_solution(const LinearSystem& sys, std::istream& in,
                                     const std::string& source = "<solution>");

}  // namespace sdep

#endif  // SDEP_POLYTOPE_HPP
