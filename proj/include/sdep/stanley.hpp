#ifndef SDEP_STANLEY_HPP
#define SDEP_STANLEY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdep/hilbert.hpp"
#include "sdep/module.hpp"
#include "sdep/multipoly.hpp"

namespace sdep {

/// A_a: rows are the canonical basis of M_a, columns the summands in C(a).
/// Column i holds the coordinates of X^(a - S_i) m_i for the generic element
/// m_i = sum_j Y[i,j] b_{S_i,j}.
struct DegreeMatrix {
  MultiDegree degree;
  std::vector<std::size_t> columns;
  PolyMatrix matrix;
};

struct SymbolicMatrixFamily {
  FieldSpec field;
  MultiDegree g;
  /// The index set of generic variables, in canonical order.
  std::vector<GenericVar> variables;
  /// One matrix per a in [0, g], in box order (empty pieces give 0x0 matrices).
  std::vector<DegreeMatrix> matrices;

  const DegreeMatrix& at(const MultiDegree& a) const;
};

/// Throws kPrecondition if validate_decomposition fails.
SymbolicMatrixFamily build_matrices(const GradedModule& gm, const HilbertDecomposition& d,
                                    int threads = 1);

enum class CheckMode {
  kAuto,         ///< transversal when some |C(a)| > 6 over Q, symbolic otherwise; unified over F_p
  kSymbolic,     ///< nonvanishing of every det A_a (infinite fields)
  kFinite,       ///< reduced product of all determinants (finite fields)
  kUnified,      ///< exponent bound decides between the two above
  kTransversal,  ///< per-degree independent transversals (infinite fields)
  kRandomized,   ///< sampled witness, exact fallback; never certifies not_induced
};

const char* to_string(CheckMode mode);
/// "auto", "symbolic", "finite", "unified", "transversal", "randomized".
CheckMode parse_check_mode(const std::string& text);

struct CheckReport {
  bool induced = false;
  /// The route that produced the verdict.
  CheckMode mode = CheckMode::kSymbolic;
  std::optional<MultiDegree> failing_degree;
  /// Finite-field route only: whether the reduced product vanished.
  std::optional<bool> reduced_product_zero;
  /// Randomized route only: the sampled point that verified.
  std::optional<Assignment> sample;
  std::string detail;
};

inline constexpr std::size_t kDefaultTermBudget = 1'000'000;
inline constexpr std::size_t kSymbolicMaxColumns = 6;

CheckReport check_infinite(const SymbolicMatrixFamily& fam, int threads = 1);
/// Expands P = prod det A_a reducing exponents modulo Y^q - Y after every
/// factor; induced iff the result is nonzero. Throws kMode over Q and
/// kResource when an intermediate product exceeds `term_budget` terms.
CheckReport check_finite(const SymbolicMatrixFamily& fam, std::uint64_t q,
                         std::size_t term_budget = kDefaultTermBudget);
/// Over Q behaves as check_infinite. Over F_q bounds the largest exponent of P
/// factor by factor; when the bound is below q the reduction cannot change P
/// and the per-factor test decides, otherwise falls back to check_finite.
CheckReport check_unified(const SymbolicMatrixFamily& fam,
                          std::size_t term_budget = kDefaultTermBudget);
/// For every a, asks for linearly independent v_i in X^(a - S_i) M_{S_i},
/// i in C(a), via matroid intersection. Throws kMode over finite fields.
CheckReport check_transversal(const GradedModule& gm, const HilbertDecomposition& d,
                              int threads = 1);

/// True iff the subspaces admit linearly independent representatives, one
/// from each (all must share one ambient space).
bool has_independent_transversal(const std::vector<Subspace>& spaces);

struct CheckOptions {
  CheckMode mode = CheckMode::kAuto;
  int threads = 1;
  std::size_t term_budget = kDefaultTermBudget;
  std::uint64_t seed = 1;
  std::size_t random_samples = 4;
};

/// Validates d, then dispatches on options.mode.
CheckReport check_decomposition(const GradedModule& gm, const HilbertDecomposition& d,
                                const CheckOptions& options = {});

struct DegreeCheck {
  MultiDegree degree;
  std::size_t size = 0;
  std::size_t rank = 0;
};

struct StanleyWitness {
  Assignment values;
  std::vector<DegreeCheck> transcript;
};

struct WitnessVerification {
  bool ok = true;
  std::optional<MultiDegree> failing_degree;
  std::vector<DegreeCheck> transcript;
};

/// Evaluates every A_a at the assignment with plain linear algebra and checks
/// full rank. Throws kUnboundVariable if a needed value is missing.
WitnessVerification verify_witness(const GradedModule& gm, const HilbertDecomposition& d,
                                   const Assignment& values, int threads = 1);

struct WitnessOptions {
  /// Candidates tried in (max entry, lexicographic) order over Q.
  std::size_t ordered_budget = 20'000;
  /// Seeded random points in [1, 2^20] tried over Q after that.
  std::size_t random_attempts = 256;
  std::uint64_t seed = 1;
  /// Backtracking nodes allowed over F_q.
  std::size_t finite_node_budget = 2'000'000;
};

/// Finds values y[i,j] making every A_a(y) invertible. Throws kNoWitness when
/// the budget runs out (over F_q this also covers "no witness exists").
StanleyWitness extract_witness(const GradedModule& gm, const HilbertDecomposition& d,
                               const WitnessOptions& options = {});

struct SdepthOptions {
  CheckOptions check;
  WitnessOptions witness;
};

struct SdepthResult {
  Depth depth;
  HilbertDecomposition decomposition;
  StanleyWitness witness;
  CheckReport report;
  std::size_t decompositions_tested = 0;
};

/// Tries s = n, n-1, ..., 0 and returns the first s with a Hilbert partition
/// whose induced decomposition passes the Stanley check, with a witness.
SdepthResult sdepth(const GradedModule& gm, const SdepthOptions& options = {});

}  // namespace sdep

#endif  // SDEP_STANLEY_HPP
