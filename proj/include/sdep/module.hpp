#ifndef SDEP_MODULE_HPP
#define SDEP_MODULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdep/linalg.hpp"
#include "sdep/multidegree.hpp"
#include "sdep/scalar.hpp"

namespace sdep {

/// coeff * X^shift * e_gen (gen is 0-based).
struct RelationTerm {
  std::size_t gen = 0;
  MultiDegree shift;
  Scalar coeff;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

/// A finitely generated Z^n-graded module given by generators e_1..e_m with
/// degrees and homogeneous relations among them.
struct ModulePresentation {
  std::size_t n = 0;
  FieldSpec field;
  std::vector<MultiDegree> generators;
  std::vector<Relation> relations;

  /// Degree of relation r. Throws kHomogeneity if its terms disagree and
  /// kShape for a bad generator index or degree length.
  MultiDegree relation_degree(std::size_t r) const;
  /// Componentwise max over all generator and relation degrees (zero module: 0).
  MultiDegree default_g() const;
  /// Shape, homogeneity and non-negativity checks.
  void validate() const;
};

/// Monomial ideal generated by X^u for u in `exponents`, presented by its
/// minimal generators and all pairwise Taylor relations.
ModulePresentation monomial_ideal(std::size_t n, const FieldSpec& field,
                                  const std::vector<MultiDegree>& exponents);
/// R / (X^u : u in exponents).
ModulePresentation quotient_by_monomial_ideal(std::size_t n, const FieldSpec& field,
                                              const std::vector<MultiDegree>& exponents);
/// Direct sum of R(-s) over the given shifts.
ModulePresentation free_module(std::size_t n, const FieldSpec& field,
                               const std::vector<MultiDegree>& shifts);
/// Throws kShape if the summands disagree on n or the field.
ModulePresentation direct_sum(const std::vector<ModulePresentation>& summands);
/// The maximal ideal (X_1, ..., X_n).
ModulePresentation maximal_ideal(std::size_t n, const FieldSpec& field);

/// The graded piece M_a = span{X^(a - deg e_i) e_i : deg e_i <= a} / R_a.
struct GradedPiece {
  MultiDegree degree;
  /// Generator indices spanning the ambient space, ascending.
  std::vector<std::size_t> ambient;
  Subspace relations;
  /// Ambient columns whose cosets form the canonical basis (non-pivot, ascending).
  std::vector<std::size_t> basis_columns;

  std::size_t dim() const { return basis_columns.size(); }
  std::size_t ambient_dim() const { return ambient.size(); }
  /// Coordinates, in the canonical basis, of the coset of an ambient vector.
  Vector coordinates(Vector ambient_vector) const;
  /// Position of generator `gen` in the ambient list, or nullopt.
  std::optional<std::size_t> ambient_position(std::size_t gen) const;
};

enum class GBound {
  kEnforce,  ///< reject presentations with degrees outside [0, g]
  kDiagnose, ///< accept them, so verify_g_determined can report the failure
};

/// A module with all graded pieces and the multiplication maps X_k computed on
/// the box [0, g + 1]. Immutable after build.
class GradedModule {
 public:
  /// Throws kPresentationExceedsG if a generator or relation degree is not
  /// <= g, plus whatever ModulePresentation::validate throws. `threads` > 1
  /// computes the pieces with OpenMP; the result is identical.
  static GradedModule build(ModulePresentation pres, std::optional<MultiDegree> g = {},
                            int threads = 1, GBound bound = GBound::kEnforce);

  const ModulePresentation& presentation() const { return pres_; }
  std::size_t n() const { return pres_.n; }
  const FieldSpec& field() const { return pres_.field; }
  const MultiDegree& g() const { return g_; }
  /// The computed box [0, g + 1].
  const Box& box() const { return box_; }
  /// The box [0, g].
  const Box& g_box() const { return g_box_; }

  /// Throws kRange outside [0, g + 1].
  const GradedPiece& piece(const MultiDegree& a) const;
  std::size_t hilbert_function(const MultiDegree& a) const;
  /// Matrix of X_k : M_a -> M_{a + e_k} (k 0-based); requires a + e_k in the box.
  const ExactMatrix& mult_map(const MultiDegree& a, std::size_t k) const;
  /// Matrix of X^(a - b) : M_b -> M_a in the canonical bases; requires b <= a.
  ExactMatrix multiply(const MultiDegree& from, const MultiDegree& to) const;
  /// X^(a - b) M_b as a subspace of M_a (coordinates in the basis of M_a).
  Subspace image(const MultiDegree& from, const MultiDegree& to) const;

  /// True if every piece in [0, g] vanishes.
  bool is_zero() const;

 private:
  ModulePresentation pres_;
  MultiDegree g_;
  Box box_;
  Box g_box_;
  std::vector<GradedPiece> pieces_;
  // mult_maps_[idx * n + k], empty matrix when a + e_k leaves the box.
  std::vector<ExactMatrix> mult_maps_;
};

/// Builds one graded piece directly from the presentation.
GradedPiece compute_piece(const ModulePresentation& pres, const MultiDegree& a);

struct GDeterminedReport {
  bool ok = true;
  /// First violating degree a (with a_k = g_k) and variable k (0-based).
  std::optional<MultiDegree> degree;
  std::size_t variable = 0;
};

/// Checks that X_k : M_a -> M_{a + e_k} is an isomorphism for every a in the
/// box with a_k = g_k.
GDeterminedReport verify_g_determined(const GradedModule& gm);

}  // namespace sdep

#endif  // SDEP_MODULE_HPP
