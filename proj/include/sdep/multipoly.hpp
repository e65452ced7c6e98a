#ifndef SDEP_MULTIPOLY_HPP
#define SDEP_MULTIPOLY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sdep/scalar.hpp"

namespace sdep {

/// The generic coefficient Y_{i,j}: summand i of a Hilbert decomposition,
/// basis vector j of the graded piece at that summand's shift. Both indices
/// are 0-based in memory and printed 1-based as "Y[i,j]".
struct GenericVar {
  std::uint32_t summand = 0;
  std::uint32_t basis = 0;

  friend auto operator<=>(const GenericVar&, const GenericVar&) = default;
  std::string to_string() const;
  /// Parses "Y[i,j]" (1-based).
  static GenericVar parse(const std::string& text);
};

/// A power product of generic variables, kept sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<GenericVar, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(GenericVar v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and contain repeats; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(GenericVar v) const;
  std::uint32_t max_exponent() const;
  std::uint32_t total_degree() const;

  Monomial operator*(const Monomial& o) const;
  /// Quotient if o divides *this.
  std::optional<Monomial> divide(const Monomial& o) const;

  /// Lexicographic monomial order with Y[1,1] > Y[1,2] > ... > Y[2,1] > ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Sparse polynomial in the generic variables with exact coefficients. The
/// zero polynomial has no terms; stored coefficients are never zero.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Scalar, std::greater<>>;

  SparsePoly() = default;
  explicit SparsePoly(const FieldSpec& field) : field_(field) {}
  static SparsePoly constant(const Scalar& c);
  static SparsePoly variable(GenericVar v, const FieldSpec& field);
  static SparsePoly term(const Scalar& c, Monomial m);

  const FieldSpec& field() const { return field_; }
  /// Terms in descending lex order, leading term first.
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Scalar& c, const Monomial& m);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly scaled(const Scalar& c) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

  std::set<GenericVar> variables() const;

  /// Canonical text, e.g. "Y[1,2]*Y[3,1] + 2*Y[5,1]^2"; "0" for zero.
  std::string to_string() const;

 private:
  FieldSpec field_;
  TermMap terms_;
};

/// Exact quotient a / b. Throws kDomain if b does not divide a.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);

/// Square matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  SparsePoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const SparsePoly& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void swap_rows(std::size_t a, std::size_t b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<SparsePoly> data_;
};

enum class DetMethod { kAuto, kCofactor, kBareiss };

/// Largest side handled by memoized cofactor expansion under kAuto.
inline constexpr std::size_t kCofactorMaxSide = 8;

/// Exact determinant. Throws kShape on non-square input.
SparsePoly det_symbolic(const PolyMatrix& m, DetMethod method = DetMethod::kAuto);

/// Rewrites each exponent e >= q to the representative in [1, q-1] congruent
/// mod q-1 (the normal form modulo Y^q - Y) and combines like terms.
/// Throws kDomain if q < 2.
SparsePoly reduce_exponents(const SparsePoly& p, std::uint64_t q);

/// 0 for constants and for the zero polynomial.
std::uint32_t max_exponent(const SparsePoly& p);

using Assignment = std::map<GenericVar, Scalar>;

/// Throws kUnboundVariable if a variable of p has no value.
Scalar evaluate(const SparsePoly& p, const Assignment& values);

/// For a polynomial that is homogeneous of 0/1 degree under deg Y[i,j] = e_i,
/// returns the summands it has degree one in; nullopt if it is not.
std::optional<std::vector<std::uint32_t>> summand_degree_profile(const SparsePoly& p);

}  // namespace sdep

#endif  // SDEP_MULTIPOLY_HPP
