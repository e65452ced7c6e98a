#ifndef SDEP_SCALAR_HPP
#define SDEP_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sdep {

class Scalar;

/// The coefficient field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws kDomain unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>" / "Fp<p>" (e.g. "F2", "Fp5").
  static FieldSpec parse(std::string_view text);

  bool is_finite() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  /// Number of elements; nullopt stands for infinity.
  std::optional<std::uint64_t> cardinality() const {
    if (p_ == 0) return std::nullopt;
    return p_;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_mpz(const mpz_class& value) const;
  /// Decimal "a", "a/b" (rationals) or "k" (prime field, reduced mod p).
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Prime-field values are kept as canonical residues
/// in [0, p); rationals are normalized GMP fractions. Binary operations
/// require both operands to live in the same field.
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(mpq_class value);
  static Scalar modular(std::uint64_t residue, std::uint64_t p);

  FieldSpec field() const;
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  /// Serialized form: "a/b" or "a" for rationals, "k" for residues.
  std::string to_string() const;

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  void require_same_field(const Scalar& o) const;

  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

bool is_prime(std::uint64_t n);

}  // namespace sdep

#endif  // SDEP_SCALAR_HPP
