#include "sdep/scalar.hpp"

#include <charconv>
#include <limits>

#include "sdep/error.hpp"

namespace sdep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::kDomain, "prime field modulus " + std::to_string(p) +
                                        " exceeds 2^32");
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::kDomain, std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("Fp")) {
    digits.remove_prefix(2);
  } else if (digits.starts_with("F")) {
    digits.remove_prefix(1);
  } else {
    throw Error(ErrorKind::kParse, "unknown field '" + std::string(text) +
                                       "' (expected Q or F<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorKind::kParse, "bad field modulus in '" + std::string(text) + "'");
  }
  return prime(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long value) const {
  if (p_ == 0) return Scalar::rational(mpq_class(value));
  long r = value % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar::modular(static_cast<std::uint64_t>(r), p_);
}

Scalar FieldSpec::from_mpz(const mpz_class& value) const {
  if (p_ == 0) return Scalar::rational(mpq_class(value));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p_);
  return Scalar::modular(r.get_ui(), p_);
}

Scalar FieldSpec::parse_scalar(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num;
  mpz_class den(1);
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s, 10);
    } else {
      num = mpz_class(s.substr(0, slash), 10);
      den = mpz_class(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::kParse, "bad scalar '" + s + "'");
  }
  if (den == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + s + "'");
  if (p_ == 0) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::rational(q);
  }
  Scalar d = from_mpz(den);
  if (d.is_zero()) {
    throw Error(ErrorKind::kParse, "denominator of '" + s + "' vanishes mod " +
                                       std::to_string(p_));
  }
  return from_mpz(num) / d;
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::rational(mpq_class value) {
  Scalar s;
  s.q_ = std::move(value);
  return s;
}

Scalar Scalar::modular(std::uint64_t residue, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = residue % p;
  return s;
}

FieldSpec Scalar::field() const {
  return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "scalars from different fields (" + std::to_string(p_) + " vs " +
                    std::to_string(o.p_) + ")");
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDomain, "division by zero");
  if (p_ == 0) {
    Scalar s;
    s.q_ = 1 / q_;
    return s;
  }
  return pow(p_ - 2);
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this;
  Scalar acc = p_ == 0 ? Scalar::rational(1) : Scalar::modular(1, p_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(r_) * o.r_) % p_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace sdep
