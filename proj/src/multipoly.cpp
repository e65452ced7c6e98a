#include "sdep/multipoly.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "sdep/error.hpp"

namespace sdep {

std::string GenericVar::to_string() const {
  return "Y[" + std::to_string(summand + 1) + "," + std::to_string(basis + 1) + "]";
}

GenericVar GenericVar::parse(const std::string& text) {
  static const std::regex kPattern(R"(\s*Y\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw Error(ErrorKind::kParse, "bad generic variable name '" + text + "'");
  }
  const unsigned long i = std::stoul(m[1].str());
  const unsigned long j = std::stoul(m[2].str());
  if (i == 0 || j == 0) {
    throw Error(ErrorKind::kParse, "generic variable indices are 1-based: '" + text + "'");
  }
  return GenericVar{static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1)};
}

Monomial::Monomial(GenericVar v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::exponent(GenericVar v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, GenericVar x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint32_t Monomial::max_exponent() const {
  std::uint32_t best = 0;
  for (const auto& f : factors_) best = std::max(best, f.second);
  return best;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t sum = 0;
  for (const auto& f : factors_) sum += f.second;
  return sum;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      out.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      out.factors_.push_back(o.factors_[j++]);
    } else {
      out.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : o.factors_) {
    while (i < factors_.size() && factors_[i].first < v) out.factors_.push_back(factors_[i++]);
    if (i == factors_.size() || factors_[i].first != v || factors_[i].second < e) {
      return std::nullopt;
    }
    if (factors_[i].second > e) out.factors_.emplace_back(v, factors_[i].second - e);
    ++i;
  }
  while (i < factors_.size()) out.factors_.push_back(factors_[i++]);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    const auto& fa = a.factors_[i];
    const auto& fb = b.factors_[j];
    if (fa.first == fb.first) {
      if (fa.second != fb.second) return fa.second <=> fb.second;
      ++i;
      ++j;
    } else if (fa.first < fb.first) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < a.factors_.size()) return std::strong_ordering::greater;
  if (j < b.factors_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

SparsePoly SparsePoly::constant(const Scalar& c) {
  SparsePoly p(c.field());
  p.add_term(c, Monomial());
  return p;
}

SparsePoly SparsePoly::variable(GenericVar v, const FieldSpec& field) {
  SparsePoly p(field);
  p.add_term(field.one(), Monomial(v));
  return p;
}

SparsePoly SparsePoly::term(const Scalar& c, Monomial m) {
  SparsePoly p(c.field());
  p.add_term(c, m);
  return p;
}

void SparsePoly::add_term(const Scalar& c, const Monomial& m) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  }
  return out;
}

SparsePoly SparsePoly::scaled(const Scalar& c) const {
  SparsePoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

std::set<GenericVar> SparsePoly::variables() const {
  std::set<GenericVar> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.insert(f.first);
  }
  return vars;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += coeff;
    } else {
      if (coeff != "1") s += coeff + "*";
      s += m.to_string();
    }
  }
  return s;
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::kDomain, "polynomial division by zero");
  const auto& [lead_m, lead_c] = *b.terms().begin();
  const Scalar lead_inv = lead_c.inverse();
  SparsePoly rem = a;
  SparsePoly quot(a.field());
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().begin();
    auto q = m.divide(lead_m);
    if (!q) {
      throw Error(ErrorKind::kDomain, "inexact polynomial division: " + b.to_string() +
                                          " does not divide " + a.to_string());
    }
    SparsePoly t = SparsePoly::term(c * lead_inv, *q);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, SparsePoly(field)) {}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Laplace expansion along rows, memoized on the set of columns still in play.
SparsePoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t full = (std::size_t{1} << n) - 1;
  // minors[mask] = det of rows (n - popcount(mask))..n-1 restricted to columns mask.
  std::vector<SparsePoly> minors(full + 1, SparsePoly(m.field()));
  minors[0] = SparsePoly::constant(m.field().one());
  std::vector<std::size_t> masks(full);
  for (std::size_t i = 0; i < full; ++i) masks[i] = i + 1;
  std::stable_sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  for (std::size_t mask : masks) {
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    SparsePoly acc(m.field());
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const SparsePoly& entry = m(row, c);
      const SparsePoly& minor = minors[mask & ~(std::size_t{1} << c)];
      if (!entry.is_zero() && !minor.is_zero()) {
        SparsePoly prod = entry * minor;
        if (position % 2 == 0) {
          acc += prod;
        } else {
          acc -= prod;
        }
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

SparsePoly det_bareiss(PolyMatrix m) {
  const std::size_t n = m.rows();
  bool negate = false;
  SparsePoly prev = SparsePoly::constant(m.field().one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return SparsePoly(m.field());
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(num, prev);
      }
      m(i, k) = SparsePoly(m.field());
    }
    prev = m(k, k);
  }
  SparsePoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

SparsePoly det_symbolic(const PolyMatrix& m, DetMethod method) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kShape, "determinant of a " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) return SparsePoly::constant(m.field().one());
  if (method == DetMethod::kAuto) {
    method = m.rows() <= kCofactorMaxSide ? DetMethod::kCofactor : DetMethod::kBareiss;
  }
  if (method == DetMethod::kCofactor) {
    if (m.rows() > 20) {
      throw Error(ErrorKind::kResource, "cofactor expansion of side " +
                                            std::to_string(m.rows()));
    }
    return det_cofactor(m);
  }
  return det_bareiss(m);
}

SparsePoly reduce_exponents(const SparsePoly& p, std::uint64_t q) {
  if (q < 2) {
    throw Error(ErrorKind::kDomain, "exponent reduction needs q >= 2, got " + std::to_string(q));
  }
  SparsePoly out(p.field());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors = m.factors();
    for (auto& [v, e] : factors) {
      if (e >= q) e = static_cast<std::uint32_t>((e - 1) % (q - 1) + 1);
    }
    out.add_term(c, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

std::uint32_t max_exponent(const SparsePoly& p) {
  std::uint32_t best = 0;
  for (const auto& [m, c] : p.terms()) best = std::max(best, m.max_exponent());
  return best;
}

Scalar evaluate(const SparsePoly& p, const Assignment& values) {
  Scalar acc = p.field().zero();
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw Error(ErrorKind::kUnboundVariable, v.to_string());
      t *= it->second.pow(e);
    }
    acc += t;
  }
  return acc;
}

std::optional<std::vector<std::uint32_t>> summand_degree_profile(const SparsePoly& p) {
  std::optional<std::vector<std::uint32_t>> profile;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> summands;
    for (const auto& [v, e] : m.factors()) {
      if (e > 1) return std::nullopt;
      if (!summands.empty() && summands.back() == v.summand) return std::nullopt;
      summands.push_back(v.summand);
    }
    if (!profile) {
      profile = std::move(summands);
    } else if (*profile != summands) {
      return std::nullopt;
    }
  }
  if (!profile) profile.emplace();
  return profile;
}

}  // namespace sdep
