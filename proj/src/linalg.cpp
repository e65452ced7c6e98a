#include "sdep/linalg.hpp"

#include <sstream>

#include "sdep/error.hpp"

namespace sdep {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols,
                                   const FieldSpec& field) {
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "row " + std::to_string(r) + " has length " +
                      std::to_string(rows[r].size()) + ", expected " +
                      std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix product of " +
                                                   std::to_string(rows_) + "x" +
                                                   std::to_string(cols_) + " and " +
                                                   std::to_string(o.rows_) + "x" +
                                                   std::to_string(o.cols_));
  }
  ExactMatrix out(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

Vector ExactMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::kDimensionMismatch, "vector length " +
                                                   std::to_string(v.size()) +
                                                   " vs " + std::to_string(cols_));
  }
  Vector out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

EchelonForm rref(ExactMatrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead_row);
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(lead_row, k).is_zero()) m(r, k) -= factor * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

Subspace::Subspace(std::size_t ambient_dim, const FieldSpec& field)
    : ambient_dim_(ambient_dim), field_(field) {}

Subspace Subspace::span(std::size_t ambient_dim, const FieldSpec& field,
                        const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim, field);
  if (vectors.empty()) return s;
  EchelonForm e = rref(ExactMatrix::from_rows(vectors, ambient_dim, field));
  s.pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::column_space(const ExactMatrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), m.field(), cols);
}

Vector Subspace::reduce(Vector v) const {
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar coeff = v[pivots_[r]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = pivots_[r]; c < ambient_dim_; ++c) {
      if (!basis_[r][c].is_zero()) v[c] -= coeff * basis_[r][c];
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  for (const Scalar& x : reduce(v)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t subspace_sum_dim(std::span<const Subspace> spaces) {
  if (spaces.empty()) return 0;
  const std::size_t ambient = spaces.front().ambient_dim();
  const FieldSpec field = spaces.front().field();
  std::vector<Vector> stacked;
  for (const Subspace& s : spaces) {
    if (s.ambient_dim() != ambient || !(s.field() == field)) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "subspaces of K^" + std::to_string(ambient) + " and K^" +
                      std::to_string(s.ambient_dim()));
    }
    stacked.insert(stacked.end(), s.basis().begin(), s.basis().end());
  }
  if (stacked.empty()) return 0;
  return rank(ExactMatrix::from_rows(stacked, ambient, field));
}

std::vector<Vector> quotient_basis(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) {
    throw Error(ErrorKind::kDimensionMismatch,
                "quotient of K^" + std::to_string(ambient_dim) + " by a subspace of K^" +
                    std::to_string(sub.ambient_dim()));
  }
  std::vector<Vector> out;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (next_pivot < sub.pivots().size() && sub.pivots()[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    Vector e(ambient_dim, sub.field().zero());
    e[c] = sub.field().one();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace sdep
