#ifndef SDEP_LINALG_HPP
#define SDEP_LINALG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sdep/scalar.hpp"

namespace sdep {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one exact field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);
  static ExactMatrix identity(std::size_t n, const FieldSpec& field);
  /// Rows must all have length `cols`.
  static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols,
                               const FieldSpec& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void swap_rows(std::size_t a, std::size_t b);

  ExactMatrix operator*(const ExactMatrix& o) const;
  Vector apply(std::span<const Scalar> v) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; the pivot in each step is the first nonzero entry
/// in column order, so the result is the unique RREF.
EchelonForm rref(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// A linear subspace of K^ambient_dim stored by its RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const FieldSpec& field);
  /// Span of the given vectors (zero vectors are dropped).
  static Subspace span(std::size_t ambient_dim, const FieldSpec& field,
                       const std::vector<Vector>& vectors);
  /// Column space of m.
  static Subspace column_space(const ExactMatrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return pivots_.size(); }
  const FieldSpec& field() const { return field_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Subtracts basis rows to clear the pivot coordinates of v.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

 private:
  std::size_t ambient_dim_ = 0;
  FieldSpec field_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// dim of the sum of the given subspaces. Throws kDimensionMismatch when the
/// ambient dimensions or fields differ.
std::size_t subspace_sum_dim(std::span<const Subspace> spaces);

/// Unit vectors at the non-pivot columns of `sub`, ascending by column. Their
/// cosets form the canonical basis of K^ambient_dim / sub.
std::vector<Vector> quotient_basis(std::size_t ambient_dim, const Subspace& sub);

}  // namespace sdep

#endif  // SDEP_LINALG_HPP
