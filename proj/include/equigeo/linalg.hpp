#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "equigeo/rational.hpp"

namespace equigeo {

using Vec = std::vector<Scalar>;

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& c, std::span<const Scalar> v);
void axpy(const Scalar& c, std::span<const Scalar> x, Vec& y);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::span<const Vec> columns, std::size_t rows);
  static Matrix from_rows(std::span<const Vec> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// Row-major flattening.
  const Vec& flat() const noexcept { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, Vec flat);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
Vec operator*(const Matrix& a, std::span<const Scalar> v);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
std::size_t rank(std::span<const Vec> vectors);

/// Basis of {x : m x = 0}, returned as the rows of the reduced echelon form of
/// that basis, so it is canonical for the solution space.
std::vector<Vec> nullspace(const Matrix& m);

/// Canonical basis (nonzero rows of the RREF) of the span of `vectors`.
std::vector<Vec> canonical_basis(std::span<const Vec> vectors, std::size_t dim);

/// Exact inverse; throws Error(Degenerate) when singular.
Matrix inverse(const Matrix& m);

/// Leading principal minors det(m[0..k,0..k]) for k = 1..n.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

/// Sylvester's criterion on a symmetric matrix.
bool is_positive_definite(const Matrix& m);

/// Coordinates of vectors with respect to a fixed linearly independent family.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(std::span<const Vec> basis, std::size_t ambient_dim);

  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }

  /// Coordinates c with sum c_i basis_i == v, or nullopt if v is not in the span.
  std::optional<Vec> coords(std::span<const Scalar> v) const;
  Vec combine(std::span<const Scalar> coeffs) const;

 private:
  std::vector<Vec> basis_;
  std::size_t ambient_dim_ = 0;
  std::vector<std::size_t> rows_;
  Matrix solve_;
};

}  // namespace equigeo
