#include "equigeo/linalg.hpp"

#include <cassert>

#include "equigeo/error.hpp"

namespace equigeo {

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Scalar& c, std::span<const Scalar> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

void axpy(const Scalar& c, std::span<const Scalar> x, Vec& y) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vec> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::Shape, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::Shape, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, Vec flat) {
  if (flat.size() != rows * cols) throw Error(ErrorKind::Shape, "flat length mismatch");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(flat);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return equigeo::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Shape, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::Shape, "matrix sum shape mismatch");
  return Matrix::from_flat(a.rows(), a.cols(), add(a.flat(), b.flat()));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::Shape, "matrix difference shape mismatch");
  return Matrix::from_flat(a.rows(), a.cols(), sub(a.flat(), b.flat()));
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  return Matrix::from_flat(a.rows(), a.cols(), scale(c, a.flat()));
}

Vec operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::Shape, "matrix-vector shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
  return out;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) swap(m(p, k), m(lead_row, k));
    Scalar inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(std::span<const Vec> vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, vectors.front().size()));
}

std::vector<Vec> nullspace(const Matrix& m) {
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return canonical_basis(basis, m.cols());
}

std::vector<Vec> canonical_basis(std::span<const Vec> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  auto ech = rref(Matrix::from_rows(vectors, dim));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) out.push_back(ech.reduced.row(i));
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Shape, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto ech = rref(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::Degenerate, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

std::vector<Scalar> leading_principal_minors(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Shape, "minors of a non-square matrix");
  // Gaussian elimination without row exchanges: the k-th minor is the
  // product of the first k pivots. Once a pivot vanishes the trailing minors
  // are computed directly.
  const std::size_t n = m.rows();
  std::vector<Scalar> minors;
  Matrix a = m;
  Scalar det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      for (std::size_t j = k; j < n; ++j) {
        Matrix sub(j + 1, j + 1);
        for (std::size_t r = 0; r <= j; ++r)
          for (std::size_t c = 0; c <= j; ++c) sub(r, c) = m(r, c);
        auto e = rref(sub);
        if (e.pivots.size() <= j) {
          minors.push_back(0);
          continue;
        }
        // Full rank: compute the determinant by elimination with exchanges.
        Matrix t = sub;
        Scalar d = 1;
        for (std::size_t c = 0; c <= j; ++c) {
          std::size_t p = c;
          while (sgn(t(p, c)) == 0) ++p;
          if (p != c) {
            for (std::size_t q = 0; q <= j; ++q) swap(t(p, q), t(c, q));
            d = -d;
          }
          d *= t(c, c);
          for (std::size_t r = c + 1; r <= j; ++r) {
            if (sgn(t(r, c)) == 0) continue;
            Scalar f = t(r, c) / t(c, c);
            for (std::size_t q = c; q <= j; ++q) t(r, q) -= f * t(c, q);
          }
        }
        minors.push_back(d);
      }
      return minors;
    }
    det *= a(k, k);
    minors.push_back(det);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      Scalar f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return minors;
}

bool is_positive_definite(const Matrix& m) {
  if (!m.is_symmetric()) return false;
  for (const auto& minor : leading_principal_minors(m))
    if (sgn(minor) <= 0) return false;
  return true;
}

SpanCoordinates::SpanCoordinates(std::span<const Vec> basis, std::size_t ambient_dim)
    : basis_(basis.begin(), basis.end()), ambient_dim_(ambient_dim) {
  const std::size_t d = basis_.size();
  if (d == 0) return;
  Matrix b = Matrix::from_columns(basis_, ambient_dim);
  // Independent rows of b are the pivot columns of its transpose.
  auto ech = rref(b.transpose());
  if (ech.pivots.size() != d) throw Error(ErrorKind::Structural, "basis vectors are linearly dependent");
  rows_ = ech.pivots;
  Matrix square(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) square(i, j) = b(rows_[i], j);
  solve_ = inverse(square);
}

std::optional<Vec> SpanCoordinates::coords(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::Shape, "vector length does not match ambient dimension");
  Vec rhs(basis_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) rhs[i] = v[rows_[i]];
  Vec c = solve_ * std::span<const Scalar>(rhs);
  if (combine(c) != Vec(v.begin(), v.end())) return std::nullopt;
  return c;
}

Vec SpanCoordinates::combine(std::span<const Scalar> coeffs) const {
  Vec out(ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(coeffs[i], basis_[i], out);
  return out;
}

}  // namespace equigeo
