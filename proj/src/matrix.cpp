#include "whitforge/matrix.hpp"

#include <sstream>

#include "whitforge/errors.hpp"
#include "whitforge/linalg.hpp"

namespace whitforge {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw MathError(ErrorKind::DimensionMismatch, "matrix entry count", std::to_string(data_.size()));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MathError(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const Vector& entries) {
  QMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

QMatrix QMatrix::elementary(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw MathError(ErrorKind::DimensionMismatch, "elementary matrix index out of range");
  QMatrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

QMatrix QMatrix::from_flat(std::size_t n, const Vector& coords) { return QMatrix(n, n, coords); }

Vector QMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector QMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

Vector QMatrix::diagonal_entries() const {
  Vector v;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) v.push_back((*this)(i, i));
  return v;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw MathError(ErrorKind::DimensionMismatch, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] += other.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw MathError(ErrorKind::DimensionMismatch, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] -= other.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_)
    if (sgn(x) != 0) x *= scalar;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(QMatrix a) { return a *= Rational(-1); }
QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw MathError(ErrorKind::DimensionMismatch, "matrix product");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const QMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw MathError(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

Rational trace_product(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw MathError(ErrorKind::DimensionMismatch, "trace of product");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) t += a(i, k) * b(k, i);
  return t;
}

QMatrix power(const QMatrix& a, unsigned k) {
  QMatrix result = QMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

QMatrix block_diagonal(const std::vector<QMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  QMatrix m(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

std::size_t rank(const QMatrix& a) { return rref_solve(a).rank; }

Rational determinant(const QMatrix& a) {
  if (!a.square()) throw MathError(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix m = a;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (sgn(m(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        if (sgn(m(c, j)) != 0) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (!a.square()) throw MathError(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto reduced = rref_solve(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= reduced.pivots.size() || reduced.pivots[i] != i) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced.echelon(i, n + j);
  return inv;
}

std::string to_e_notation(const QMatrix& a) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      Rational mag = abs(x);
      if (sgn(x) < 0) out << "-";
      else if (!first) out << "+";
      if (mag != 1) out << to_string(mag) << "*";
      out << "E" << (i + 1) << (a.rows() > 9 ? "," : "") << (j + 1);
      first = false;
    }
  if (first) out << "0";
  return out.str();
}

}  // namespace whitforge
