#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "whitforge/rational.hpp"

namespace whitforge {

// Dense row-major matrix of exact rationals. Indices are 0-based; the
// elementary(n, i, j) helper takes the 1-based indices used for E_ij.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix zero(std::size_t n) { return QMatrix(n, n); }
  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const Vector& entries);
  static QMatrix elementary(std::size_t n, std::size_t i, std::size_t j);
  // Inverse of flatten(): reshape a length n*n coordinate vector.
  static QMatrix from_flat(std::size_t n, const Vector& coords);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const std::vector<Rational>& entries() const noexcept { return data_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  // Row-major coordinates (the ambient ordering used for subspaces of gl_n).
  const Vector& flatten() const noexcept { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  Vector diagonal_entries() const;
  Rational trace() const;
  QMatrix transpose() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, QMatrix a);
Vector operator*(const QMatrix& a, const Vector& v);

// [A, B] = AB - BA
QMatrix bracket(const QMatrix& a, const QMatrix& b);
// trace(A B) without forming the product.
Rational trace_product(const QMatrix& a, const QMatrix& b);
QMatrix power(const QMatrix& a, unsigned k);
QMatrix block_diagonal(const std::vector<QMatrix>& blocks);

std::size_t rank(const QMatrix& a);
Rational determinant(const QMatrix& a);
std::optional<QMatrix> inverse(const QMatrix& a);

// Human-readable sparse form, e.g. "E21+E43-1/2*E32", "0" for zero.
std::string to_e_notation(const QMatrix& a);

}  // namespace whitforge
