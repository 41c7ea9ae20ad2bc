#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace parorb {

using Rational = mpq_class;

// Parses "p/q" or "p" into a canonical rational. Throws Error(ParseError).
Rational parse_rational(const std::string& text);

/// Dense matrix over exact rationals, row-major, 0-based indexing.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  /// Matrix unit with a single 1 at (r, c), 0-based.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix column(const std::vector<Rational>& entries);
  /// Natural embedding K^i -> K^j: identity on top, zeros below (j x i).
  static Matrix embedding(std::size_t i, std::size_t j);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  Rational trace() const;
  Matrix transpose() const;
  Matrix power(unsigned k) const;
  Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  Matrix column_at(std::size_t c) const;
  /// Smallest k >= 1 with this^k = 0, or 0 when the matrix is not nilpotent.
  unsigned nilpotency_index() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace parorb
