#include "parorb/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "parorb/error.hpp"

namespace parorb {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotClosedUnderMultiplication: return "NotClosedUnderMultiplication";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::NotTwoNilpotent: return "NotTwoNilpotent";
    case ErrorCode::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::ZeroLabel: return "ZeroLabel";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::RangeError: return "RangeError";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Matrix m(rows, cols);
  m(r, c) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t r = 0; r < entries.size(); ++r) m(r, 0) = entries[r];
  return m;
}

Matrix Matrix::embedding(std::size_t i, std::size_t j) {
  if (i > j) throw Error(ErrorCode::ShapeMismatch, "embedding needs i <= j");
  Matrix m(j, i);
  for (std::size_t k = 0; k < i; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::power(unsigned k) const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * (*this);
  return result;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  Matrix m(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) m(r - r0, c - c0) = (*this)(r, c);
  return m;
}

Matrix Matrix::column_at(std::size_t c) const { return submatrix(0, rows_, c, c + 1); }

unsigned Matrix::nilpotency_index() const {
  if (!is_square()) return 0;
  if (rows_ == 0) return 1;
  Matrix p = *this;
  for (unsigned k = 1; k <= rows_; ++k) {
    if (p.is_zero()) return k;
    p = p * (*this);
  }
  return 0;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (sgn(b(k, c)) != 0) m(r, c) += x * b(k, c);
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).get_str();
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace parorb
