#include "parorb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "parorb/error.hpp"

namespace parorb {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales every row by the lcm of its denominators. Returns the product of the
// scale factors through `scale` when requested.
IntRows integer_rows(const Matrix& a, mpz_class* scale = nullptr) {
  IntRows m(a.rows(), std::vector<mpz_class>(a.cols()));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    if (scale) *scale *= l;
  }
  return m;
}

// Bareiss elimination in place; returns the rank and tracks row swaps.
int bareiss(IntRows& m, std::size_t cols, int* swaps = nullptr) {
  const std::size_t rows = m.size();
  std::size_t r = 0;
  mpz_class prev = 1;
  if (swaps) *swaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

// Independent subset of the given matrices, by flattening.
std::vector<Matrix> independent(const std::vector<Matrix>& mats) {
  std::vector<Matrix> out;
  if (mats.empty()) return out;
  RowReducer reducer(mats.front().rows() * mats.front().cols());
  for (const Matrix& m : mats)
    if (reducer.insert(flatten(m))) out.push_back(m);
  return out;
}

}  // namespace

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

int rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  IntRows m = integer_rows(a);
  return bareiss(m, a.cols());
}

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  mpz_class scale;
  IntRows m = integer_rows(a, &scale);
  int swaps = 0;
  if (bareiss(m, n, &swaps) < static_cast<int>(n)) return 0;
  Rational det(m[n - 1][n - 1], scale);
  det.canonicalize();
  return swaps % 2 ? Rational(-det) : det;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
  Matrix m = a;
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::vector<Vector> nullspace(const Matrix& a) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  const Matrix red = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  return red.submatrix(0, n, n, 2 * n);
}

Vector RowReducer::reduce(Vector v) const {
  if (v.size() != width_) throw Error(ErrorCode::ShapeMismatch, "vector length does not match reducer width");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(rows_[k][j]) != 0) v[j] -= f * rows_[k][j];
  }
  return v;
}

bool RowReducer::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < width_ && sgn(v[p]) == 0) ++p;
  if (p == width_) return false;
  const Rational inv = 1 / v[p];
  for (Rational& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowReducer::contains(const Vector& v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  RowReducer reducer(ambient_dim);
  for (const Vector& v : spanning)
    if (reducer.insert(v)) vectors_.push_back(v);
}

SubspaceBasis SubspaceBasis::column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(flatten(m.column_at(c)));
  return SubspaceBasis(m.rows(), cols);
}

SubspaceBasis SubspaceBasis::coordinate(std::size_t ambient_dim, std::size_t first, std::size_t last) {
  std::vector<Vector> vs;
  for (std::size_t i = first; i <= last && i <= ambient_dim; ++i) {
    Vector v(ambient_dim, 0);
    v[i - 1] = 1;
    vs.push_back(std::move(v));
  }
  return SubspaceBasis(ambient_dim, vs);
}

Matrix SubspaceBasis::as_matrix() const {
  Matrix m(ambient_, vectors_.size());
  for (std::size_t c = 0; c < vectors_.size(); ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, c) = vectors_[c][r];
  return m;
}

int intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
  }
  Matrix joined(a.ambient_dim(), a.dim() + b.dim());
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t r = 0; r < a.ambient_dim(); ++r) joined(r, c) = a.vectors()[c][r];
  for (std::size_t c = 0; c < b.dim(); ++c)
    for (std::size_t r = 0; r < a.ambient_dim(); ++r) joined(r, a.dim() + c) = b.vectors()[c][r];
  return static_cast<int>(a.dim() + b.dim()) - rank(joined);
}

void Representation::validate() const {
  if (dims.empty()) throw Error(ErrorCode::ShapeMismatch, "representation needs at least one vertex");
  if (maps.size() + 1 != dims.size()) throw Error(ErrorCode::ShapeMismatch, "need one map per arrow");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].rows() != dims[k + 1] || maps[k].cols() != dims[k]) {
      throw Error(ErrorCode::ShapeMismatch, "map " + std::to_string(k + 1) + " has the wrong shape");
    }
  }
  if (nil.rows() != dims.back() || nil.cols() != dims.back()) {
    throw Error(ErrorCode::ShapeMismatch, "loop has the wrong shape");
  }
}

Representation Representation::two_vertex(const Matrix& embed, const Matrix& nil) {
  Representation r{{embed.cols(), embed.rows()}, {embed}, nil};
  r.validate();
  return r;
}

Representation Representation::of_flag(const Matrix& n, const BlockStructure& blocks) {
  if (!n.is_square() || static_cast<int>(n.rows()) != blocks.n()) {
    throw Error(ErrorCode::SizeMismatch, "matrix size does not match the block structure");
  }
  Representation r;
  for (int k = 1; k <= blocks.p(); ++k) r.dims.push_back(blocks.flag_dim(k));
  for (int k = 1; k < blocks.p(); ++k) r.maps.push_back(Matrix::embedding(blocks.flag_dim(k), blocks.flag_dim(k + 1)));
  r.nil = n;
  return r;
}

Representation Representation::direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "empty direct sum");
  const std::size_t p = parts.front().dims.size();
  Representation r;
  r.dims.assign(p, 0);
  for (const Representation& part : parts) {
    if (part.dims.size() != p) throw Error(ErrorCode::ShapeMismatch, "summands over different quivers");
    for (std::size_t k = 0; k < p; ++k) r.dims[k] += part.dims[k];
  }
  for (std::size_t k = 0; k + 1 < p; ++k) {
    std::vector<Matrix> blocks;
    for (const Representation& part : parts) blocks.push_back(part.maps[k]);
    r.maps.push_back(Matrix::block_diagonal(blocks));
  }
  std::vector<Matrix> loops;
  for (const Representation& part : parts) loops.push_back(part.nil);
  r.nil = Matrix::block_diagonal(loops);
  return r;
}

namespace {

struct IntertwinerSystem {
  Matrix equations;
  std::vector<std::size_t> offsets;
};

IntertwinerSystem build_system(const Representation& a, const Representation& b) {
  a.validate();
  b.validate();
  if (a.dims.size() != b.dims.size()) throw Error(ErrorCode::ShapeMismatch, "representations of different quivers");
  const std::size_t p = a.dims.size();
  std::vector<std::size_t> off(p + 1, 0);
  for (std::size_t k = 0; k < p; ++k) off[k + 1] = off[k] + b.dims[k] * a.dims[k];
  auto var = [&](std::size_t k, std::size_t r, std::size_t c) { return off[k] + r * a.dims[k] + c; };

  std::vector<Vector> rows;
  auto push = [&](Vector&& row) {
    if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return sgn(x) != 0; })) rows.push_back(std::move(row));
  };
  // f_{k+1} A_k - B_k f_k = 0
  for (std::size_t k = 0; k + 1 < p; ++k) {
    const Matrix& ma = a.maps[k];
    const Matrix& mb = b.maps[k];
    for (std::size_t r = 0; r < b.dims[k + 1]; ++r)
      for (std::size_t c = 0; c < a.dims[k]; ++c) {
        Vector row(off[p], 0);
        for (std::size_t t = 0; t < a.dims[k + 1]; ++t)
          if (sgn(ma(t, c)) != 0) row[var(k + 1, r, t)] += ma(t, c);
        for (std::size_t t = 0; t < b.dims[k]; ++t)
          if (sgn(mb(r, t)) != 0) row[var(k, t, c)] -= mb(r, t);
        push(std::move(row));
      }
  }
  // f_p nil_A - nil_B f_p = 0
  const std::size_t k = p - 1;
  for (std::size_t r = 0; r < b.dims[k]; ++r)
    for (std::size_t c = 0; c < a.dims[k]; ++c) {
      Vector row(off[p], 0);
      for (std::size_t t = 0; t < a.dims[k]; ++t)
        if (sgn(a.nil(t, c)) != 0) row[var(k, r, t)] += a.nil(t, c);
      for (std::size_t t = 0; t < b.dims[k]; ++t)
        if (sgn(b.nil(r, t)) != 0) row[var(k, t, c)] -= b.nil(r, t);
      push(std::move(row));
    }

  Matrix eq(rows.size(), off[p]);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < off[p]; ++j) eq(i, j) = rows[i][j];
  return {std::move(eq), std::move(off)};
}

}  // namespace

IntertwinerSpace intertwiner_space(const Representation& a, const Representation& b, bool with_basis) {
  IntertwinerSystem sys = build_system(a, b);
  const std::size_t unknowns = sys.offsets.back();
  IntertwinerSpace out;
  if (!with_basis) {
    out.dimension = static_cast<int>(unknowns) - rank(sys.equations);
    return out;
  }
  std::vector<Vector> kernel;
  if (sys.equations.rows() == 0) {
    for (std::size_t j = 0; j < unknowns; ++j) {
      Vector v(unknowns, 0);
      v[j] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = nullspace(sys.equations);
  }
  out.dimension = static_cast<int>(kernel.size());
  for (const Vector& v : kernel) {
    std::vector<Matrix> fs;
    for (std::size_t k = 0; k < a.dims.size(); ++k) {
      Vector part(v.begin() + sys.offsets[k], v.begin() + sys.offsets[k + 1]);
      fs.push_back(unflatten(part, b.dims[k], a.dims[k]));
    }
    out.basis.push_back(std::move(fs));
  }
  return out;
}

int hom_dimension(const Representation& a, const Representation& b) { return intertwiner_space(a, b, false).dimension; }

namespace {

// Linear system for g a - b g = 0 over the pattern positions.
std::pair<Matrix, std::vector<std::pair<std::size_t, std::size_t>>> pattern_system(const Matrix& a, const Matrix& b,
                                                                                   const BlockStructure& blocks) {
  const std::size_t n = a.rows();
  if (!a.is_square() || !b.is_square() || b.rows() != n || static_cast<int>(n) != blocks.n()) {
    throw Error(ErrorCode::SizeMismatch, "matrices and block structure disagree in size");
  }
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (blocks.in_pattern(static_cast<int>(r), static_cast<int>(c))) {
        index[r][c] = static_cast<long>(positions.size());
        positions.emplace_back(r, c);
      }
  Matrix eq(n * n, positions.size());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = r * n + c;
      for (std::size_t t = 0; t < n; ++t) {
        if (index[r][t] >= 0 && sgn(a(t, c)) != 0) eq(row, index[r][t]) += a(t, c);
        if (index[t][c] >= 0 && sgn(b(r, t)) != 0) eq(row, index[t][c]) -= b(r, t);
      }
    }
  return {std::move(eq), std::move(positions)};
}

}  // namespace

std::vector<Matrix> pattern_intertwiners(const Matrix& a, const Matrix& b, const BlockStructure& blocks) {
  auto [eq, positions] = pattern_system(a, b, blocks);
  std::vector<Matrix> out;
  for (const Vector& v : nullspace(eq)) {
    Matrix g(a.rows(), a.rows());
    for (std::size_t k = 0; k < positions.size(); ++k) g(positions[k].first, positions[k].second) = v[k];
    out.push_back(std::move(g));
  }
  return out;
}

int pattern_intertwiner_dim(const Matrix& a, const Matrix& b, const BlockStructure& blocks) {
  auto [eq, positions] = pattern_system(a, b, blocks);
  return static_cast<int>(positions.size()) - rank(eq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL));
}

InvertibleSearch contains_invertible(const std::vector<Matrix>& space, std::size_t n, const SamplingOptions& options) {
  for (const Matrix& m : space)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::ShapeMismatch, "space elements must be n x n");
  if (options.trials < 0 || options.range < 1) throw Error(ErrorCode::InvalidArgument, "trials >= 0 and range >= 1 required");
  InvertibleSearch out;
  out.trials = options.trials;
  out.seed = options.seed;
  out.range = options.range;
  if (n == 0) {
    out.certificate = Matrix(0, 0);
    out.confidence = 1.0;
    out.exact = true;
    return out;
  }
  const std::vector<Matrix> basis = independent(space);
  if (basis.empty()) {
    out.confidence = 1.0;
    out.exact = true;
    return out;
  }
  RowReducer reducer(n * n);
  for (const Matrix& m : basis) reducer.insert(flatten(m));
  if (reducer.contains(flatten(Matrix::identity(n)))) {
    out.certificate = Matrix::identity(n);
    out.confidence = 1.0;
    out.exact = true;
    return out;
  }
  std::mt19937_64 rng(derive_seed(options.seed, options.stream));
  std::uniform_int_distribution<long> coeff(-options.range, options.range);
  for (int t = 0; t < options.trials; ++t) {
    Matrix m(n, n);
    for (const Matrix& b : basis) {
      const long c = coeff(rng);
      if (c != 0) m += b * Rational(c);
    }
    if (rank(m) == static_cast<int>(n)) {
      out.certificate = std::move(m);
      out.confidence = 1.0;
      out.exact = true;
      return out;
    }
  }
  const double miss = static_cast<double>(n) / (2.0 * static_cast<double>(options.range) + 1.0);
  out.confidence = 1.0 - std::pow(std::min(miss, 1.0), options.trials);
  return out;
}

namespace {

std::pair<std::vector<Matrix>, Matrix> trace_form(const std::vector<Matrix>& algebra) {
  const std::vector<Matrix> basis = independent(algebra);
  if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "empty algebra");
  const std::size_t n = basis.front().rows();
  RowReducer span(n * n);
  for (const Matrix& m : basis) span.insert(flatten(m));
  Matrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Matrix prod = basis[i] * basis[j];
      if (!span.contains(flatten(prod))) {
        throw Error(ErrorCode::NotClosedUnderMultiplication, "product of basis elements leaves the span");
      }
      gram(i, j) = prod.trace();
    }
  return {basis, gram};
}

}  // namespace

int radical_codim(const std::vector<Matrix>& algebra) { return rank(trace_form(algebra).second); }

std::vector<Matrix> radical_basis(const std::vector<Matrix>& algebra) {
  auto [basis, gram] = trace_form(algebra);
  std::vector<Matrix> out;
  for (const Vector& v : nullspace(gram)) {
    Matrix x(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (sgn(v[i]) != 0) x += basis[i] * v[i];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Matrix> endomorphism_algebra(const Representation& rep) {
  std::vector<Matrix> out;
  for (const auto& fs : intertwiner_space(rep, rep).basis) out.push_back(Matrix::block_diagonal(fs));
  return out;
}

}  // namespace parorb
