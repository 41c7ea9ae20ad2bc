#include "parorb/rep_type.hpp"

#include "parorb/error.hpp"

namespace parorb {

std::string to_string(RepType t) { return t == RepType::Finite ? "Finite" : "Wild"; }

RepType classify(const BlockStructure& blocks, int x) {
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "nilpotency degree must be positive");
  if (x <= 2 || blocks.p() == 1 || (blocks.p() == 2 && x == 3)) return RepType::Finite;
  return RepType::Wild;
}

namespace {

Witness make_witness(Matrix m, const std::string& variant, unsigned required) {
  Witness w{std::move(m), {}};
  w.report.variant = variant;
  w.report.required = required;
  w.report.nilpotency_index = w.matrix.nilpotency_index();
  w.report.passed = w.report.nilpotency_index != 0 && w.report.nilpotency_index <= required;
  return w;
}

void require_nonzero(const Rational& v, ErrorCode code, const char* what) {
  if (sgn(v) == 0) throw Error(code, std::string(what) + " must be nonzero");
}

}  // namespace

WitnessDx witness_Dx(int n, int x, const Rational& lambda) {
  require_nonzero(lambda, ErrorCode::ZeroLambda, "lambda");
  if (n < 3) throw Error(ErrorCode::RangeError, "D_x needs n >= 3");
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "nilpotency degree must be positive");
  Matrix printed(n, n), strict(n, n);
  for (int i = 1; i < n; ++i) printed(i - 1, 0) = 1;
  for (int j = 1; j < n; ++j) printed(n - 1, j - 1) = 1;
  printed(n - 1, 0) = lambda;
  for (int i = 2; i < n; ++i) strict(i - 1, 0) = 1;
  for (int j = 2; j < n; ++j) strict(n - 1, j - 1) = 1;
  strict(n - 1, 0) = lambda;
  WitnessDx out{make_witness(std::move(printed), "printed", x), make_witness(std::move(strict), "strict", x), "none"};
  if (out.printed.report.passed) {
    out.passing_variant = "printed";
  } else if (out.strict.report.passed) {
    out.passing_variant = "strict";
  }
  return out;
}

Witness witness_E(int n, int s, const Rational& lambda) {
  require_nonzero(lambda, ErrorCode::ZeroLambda, "lambda");
  if (s < 0 || n < s + 4) throw Error(ErrorCode::RangeError, "E^s needs 0 <= s and s + 4 <= n");
  const Matrix e{{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, {lambda, 1, 1, 0}};
  Matrix m(n, n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(s + i, s + j) = e(i, j);
  return make_witness(std::move(m), "E", 4);
}

Witness witness_F(int n, const Rational& lambda) {
  require_nonzero(lambda, ErrorCode::ZeroLambda, "lambda");
  if (n < 4) throw Error(ErrorCode::RangeError, "F needs n >= 4");
  const Matrix f{{1, 1, 0, 0}, {-1, -1, 0, 0}, {lambda - 1, lambda, -1, 1}, {lambda, lambda - 1, -1, 1}};
  Matrix m(n, n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = f(i, j);
  return make_witness(std::move(m), "F", 4);
}

Witness wild_family_343(const Rational& lambda, const Rational& mu) {
  require_nonzero(lambda, ErrorCode::ZeroParameter, "lambda");
  require_nonzero(mu, ErrorCode::ZeroParameter, "mu");
  Matrix m(10, 10);
  auto set = [&m](int r, int c, const Rational& v) { m(r - 1, c - 1) = v; };
  set(2, 8, 1);
  set(3, 2, 1);
  set(5, 8, -1);
  set(6, 1, 1);
  set(7, 2, 1);
  set(7, 5, 1);
  set(7, 6, -mu);
  set(7, 9, 1);
  set(9, 1, lambda);
  set(9, 4, 1);
  set(10, 2, -1);
  set(10, 6, 1);
  return make_witness(std::move(m), "wild343", 3);
}

Witness wild_family_55(const Rational& lambda, const Rational& mu) {
  require_nonzero(lambda, ErrorCode::ZeroParameter, "lambda");
  require_nonzero(mu, ErrorCode::ZeroParameter, "mu");
  Matrix m(10, 10);
  auto set = [&m](int r, int c, const Rational& v) { m(r - 1, c - 1) = v; };
  set(2, 1, 1);
  set(5, 4, 1);
  set(5, 9, 1);
  set(7, 1, lambda);
  set(7, 6, 1);
  set(8, 3, 1);
  set(8, 7, 1);
  set(9, 2, 1);
  set(10, 4, 1 - mu);
  set(10, 8, 1);
  set(10, 9, -mu);
  return make_witness(std::move(m), "wild55", 3);
}

ConjugacyVerdict is_p_conjugate(const Matrix& n, const Matrix& n2, const BlockStructure& blocks,
                                const SamplingOptions& options) {
  if (!n.is_square() || n.rows() != n2.rows() || n.cols() != n2.cols() || static_cast<int>(n.rows()) != blocks.n()) {
    throw Error(ErrorCode::SizeMismatch, "matrices and block structure disagree in size");
  }
  const std::vector<Matrix> space = pattern_intertwiners(n, n2, blocks);
  const InvertibleSearch search = contains_invertible(space, n.rows(), options);
  ConjugacyVerdict v;
  v.trials = search.trials;
  v.seed = search.seed;
  v.range = search.range;
  v.confidence = search.confidence;
  v.intertwiner_dim = static_cast<int>(space.size());
  if (search.certificate) {
    const Matrix& g = *search.certificate;
    for (int r = 0; r < blocks.n(); ++r)
      for (int c = 0; c < blocks.n(); ++c)
        if (!blocks.in_pattern(r, c) && sgn(g(r, c)) != 0) {
          throw Error(ErrorCode::ReconstructionMismatch, "certificate leaves the parabolic pattern");
        }
    if (rank(g) != blocks.n() || !(g * n == n2 * g)) {
      throw Error(ErrorCode::ReconstructionMismatch, "certificate failed re-validation");
    }
    v.conjugate = true;
    v.certificate = g;
  }
  return v;
}

}  // namespace parorb
