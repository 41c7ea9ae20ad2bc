#include <gtest/gtest.h>

#include <random>

#include "parorb/error.hpp"
#include "parorb/linalg.hpp"
#include "parorb/nilp3.hpp"
#include "parorb/rep_type.hpp"

using namespace parorb;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + 3) % 3);
  return m;
}

Vector e(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::unit(2, 2, 1, 0)), 1);
  EXPECT_EQ(rank(Matrix(3, 4)), 0);
  EXPECT_EQ(rank(witness_E(4, 0, 5).matrix), 3);
}

TEST(Rank, TransposeInvariant) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 6;
    Matrix m = random_matrix(rng, r, c);
    if (t % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Determinant, AndInverse) {
  const Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(determinant(m), 18);
  EXPECT_TRUE((m * inverse(m)).is_identity());
  const Matrix swap{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(swap), -1);
  EXPECT_EQ(determinant(Matrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}), Rational(1, 3));
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), Error);
}

TEST(Nullspace, Basis) {
  const Matrix m{{1, 2, 3}, {2, 4, 6}};
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const Vector& v : ns) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
}

TEST(IntersectionDim, Examples) {
  const SubspaceBasis e2(2, {e(2, 2)}), e1(2, {e(2, 1)});
  EXPECT_EQ(intersection_dim(e2, e2), 1);
  EXPECT_EQ(intersection_dim(e1, e2), 0);
  Vector v = e(3, 1);
  v[1] = 1;
  const SubspaceBasis a(3, {v, e(3, 3)}), b(3, {e(3, 2), e(3, 3)});
  EXPECT_EQ(intersection_dim(a, b), 1);
}

TEST(IntersectionDim, AmbientMismatch) {
  try {
    intersection_dim(SubspaceBasis(2, {e(2, 1)}), SubspaceBasis(3, {e(3, 1)}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::AmbientMismatch);
  }
}

TEST(IntersectionDim, SymmetricAndBounded) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const SubspaceBasis a = SubspaceBasis::column_space(random_matrix(rng, 5, 1 + t % 4, -1, 1));
    const SubspaceBasis b = SubspaceBasis::column_space(random_matrix(rng, 5, 1 + (t / 4) % 4, -1, 1));
    const int d = intersection_dim(a, b);
    EXPECT_EQ(d, intersection_dim(b, a));
    EXPECT_LE(d, static_cast<int>(std::min(a.dim(), b.dim())));
    EXPECT_GE(d, 0);
  }
}

TEST(IntertwinerSpace, CatalogExamples) {
  const auto& u01 = catalog()[catalog_index("U_{0,1}")];
  const auto& u14 = catalog()[catalog_index("U_{1,4}")];
  const auto& u10 = catalog()[catalog_index("U_{1,0}")];
  const auto& u37 = catalog()[catalog_index("U_{3,7}")];
  const auto& u47 = catalog()[catalog_index("U_{4,7}")];
  EXPECT_EQ(intertwiner_space(u01.rep(), u14.rep()).dimension, 2);
  EXPECT_EQ(intertwiner_space(u10.rep(), u01.rep()).dimension, 0);
  EXPECT_EQ(intertwiner_space(u37.rep(), u47.rep()).dimension, 11);
}

TEST(IntertwinerSpace, BasisSolvesSystem) {
  const auto& a = catalog()[catalog_index("U^{(1)}_{2,5}")];
  const auto& b = catalog()[catalog_index("U_{2,6}")];
  const IntertwinerSpace s = intertwiner_space(a.rep(), b.rep());
  EXPECT_EQ(s.dimension, static_cast<int>(s.basis.size()));
  EXPECT_EQ(s.dimension, hom_dimension(a.rep(), b.rep()));
  for (const auto& f : s.basis) {
    EXPECT_EQ(f[1] * a.embed, b.embed * f[0]);
    EXPECT_EQ(f[1] * a.nil, b.nil * f[1]);
  }
}

TEST(IntertwinerSpace, ContainsIdentity) {
  for (const auto& entry : catalog()) {
    const IntertwinerSpace s = intertwiner_space(entry.rep(), entry.rep());
    EXPECT_GE(s.dimension, 1) << entry.id;
    RowReducer span(entry.i * entry.i + entry.j * entry.j);
    for (const auto& f : s.basis) {
      Vector v = flatten(f[0]);
      const Vector w = flatten(f[1]);
      v.insert(v.end(), w.begin(), w.end());
      span.insert(v);
    }
    Vector id = flatten(Matrix::identity(entry.i));
    const Vector id2 = flatten(Matrix::identity(entry.j));
    id.insert(id.end(), id2.begin(), id2.end());
    EXPECT_TRUE(span.contains(id)) << entry.id;
  }
}

TEST(IntertwinerSpace, ShapeMismatch) {
  Representation three{{1, 1, 1}, {Matrix::identity(1), Matrix::identity(1)}, Matrix(1, 1)};
  const Representation two = Representation::two_vertex(Matrix::identity(1), Matrix(1, 1));
  try {
    intertwiner_space(three, two);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ShapeMismatch);
  }
  Representation bad{{1, 2}, {Matrix::identity(1)}, Matrix(2, 2)};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(IntertwinerSpace, FlagRepresentationMatchesPatternSolve) {
  const BlockStructure b({1, 2, 1});
  const Matrix n = Matrix::unit(4, 4, 3, 0) + Matrix::unit(4, 4, 1, 2);
  const Matrix m = Matrix::unit(4, 4, 2, 1);
  EXPECT_EQ(hom_dimension(Representation::of_flag(n, b), Representation::of_flag(m, b)),
            pattern_intertwiner_dim(n, m, b));
}

TEST(ContainsInvertible, Identity) {
  const InvertibleSearch s = contains_invertible({Matrix::identity(3)}, 3);
  ASSERT_TRUE(s.certificate.has_value());
  EXPECT_TRUE(s.certificate->is_identity());
}

TEST(ContainsInvertible, NilpotentSpace) {
  const InvertibleSearch s = contains_invertible({Matrix::unit(2, 2, 0, 1)}, 2, {20, 3, 1000000, 0});
  EXPECT_FALSE(s.certificate.has_value());
  EXPECT_EQ(s.trials, 20);
  EXPECT_EQ(s.seed, 3u);
  EXPECT_EQ(s.range, 1000000);
  EXPECT_GE(s.confidence, 1.0 - 1e-6);
  EXPECT_FALSE(s.exact);
}

TEST(ContainsInvertible, DiagonalSpace) {
  const InvertibleSearch s = contains_invertible({Matrix::unit(2, 2, 0, 0), Matrix::unit(2, 2, 1, 1)}, 2);
  ASSERT_TRUE(s.certificate.has_value());
  const Matrix& g = *s.certificate;
  EXPECT_EQ(g(0, 1), 0);
  EXPECT_EQ(g(1, 0), 0);
  EXPECT_NE(g(0, 0) * g(1, 1), 0);
}

TEST(ContainsInvertible, ZeroSpaceIsExact) {
  const InvertibleSearch s = contains_invertible({}, 3);
  EXPECT_FALSE(s.certificate.has_value());
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.confidence, 1.0);
}

TEST(ContainsInvertible, Reproducible) {
  const std::vector<Matrix> space{Matrix::unit(3, 3, 0, 0) + Matrix::unit(3, 3, 1, 2), Matrix::unit(3, 3, 1, 1),
                                  Matrix::unit(3, 3, 2, 1), Matrix::unit(3, 3, 2, 2)};
  const auto a = contains_invertible(space, 3, {20, 42, 1000000, 5});
  const auto b = contains_invertible(space, 3, {20, 42, 1000000, 5});
  ASSERT_TRUE(a.certificate && b.certificate);
  EXPECT_EQ(*a.certificate, *b.certificate);
  const auto c = contains_invertible(space, 3, {20, 42, 1000000, 6});
  ASSERT_TRUE(c.certificate);
  EXPECT_NE(*a.certificate, *c.certificate);
}

TEST(RadicalCodim, Examples) {
  EXPECT_EQ(radical_codim({Matrix::identity(3)}), 1);
  const std::vector<Matrix> upper{Matrix::unit(2, 2, 0, 0), Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 1)};
  EXPECT_EQ(radical_codim(upper), 2);
  const auto& u = catalog()[catalog_index("U^{(1)}_{2,4}")];
  const auto end = endomorphism_algebra(u.rep());
  EXPECT_EQ(end.size(), 2u);
  EXPECT_EQ(radical_codim(end), 1);
}

TEST(RadicalCodim, NotClosed) {
  try {
    radical_codim({Matrix::identity(2), Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 0)});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotClosedUnderMultiplication);
  }
}

TEST(RadicalBasis, ElementsAreNilpotent) {
  for (const auto& entry : catalog()) {
    for (const Matrix& x : radical_basis(endomorphism_algebra(entry.rep()))) {
      EXPECT_NE(x.nilpotency_index(), 0u) << entry.id;
    }
  }
}
