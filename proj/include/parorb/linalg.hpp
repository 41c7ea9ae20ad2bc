#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "parorb/block_structure.hpp"
#include "parorb/matrix.hpp"

namespace parorb {

using Vector = std::vector<Rational>;

/// Exact rank by fraction-free (Bareiss) elimination on row-scaled integers.
int rank(const Matrix& a);
Rational determinant(const Matrix& a);
/// Inverse of a square matrix; throws InvalidArgument when singular.
Matrix inverse(const Matrix& a);
/// Reduced row echelon form. Pivot columns (0-based) are written to `pivots`.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);
/// Basis of {v : a v = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& a);

/// Incremental row echelon basis. Each stored row has a pivot entry 1 and zeros
/// at the pivots of all earlier rows.
class RowReducer {
 public:
  explicit RowReducer(std::size_t width) : width_(width) {}

  Vector reduce(Vector v) const;
  /// Stores v if it is independent of the stored rows; returns whether it was.
  bool insert(Vector v);
  bool contains(const Vector& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Linearly independent column vectors spanning a subspace of K^ambient_dim.
class SubspaceBasis {
 public:
  /// Keeps an independent subset of the spanning vectors (first-wins).
  SubspaceBasis(std::size_t ambient_dim, const std::vector<Vector>& spanning);
  /// Column space of m.
  static SubspaceBasis column_space(const Matrix& m);
  /// Span of the standard basis vectors e_first..e_last (1-based, inclusive).
  static SubspaceBasis coordinate(std::size_t ambient_dim, std::size_t first, std::size_t last);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix as_matrix() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> vectors_;
};

/// dim(A ∩ B) = dim A + dim B - rank[A|B]. Throws AmbientMismatch.
int intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b);

/// Representation of the quiver 1 -> 2 -> ... -> p with a loop at p:
/// spaces K^dims[k], maps[k] : K^dims[k] -> K^dims[k+1], loop nil on K^dims[p-1].
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  Matrix nil;

  /// Throws ShapeMismatch on inconsistent shapes.
  void validate() const;
  /// Representation of Q_2 given by an embedding K^i -> K^j and a loop on K^j.
  static Representation two_vertex(const Matrix& embed, const Matrix& nil);
  /// Flag representation of N for the block structure: vertex k carries K^{d_k}
  /// with natural inclusions, the loop is N.
  static Representation of_flag(const Matrix& n, const BlockStructure& blocks);
  static Representation direct_sum(const std::vector<Representation>& parts);
};

struct IntertwinerSpace {
  int dimension = 0;
  /// Each basis element is one matrix f_k : K^dims_A[k] -> K^dims_B[k] per vertex.
  std::vector<std::vector<Matrix>> basis;
};

/// Solves f_{k+1} maps_A[k] = maps_B[k] f_k and f_p nil_A = nil_B f_p.
/// Throws ShapeMismatch when the quivers differ.
IntertwinerSpace intertwiner_space(const Representation& a, const Representation& b, bool with_basis = true);
/// Dimension only, via the rank of the system.
int hom_dimension(const Representation& a, const Representation& b);

/// Basis of {g in the block-upper-triangular pattern : g a = b g}.
std::vector<Matrix> pattern_intertwiners(const Matrix& a, const Matrix& b, const BlockStructure& blocks);
/// Dimension of the same space (nullity of the linear map).
int pattern_intertwiner_dim(const Matrix& a, const Matrix& b, const BlockStructure& blocks);

struct SamplingOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  long range = 1000000;
  std::uint64_t stream = 0;
};

struct InvertibleSearch {
  std::optional<Matrix> certificate;
  int trials = 0;
  std::uint64_t seed = 0;
  long range = 0;
  /// Probability bound that an invertible element exists yet was missed,
  /// subtracted from 1. Exactly 1 when the space is {0}.
  double confidence = 0.0;
  bool exact = false;
};

/// Seeded search for an invertible element of span(space). The identity is
/// returned directly when it lies in the span.
InvertibleSearch contains_invertible(const std::vector<Matrix>& space, std::size_t n, const SamplingOptions& options = {});

/// 64-bit seed for a derived stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// dim(A / rad A) for a unital matrix algebra given by a spanning set, with
/// rad A the kernel of the trace form. Throws NotClosedUnderMultiplication.
int radical_codim(const std::vector<Matrix>& algebra);
/// Basis of rad A.
std::vector<Matrix> radical_basis(const std::vector<Matrix>& algebra);

/// End(rep) as block-diagonal matrices diag(f_1, ..., f_p).
std::vector<Matrix> endomorphism_algebra(const Representation& rep);

Vector flatten(const Matrix& m);

}  // namespace parorb
