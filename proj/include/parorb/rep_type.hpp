#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "parorb/block_structure.hpp"
#include "parorb/linalg.hpp"
#include "parorb/matrix.hpp"

namespace parorb {

enum class RepType { Finite, Wild };
std::string to_string(RepType t);

/// Finite iff x <= 2, or p = 2 and x = 3, or p = 1 (Jordan theory); Wild otherwise.
RepType classify(const BlockStructure& blocks, int x);

struct NilpotencyReport {
  std::string variant;
  /// Smallest k with M^k = 0, or 0 when M is not nilpotent.
  unsigned nilpotency_index = 0;
  unsigned required = 0;
  /// nilpotency_index is nonzero and at most `required`.
  bool passed = false;
};

struct Witness {
  Matrix matrix;
  NilpotencyReport report;
};

struct WitnessDx {
  Witness printed;
  /// Support of the first column and last row restricted to 1 < i < n and 1 < j < n.
  Witness strict;
  /// "printed", "strict" or "none".
  std::string passing_variant;
};

/// Throws ZeroLambda, RangeError (n < 3).
WitnessDx witness_Dx(int n, int x, const Rational& lambda);
/// 4 x 4 block E(λ) at rows/columns s+1..s+4. Throws ZeroLambda, RangeError.
Witness witness_E(int n, int s, const Rational& lambda);
/// F(λ) in the top-left corner. Throws ZeroLambda, RangeError.
Witness witness_F(int n, const Rational& lambda);
/// 10 x 10 families; reports check N^3 = 0. Throw ZeroParameter.
Witness wild_family_343(const Rational& lambda, const Rational& mu);
Witness wild_family_55(const Rational& lambda, const Rational& mu);

struct ConjugacyVerdict {
  bool conjugate = false;
  /// Invertible g in the pattern of P with g N = N2 g.
  std::optional<Matrix> certificate;
  int trials = 0;
  std::uint64_t seed = 0;
  long range = 0;
  double confidence = 0.0;
  /// Dimension of the space of pattern intertwiners.
  int intertwiner_dim = 0;
};

/// Throws SizeMismatch.
ConjugacyVerdict is_p_conjugate(const Matrix& n, const Matrix& n2, const BlockStructure& blocks,
                                const SamplingOptions& options = {});

}  // namespace parorb
