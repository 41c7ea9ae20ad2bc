#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "parorb/block_structure.hpp"
#include "parorb/matrix.hpp"

namespace parorb {

/// Arrow source -> target between 1-based vertices (or blocks).
struct Arrow {
  int source = 0;
  int target = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Directed graph on vertices 1..n in which every vertex meets at most one
/// arrow. Labels a B-orbit of 2-nilpotent matrices. Arrows are kept sorted by
/// (source, target).
class OrientedLinkPattern {
 public:
  OrientedLinkPattern() = default;
  OrientedLinkPattern(int n, std::vector<Arrow> arrows);

  int n() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  bool is_fixed(int v) const;

  /// 0/1 matrix with N(target, source) = 1 for every arrow.
  Matrix normal_form() const;
  std::string to_string() const;

  friend auto operator<=>(const OrientedLinkPattern&, const OrientedLinkPattern&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

/// Block-level pattern labelling a P-orbit: counts[i][j] is the number of
/// arrows from block j+1 to block i+1 (0-based storage), loops allowed. Dots
/// are derived, never stored.
class EnhancedOLP {
 public:
  EnhancedOLP(BlockStructure blocks, std::vector<std::vector<int>> counts);

  const BlockStructure& blocks() const noexcept { return blocks_; }
  const std::vector<std::vector<int>>& counts() const noexcept { return counts_; }
  int p() const noexcept { return blocks_.p(); }
  /// dots[i] = b_i minus the arrow incidences at block i (loops count twice).
  std::vector<int> dots() const;
  int arrow_count() const;
  std::vector<int> flattened() const;

  /// Compact notation "(j→i)...·dots", arrows by (source, target).
  std::string label() const;

  friend bool operator==(const EnhancedOLP& a, const EnhancedOLP& b) {
    return a.blocks_ == b.blocks_ && a.counts_ == b.counts_;
  }
  friend bool operator<(const EnhancedOLP& a, const EnhancedOLP& b) { return a.flattened() < b.flattened(); }

 private:
  BlockStructure blocks_;
  std::vector<std::vector<int>> counts_;
};

/// Oriented link pattern with one nonzero rational label per arrow; labels
/// are aligned with pattern().arrows().
class LabelledOLP {
 public:
  LabelledOLP(int n, std::vector<std::pair<Arrow, Rational>> labelled_arrows);

  const OrientedLinkPattern& pattern() const noexcept { return pattern_; }
  const std::vector<Rational>& labels() const noexcept { return labels_; }

 private:
  OrientedLinkPattern pattern_;
  std::vector<Rational> labels_;
};

/// Validated construction; throws ConstraintViolation naming the first block
/// whose capacity is exceeded.
EnhancedOLP eolp_from_counts(const BlockStructure& blocks, const std::vector<std::vector<int>>& counts);

/// Buckets the arrows of a size-n pattern by block. Throws SizeMismatch.
EnhancedOLP olp_to_eolp(const OrientedLinkPattern& pattern, const BlockStructure& blocks);

/// Reads the oriented link pattern of a 0/1 partial-permutation matrix with
/// N^2 = 0. Throws NotNormalForm otherwise.
OrientedLinkPattern pattern_of_normal_form(const Matrix& n);

}  // namespace parorb
