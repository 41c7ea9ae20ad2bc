#pragma once

#include <string>
#include <vector>

namespace parorb {

/// Block sizes (b_1, ..., b_p) of a parabolic subgroup P of GL_n, with the
/// flag dimensions d_i = b_1 + ... + b_i. Blocks are 1-based in the accessors
/// that mirror the mathematical notation (block(i), flag_dim(i)).
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> blocks);

  static BlockStructure borel(int n) { return BlockStructure(std::vector<int>(n, 1)); }

  int p() const noexcept { return static_cast<int>(blocks_.size()); }
  int n() const noexcept { return prefix_.back(); }
  const std::vector<int>& blocks() const noexcept { return blocks_; }
  int block(int i) const { return blocks_.at(i - 1); }
  /// d_i, with d_0 = 0.
  int flag_dim(int i) const { return prefix_.at(i); }
  /// 1-based block containing the 1-based vertex v.
  int block_of_vertex(int v) const;
  /// dim P = sum over pairs x <= i of b_x * b_i.
  int parabolic_dim() const;
  /// Whether position (r, c) (0-based) lies in the block-upper-triangular pattern.
  bool in_pattern(int r, int c) const { return block_of_vertex(r + 1) <= block_of_vertex(c + 1); }
  bool is_borel() const;

  std::string to_string() const;

  friend bool operator==(const BlockStructure& a, const BlockStructure& b) { return a.blocks_ == b.blocks_; }
  friend bool operator!=(const BlockStructure& a, const BlockStructure& b) { return !(a == b); }

 private:
  std::vector<int> blocks_;
  std::vector<int> prefix_;
  std::vector<int> vertex_block_;
};

/// All compositions of n (ordered block-size tuples), in lexicographic order.
std::vector<BlockStructure> compositions(int n);

}  // namespace parorb
