#include "parorb/block_structure.hpp"

#include <functional>

#include "parorb/error.hpp"

namespace parorb {

BlockStructure::BlockStructure(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::InvalidArgument, "block structure needs at least one block");
  prefix_.push_back(0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] < 1) {
      throw Error(ErrorCode::InvalidArgument, "block sizes must be positive", static_cast<int>(i) + 1);
    }
    prefix_.push_back(prefix_.back() + blocks_[i]);
    vertex_block_.insert(vertex_block_.end(), blocks_[i], static_cast<int>(i) + 1);
  }
}

int BlockStructure::block_of_vertex(int v) const {
  if (v < 1 || v > n()) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range", v);
  return vertex_block_[v - 1];
}

int BlockStructure::parabolic_dim() const {
  int dim = 0;
  for (int i = 0; i < p(); ++i)
    for (int x = 0; x <= i; ++x) dim += blocks_[i] * blocks_[x];
  return dim;
}

bool BlockStructure::is_borel() const {
  for (int b : blocks_)
    if (b != 1) return false;
  return true;
}

std::string BlockStructure::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
  return s + ")";
}

std::vector<BlockStructure> compositions(int n) {
  std::vector<BlockStructure> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int b = 1; b <= remaining; ++b) {
      current.push_back(b);
      rec(remaining - b);
      current.pop_back();
    }
  };
  if (n >= 1) rec(n);
  return out;
}

}  // namespace parorb
