#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace parorb {

/// Finite relation given by a boolean matrix leq[i][j] ("i <= j").
class Poset {
 public:
  explicit Poset(std::vector<std::vector<bool>> leq);

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  /// Elements with nothing strictly below (minima) or above (maxima).
  std::vector<std::size_t> minima() const;
  std::vector<std::size_t> maxima() const;
  /// Cover pairs (i, j): i < j with no k strictly between, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// DOT digraph with an edge i -> j for each cover i < j.
  std::string to_dot(const std::vector<std::string>& labels, const std::string& name = "hasse") const;

 private:
  std::vector<std::vector<bool>> leq_;
};

}  // namespace parorb
