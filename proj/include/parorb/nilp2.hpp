#pragma once

#include <string>
#include <vector>

#include "parorb/block_structure.hpp"
#include "parorb/link_pattern.hpp"
#include "parorb/matrix.hpp"
#include "parorb/poset.hpp"

namespace parorb {

/// Indecomposable of rep^inj(Q_p, I_2): V_k (one dot) or U_{k,l} (an arrow
/// from block l to block k). Indices are 1-based blocks.
struct Indecomposable2 {
  enum class Kind { V, U };
  Kind kind = Kind::V;
  int k = 1;
  int l = 0;

  static Indecomposable2 v(int k) { return {Kind::V, k, 0}; }
  static Indecomposable2 u(int k, int l) { return {Kind::U, k, l}; }
  std::string to_string() const;
  friend bool operator==(const Indecomposable2&, const Indecomposable2&) = default;
};

/// dim Hom(left, right). With p > 0 indices are checked against 1..p.
int hom_dim_indec(const Indecomposable2& left, const Indecomposable2& right, int p = 0);

/// Summands of the class: V_i per dot, U_{i,j} per arrow j -> i.
std::vector<Indecomposable2> summands(const EnhancedOLP& e);

/// a[k-1] = [V_k, M], b[k-1][l-1] = [U_{k,l}, M].
struct HomProfile {
  std::vector<int> a;
  std::vector<std::vector<int>> b;
};

HomProfile hom_profile(const EnhancedOLP& e);
/// abar[i-1] = [M, V_i], bbar[i-1][j-1] = [M, U_{i,j}].
HomProfile dual_hom_profile(const EnhancedOLP& e);

/// [E, F] from E's multiplicities against F's profile; checked against the
/// dual form. Throws BlockMismatch.
int hom_dim(const EnhancedOLP& e, const EnhancedOLP& f);
/// F ∈ closure of the orbit of E. Throws BlockMismatch.
bool deg_leq(const EnhancedOLP& e, const EnhancedOLP& f);

/// All classes, lexicographic on the flattened count matrix.
std::vector<EnhancedOLP> enumerate_orbit_classes(const BlockStructure& blocks);

struct Hasse2 {
  std::vector<EnhancedOLP> classes;
  Poset order;
};
Hasse2 hasse(const BlockStructure& blocks);

int orbit_dim(const EnhancedOLP& e);

/// B-normal form pattern representing the class: arrows are placed in order of
/// (source block ascending, target block descending), each taking the lowest
/// free vertex of its source block and the highest free vertex of its target
/// block.
OrientedLinkPattern normal_form_pattern(const EnhancedOLP& e);
Matrix normal_form(const EnhancedOLP& e);

/// Every oriented link pattern whose block counts equal e, sorted.
std::vector<OrientedLinkPattern> expand_to_b_orbits(const EnhancedOLP& e);

/// p x p inner sums of a B-normal form. Throws NotNormalForm.
std::vector<std::vector<int>> block_sums(const Matrix& n, const BlockStructure& blocks);

/// s(i, j) for 1 <= i <= n+1, 0 <= j <= n.
class InvariantTable {
 public:
  explicit InvariantTable(int n) : n_(n), s_(n + 2, std::vector<int>(n + 1, 0)) {}
  int n() const noexcept { return n_; }
  int at(int i, int j) const { return s_.at(i).at(j); }
  int& at(int i, int j) { return s_.at(i).at(j); }
  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> s_;
};

/// s(i, j) = dim((X V_j + V_{i-1}) / V_{i-1}), the rank of rows i..n and
/// columns 1..j of X. Invariant under conjugation by invertible upper
/// triangular matrices. Throws NotTwoNilpotent.
InvariantTable invariant_table(const Matrix& x);
/// s(i, j) = dim(X V_j ∩ V_{>=i}) computed literally by subspace intersection.
InvariantTable intersection_table(const Matrix& x);

/// B-orbit of a 2-nilpotent matrix. Throws NotTwoNilpotent, ReconstructionMismatch.
OrientedLinkPattern identify(const Matrix& x);

/// Class with arrows k -> n-k+1 (k = 1..floor(n/2)) resolved to blocks.
EnhancedOLP open_orbit(const BlockStructure& blocks);

struct CoverReport {
  std::vector<Indecomposable2> common;
  std::vector<Indecomposable2> d;
  std::vector<Indecomposable2> d_prime;
  /// [X,D] = [X,D'] and [D,X] = [D',X] for every common summand X.
  bool hom_conditions = true;
  int codimension = 0;
};

/// Throws NotACover unless f covers e in the degeneration order.
CoverReport verify_cover(const EnhancedOLP& e, const EnhancedOLP& f);

/// N(target, source) = label for each labelled arrow. Throws ZeroLabel.
Matrix u_normal_form(const LabelledOLP& l);

std::string summands_to_string(const std::vector<Indecomposable2>& parts);

}  // namespace parorb
