#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "parorb/linalg.hpp"
#include "parorb/matrix.hpp"
#include "parorb/poset.hpp"

namespace parorb {

/// Indecomposable K^i -> K^j of the degree-3 algebra: natural embedding plus
/// a nilpotent loop on K^j.
struct CatalogEntry3 {
  std::string id;
  int i = 0;
  int j = 0;
  Matrix embed;
  Matrix nil;
  std::string covering_dim;

  Representation rep() const { return Representation::two_vertex(embed, nil); }
};

/// The 30 indecomposables, in the fixed catalog order.
const std::vector<CatalogEntry3>& catalog();
/// Position of an id in the catalog. Throws UnknownId.
std::size_t catalog_index(const std::string& id);
/// Position of U_{1,0}, the only non-injective entry.
std::size_t non_injective_index();

struct CatalogCheck {
  std::string id;
  bool nil_cubed_zero = false;
  bool nil_squared_nonzero = false;
  bool injective = false;
  bool injectivity_as_expected = false;
  int radical_codim = 0;
  bool passed = false;
};

struct CatalogReport {
  std::vector<CatalogCheck> entries;
  bool all_passed = false;
};

CatalogReport verify_catalog();

/// dim Hom(U, V) by the intertwiner solver. Throws UnknownId.
int hom_dim3(const std::string& left, const std::string& right);
int hom_dim3(std::size_t left, std::size_t right);
/// Full 30 x 30 table, entry [r][c] = dim Hom(catalog[r], catalog[c]). Computed once.
const std::vector<std::vector<int>>& hom_table3();

/// Multiplicities over the catalog.
class Decomposition3 {
 public:
  Decomposition3() : mult_(catalog().size(), 0) {}
  explicit Decomposition3(std::vector<int> multiplicities);
  /// From (id, multiplicity) pairs. Throws UnknownId.
  static Decomposition3 of(const std::vector<std::pair<std::string, int>>& parts);

  const std::vector<int>& multiplicities() const noexcept { return mult_; }
  int multiplicity(std::size_t k) const { return mult_.at(k); }
  /// (sum of i, sum of j) over the summands.
  std::pair<int, int> dims() const;
  /// Summands in reverse catalog order, e.g. "U^{(1)}_{2,3} ⊕ U_{0,1}"; powers as "^k".
  std::string label() const;

  friend bool operator==(const Decomposition3&, const Decomposition3&) = default;
  friend auto operator<=>(const Decomposition3&, const Decomposition3&) = default;

 private:
  std::vector<int> mult_;
};

/// All classes for blocks (b1, b2): no U_{1,0}, dimensions (b1, b1 + b2).
/// Lexicographic on the multiplicity vector.
std::vector<Decomposition3> enumerate_orbit_classes3(int b1, int b2);

/// [A, B] by bilinear expansion over the hom table.
int hom_dim3(const Decomposition3& a, const Decomposition3& b);
/// B lies in the closure of A: [X, A] <= [X, B] for all catalog X. Throws DimMismatch.
bool hom_leq3(const Decomposition3& a, const Decomposition3& b);

struct Hasse3 {
  std::vector<Decomposition3> classes;
  Poset order;
};
Hasse3 hasse3(int b1, int b2);

/// b1^2 + b1 b2 + b2^2 - [A, A]. Throws DimMismatch.
int orbit_dim3(const Decomposition3& a, int b1, int b2);

/// Open orbit by the closed formula (four cases split at r = floor(n/3)).
Decomposition3 open_orbit3(int b1, int b2);

/// Direct sum of the catalog representations.
Representation assemble(const Decomposition3& a);
/// n x n loop of the assembled representation in a basis whose first b1
/// vectors span the image of the embedding.
Matrix matrix_representative(const Decomposition3& a);

}  // namespace parorb
