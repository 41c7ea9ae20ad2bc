#include <algorithm>

#include "parorb/error.hpp"
#include "parorb/nilp3.hpp"

namespace parorb {

namespace {

struct Term {
  int sign;
  int row;
  int col;
};

struct RawEntry {
  const char* id;
  int i;
  int j;
  const char* covering_dim;
  std::vector<Term> nil;
};

// Loop matrices as signed sums of matrix units E_{r,s} on K^j.
const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> entries = {
    {"U_{0,1}", 0, 1, "0 1", {}},
    {"U_{0,2}", 0, 2, "0 1 0 1", {{1, 2, 1}}},
    {"U_{0,3}", 0, 3, "0 1 0 1 0 1", {{1, 2, 1}, {1, 3, 2}}},
    {"U_{1,0}", 1, 0, "1 0", {}},
    {"U_{1,1}", 1, 1, "1 1", {}},
    {"U^{(1)}_{1,2}", 1, 2, "1 1 0 1", {{1, 2, 1}}},
    {"U^{(2)}_{1,2}", 1, 2, "0 1 1 1", {{1, 1, 2}}},
    {"U^{(1)}_{1,3}", 1, 3, "1 1 0 1 0 1", {{1, 2, 1}, {1, 3, 2}}},
    {"U^{(2)}_{1,3}", 1, 3, "0 1 1 1 0 1", {{1, 3, 1}, {1, 1, 2}}},
    {"U^{(3)}_{1,3}", 1, 3, "0 1 0 1 1 1", {{1, 1, 2}, {1, 2, 3}}},
    {"U_{1,4}", 1, 4, "0 1 1 2 0 1", {{1, 2, 1}, {1, 2, 3}, {1, 3, 4}}},
    {"U_{2,2}", 2, 2, "1 1 1 1", {{1, 2, 1}}},
    {"U^{(1)}_{2,3}", 2, 3, "1 1 1 1 0 1", {{1, 2, 1}, {1, 3, 2}}},
    {"U^{(2)}_{2,3}", 2, 3, "1 1 0 1 1 1", {{1, 3, 1}, {1, 2, 3}}},
    {"U^{(3)}_{2,3}", 2, 3, "0 1 1 1 1 1", {{1, 1, 2}, {1, 2, 3}}},
    {"U^{(1)}_{2,4}", 2, 4, "1 1 1 2 0 1", {{1, 3, 1}, {1, 4, 2}, {1, 4, 3}}},
    {"U^{(2)}_{2,4}", 2, 4, "0 1 1 2 1 1", {{1, 1, 2}, {1, 1, 3}, {1, 3, 4}}},
    {"U^{(1)}_{2,5}", 2, 5, "1 2 1 2 0 1", {{1, 3, 1}, {1, 4, 2}, {1, 3, 4}, {1, 1, 5}}},
    {"U^{(2)}_{2,5}", 2, 5, "0 1 1 2 1 2", {{1, 3, 2}, {1, 1, 4}, {1, 2, 5}, {1, 4, 5}}},
    {"U_{2,6}", 2, 6, "0 1 1 2 1 2 0 1", {{1, 1, 3}, {1, 2, 1}, {1, 2, 4}, {-1, 4, 3}, {1, 5, 1}, {1, 6, 2}}},
    {"U_{3,3}", 3, 3, "1 1 1 1 1 1", {{1, 2, 1}, {1, 3, 2}}},
    {"U_{3,4}", 3, 4, "1 1 1 2 1 1", {{1, 1, 2}, {1, 1, 4}, {1, 4, 3}}},
    {"U^{(1)}_{3,5}", 3, 5, "1 2 1 2 1 1", {{1, 4, 2}, {1, 2, 3}, {1, 5, 3}, {1, 1, 5}}},
    {"U^{(2)}_{3,5}", 3, 5, "1 1 1 2 1 2", {{1, 1, 2}, {1, 4, 3}, {1, 1, 4}, {1, 2, 5}}},
    {"U_{3,6}", 3, 6, "1 2 1 2 1 2", {{1, 1, 2}, {1, 4, 2}, {1, 5, 3}, {1, 4, 5}, {1, 2, 6}, {-1, 5, 6}}},
    {"U^{(1)}_{3,6}", 3, 6, "1 1 1 2 1 2 0 1", {{1, 2, 1}, {1, 3, 2}, {1, 3, 4}, {-1, 4, 1}, {1, 5, 2}, {1, 6, 3}}},
    {"U^{(2)}_{3,6}", 3, 6, "0 1 1 2 1 2 1 1", {{1, 2, 5}, {1, 3, 2}, {1, 3, 6}, {1, 5, 4}, {1, 6, 1}, {-1, 6, 5}}},
    {"U_{3,7}", 3, 7, "1 2 1 3 1 2", {{1, 1, 2}, {1, 4, 2}, {-1, 6, 3}, {-1, 1, 5}, {-1, 4, 6}, {-1, 5, 7}}},
    {"U_{4,6}", 4, 6, "1 1 1 2 1 2 1 1", {{1, 2, 1}, {1, 3, 2}, {1, 3, 5}, {1, 4, 3}, {-1, 5, 1}, {1, 6, 2}}},
    {"U_{4,7}", 4, 7, "1 2 2 3 1 2", {{1, 5, 2}, {1, 1, 3}, {1, 2, 4}, {1, 6, 4}, {1, 3, 7}, {1, 6, 7}}},
  };
  return entries;
}

std::vector<CatalogEntry3> build_catalog() {
  std::vector<CatalogEntry3> out;
  for (const RawEntry& raw : raw_entries()) {
    CatalogEntry3 e;
    e.id = raw.id;
    e.i = raw.i;
    e.j = raw.j;
    e.covering_dim = raw.covering_dim;
    e.embed = Matrix(raw.j, raw.i);
    for (int k = 0; k < std::min(raw.i, raw.j); ++k) e.embed(k, k) = 1;
    e.nil = Matrix(raw.j, raw.j);
    for (const Term& t : raw.nil) e.nil(t.row - 1, t.col - 1) += t.sign;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry3>& catalog() {
  static const std::vector<CatalogEntry3> entries = build_catalog();
  return entries;
}

std::size_t catalog_index(const std::string& id) {
  const auto& cat = catalog();
  for (std::size_t k = 0; k < cat.size(); ++k)
    if (cat[k].id == id) return k;
  throw Error(ErrorCode::UnknownId, "unknown catalog id " + id);
}

std::size_t non_injective_index() {
  static const std::size_t index = catalog_index("U_{1,0}");
  return index;
}

}  // namespace parorb
