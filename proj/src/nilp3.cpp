#include "parorb/nilp3.hpp"

#include <functional>

#include "parorb/error.hpp"

namespace parorb {

CatalogReport verify_catalog() {
  CatalogReport report;
  report.all_passed = true;
  for (std::size_t k = 0; k < catalog().size(); ++k) {
    const CatalogEntry3& e = catalog()[k];
    CatalogCheck c;
    c.id = e.id;
    const Matrix sq = e.nil * e.nil;
    c.nil_squared_nonzero = !sq.is_zero();
    c.nil_cubed_zero = (sq * e.nil).is_zero();
    c.injective = rank(e.embed) == e.i;
    c.injectivity_as_expected = c.injective == (k != non_injective_index());
    c.radical_codim = radical_codim(endomorphism_algebra(e.rep()));
    c.passed = c.nil_cubed_zero && c.injectivity_as_expected && c.radical_codim == 1;
    report.all_passed = report.all_passed && c.passed;
    report.entries.push_back(std::move(c));
  }
  return report;
}

int hom_dim3(std::size_t left, std::size_t right) {
  const auto& cat = catalog();
  if (left >= cat.size() || right >= cat.size()) throw Error(ErrorCode::UnknownId, "catalog index out of range");
  return hom_dimension(cat[left].rep(), cat[right].rep());
}

int hom_dim3(const std::string& left, const std::string& right) {
  return hom_table3()[catalog_index(left)][catalog_index(right)];
}

const std::vector<std::vector<int>>& hom_table3() {
  static const std::vector<std::vector<int>> table = [] {
    const std::size_t m = catalog().size();
    std::vector<std::vector<int>> t(m, std::vector<int>(m, 0));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) t[r][c] = hom_dim3(r, c);
    return t;
  }();
  return table;
}

Decomposition3::Decomposition3(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  if (mult_.size() != catalog().size()) throw Error(ErrorCode::SizeMismatch, "one multiplicity per catalog entry");
  for (int m : mult_)
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "multiplicities must be nonnegative");
}

Decomposition3 Decomposition3::of(const std::vector<std::pair<std::string, int>>& parts) {
  std::vector<int> mult(catalog().size(), 0);
  for (const auto& [id, m] : parts) mult[catalog_index(id)] += m;
  return Decomposition3(std::move(mult));
}

std::pair<int, int> Decomposition3::dims() const {
  int i = 0, j = 0;
  for (std::size_t k = 0; k < mult_.size(); ++k) {
    i += mult_[k] * catalog()[k].i;
    j += mult_[k] * catalog()[k].j;
  }
  return {i, j};
}

std::string Decomposition3::label() const {
  std::string s;
  for (std::size_t k = mult_.size(); k-- > 0;) {
    if (mult_[k] == 0) continue;
    if (!s.empty()) s += " ⊕ ";
    s += catalog()[k].id;
    if (mult_[k] > 1) s += "^" + std::to_string(mult_[k]);
  }
  return s.empty() ? "0" : s;
}

std::vector<Decomposition3> enumerate_orbit_classes3(int b1, int b2) {
  if (b1 < 1 || b2 < 1) throw Error(ErrorCode::InvalidArgument, "block sizes must be positive");
  const int n = b1 + b2;
  const auto& cat = catalog();
  const std::size_t skip = non_injective_index();
  std::vector<int> mult(cat.size(), 0);
  std::vector<Decomposition3> out;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int i_left, int j_left) {
    if (k == cat.size()) {
      if (i_left == 0 && j_left == 0) out.emplace_back(mult);
      return;
    }
    if (k == skip) {
      rec(k + 1, i_left, j_left);
      return;
    }
    const int ci = cat[k].i, cj = cat[k].j;
    int bound = j_left / cj;
    if (ci > 0) bound = std::min(bound, i_left / ci);
    for (int m = 0; m <= bound; ++m) {
      mult[k] = m;
      rec(k + 1, i_left - m * ci, j_left - m * cj);
    }
    mult[k] = 0;
  };
  rec(0, b1, n);
  return out;
}

int hom_dim3(const Decomposition3& a, const Decomposition3& b) {
  const auto& t = hom_table3();
  int total = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (a.multiplicity(x) == 0) continue;
    for (std::size_t y = 0; y < t.size(); ++y) total += a.multiplicity(x) * b.multiplicity(y) * t[x][y];
  }
  return total;
}

namespace {

std::vector<int> hom_vector(const Decomposition3& a) {
  const auto& t = hom_table3();
  std::vector<int> v(t.size(), 0);
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) v[x] += t[x][y] * a.multiplicity(y);
  return v;
}

}  // namespace

bool hom_leq3(const Decomposition3& a, const Decomposition3& b) {
  if (a.dims() != b.dims()) throw Error(ErrorCode::DimMismatch, "decompositions of different dimension");
  const auto va = hom_vector(a), vb = hom_vector(b);
  for (std::size_t x = 0; x < va.size(); ++x)
    if (va[x] > vb[x]) return false;
  return true;
}

Hasse3 hasse3(int b1, int b2) {
  std::vector<Decomposition3> classes = enumerate_orbit_classes3(b1, b2);
  std::vector<std::vector<int>> vecs;
  for (const auto& c : classes) vecs.push_back(hom_vector(c));
  const std::size_t m = classes.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      bool ok = true;
      for (std::size_t k = 0; k < vecs[x].size() && ok; ++k) ok = vecs[x][k] <= vecs[y][k];
      leq[x][y] = ok;
    }
  return {std::move(classes), Poset(std::move(leq))};
}

int orbit_dim3(const Decomposition3& a, int b1, int b2) {
  if (a.dims() != std::pair<int, int>{b1, b1 + b2}) {
    throw Error(ErrorCode::DimMismatch, "decomposition does not match blocks (" + std::to_string(b1) + "," +
                                            std::to_string(b2) + ")");
  }
  return b1 * b1 + b1 * b2 + b2 * b2 - hom_dim3(a, a);
}

Decomposition3 open_orbit3(int b1, int b2) {
  if (b1 < 1 || b2 < 1) throw Error(ErrorCode::InvalidArgument, "block sizes must be positive");
  const int n = b1 + b2;
  const int r = n / 3;
  const int rest = n % 3;
  std::vector<std::pair<std::string, int>> parts;
  const char* generic_tail[] = {"U^{(1)}_{3,6}", "U^{(1)}_{2,4}", "U^{(1)}_{1,2}"};
  if (b1 <= b2) {
    if (b1 <= r) {
      parts = {{"U^{(1)}_{1,3}", b1}, {"U_{0,3}", r - b1}};
      if (rest == 1) parts.push_back({"U_{0,1}", 1});
      if (rest == 2) parts.push_back({"U_{0,2}", 1});
    } else {
      parts = {{"U^{(1)}_{3,6}", b1 - r - 1}, {"U^{(1)}_{1,3}", n - 2 * b1}, {generic_tail[rest], 1}};
    }
  } else {
    if (b2 <= r) {
      parts = {{"U^{(1)}_{2,3}", b2}, {"U_{3,3}", r - b2}};
      if (rest == 1) parts.push_back({"U_{1,1}", 1});
      if (rest == 2) parts.push_back({"U_{2,2}", 1});
    } else {
      parts = {{"U^{(1)}_{3,6}", b2 - r - 1}, {"U^{(1)}_{2,3}", n - 2 * b2}, {generic_tail[rest], 1}};
    }
  }
  return Decomposition3::of(parts);
}

Representation assemble(const Decomposition3& a) {
  std::vector<Representation> parts;
  for (std::size_t k = 0; k < catalog().size(); ++k)
    for (int m = 0; m < a.multiplicity(k); ++m) parts.push_back(catalog()[k].rep());
  if (parts.empty()) return Representation{{0, 0}, {Matrix(0, 0)}, Matrix(0, 0)};
  return Representation::direct_sum(parts);
}

Matrix matrix_representative(const Decomposition3& a) {
  std::vector<std::size_t> image, rest;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < catalog().size(); ++k) {
    const CatalogEntry3& e = catalog()[k];
    for (int m = 0; m < a.multiplicity(k); ++m) {
      if (e.i > e.j) throw Error(ErrorCode::InvalidArgument, "non-injective summand has no matrix representative");
      for (int t = 0; t < e.j; ++t) (t < e.i ? image : rest).push_back(offset + t);
      offset += e.j;
    }
  }
  std::vector<std::size_t> order = image;
  order.insert(order.end(), rest.begin(), rest.end());
  const Matrix nil = assemble(a).nil;
  Matrix out(order.size(), order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < order.size(); ++c) out(r, c) = nil(order[r], order[c]);
  return out;
}

}  // namespace parorb
