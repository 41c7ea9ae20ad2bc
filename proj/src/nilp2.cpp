#include "parorb/nilp2.hpp"

#include <algorithm>
#include <functional>

#include "parorb/error.hpp"
#include "parorb/linalg.hpp"

namespace parorb {

std::string Indecomposable2::to_string() const {
  if (kind == Kind::V) return "V_" + std::to_string(k);
  return "U_{" + std::to_string(k) + "," + std::to_string(l) + "}";
}

int hom_dim_indec(const Indecomposable2& left, const Indecomposable2& right, int p) {
  for (const Indecomposable2* x : {&left, &right}) {
    const bool bad = x->k < 1 || (p > 0 && x->k > p) ||
                     (x->kind == Indecomposable2::Kind::U && (x->l < 1 || (p > 0 && x->l > p)));
    if (bad) throw Error(ErrorCode::IndexOutOfRange, "indecomposable index out of range: " + x->to_string());
  }
  using K = Indecomposable2::Kind;
  const int i = right.k;
  if (left.kind == K::V) return i <= left.k ? 1 : 0;
  const int k = left.k, l = left.l;
  if (right.kind == K::V) return i <= l ? 1 : 0;
  const int j = right.l;
  return (i <= l ? 1 : 0) + ((j <= l && i <= k) ? 1 : 0);
}

std::vector<Indecomposable2> summands(const EnhancedOLP& e) {
  std::vector<Indecomposable2> out;
  const auto dots = e.dots();
  for (int i = 0; i < e.p(); ++i)
    for (int d = 0; d < dots[i]; ++d) out.push_back(Indecomposable2::v(i + 1));
  for (int i = 0; i < e.p(); ++i)
    for (int j = 0; j < e.p(); ++j)
      for (int c = 0; c < e.counts()[i][j]; ++c) out.push_back(Indecomposable2::u(i + 1, j + 1));
  return out;
}

std::string summands_to_string(const std::vector<Indecomposable2>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " ⊕ " : "") + parts[i].to_string();
  return s;
}

HomProfile hom_profile(const EnhancedOLP& e) {
  const int p = e.p();
  const auto& m = e.counts();
  const auto dots = e.dots();
  HomProfile h{std::vector<int>(p, 0), std::vector<std::vector<int>>(p, std::vector<int>(p, 0))};
  int acc = 0;
  for (int k = 0; k < p; ++k) {
    acc += dots[k];
    for (int j = 0; j < p; ++j) acc += m[k][j];
    h.a[k] = acc;
  }
  for (int k = 0; k < p; ++k)
    for (int l = 0; l < p; ++l) {
      int c = 0;
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) c += m[i][j];
      h.b[k][l] = h.a[l] + c;
    }
  return h;
}

HomProfile dual_hom_profile(const EnhancedOLP& e) {
  const int p = e.p();
  const auto& m = e.counts();
  const auto dots = e.dots();
  HomProfile h{std::vector<int>(p, 0), std::vector<std::vector<int>>(p, std::vector<int>(p, 0))};
  int acc = 0;
  for (int i = p - 1; i >= 0; --i) {
    acc += dots[i];
    for (int t = 0; t < p; ++t) acc += m[t][i];
    h.a[i] = acc;
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      int c = 0;
      for (int t = i; t < p; ++t)
        for (int s = j; s < p; ++s) c += m[t][s];
      h.b[i][j] = h.a[i] + c;
    }
  return h;
}

namespace {

void require_same_blocks(const EnhancedOLP& e, const EnhancedOLP& f) {
  if (e.blocks() != f.blocks()) {
    throw Error(ErrorCode::BlockMismatch,
                "classes over different block structures " + e.blocks().to_string() + " and " + f.blocks().to_string());
  }
}

int pair_against(const EnhancedOLP& multiplicities, const HomProfile& h) {
  const auto dots = multiplicities.dots();
  int total = 0;
  for (int i = 0; i < multiplicities.p(); ++i) {
    total += dots[i] * h.a[i];
    for (int j = 0; j < multiplicities.p(); ++j) total += multiplicities.counts()[i][j] * h.b[i][j];
  }
  return total;
}

}  // namespace

int hom_dim(const EnhancedOLP& e, const EnhancedOLP& f) {
  require_same_blocks(e, f);
  const int forward = pair_against(e, hom_profile(f));
  const int dual = pair_against(f, dual_hom_profile(e));
  if (forward != dual) throw Error(ErrorCode::ReconstructionMismatch, "hom dimension forms disagree");
  return forward;
}

bool deg_leq(const EnhancedOLP& e, const EnhancedOLP& f) {
  require_same_blocks(e, f);
  const HomProfile he = hom_profile(e), hf = hom_profile(f);
  for (int k = 0; k < e.p(); ++k) {
    if (he.a[k] > hf.a[k]) return false;
    for (int l = 0; l < e.p(); ++l)
      if (he.b[k][l] > hf.b[k][l]) return false;
  }
  return true;
}

std::vector<EnhancedOLP> enumerate_orbit_classes(const BlockStructure& blocks) {
  const int p = blocks.p();
  std::vector<std::vector<int>> counts(p, std::vector<int>(p, 0));
  std::vector<int> free(p);
  for (int i = 0; i < p; ++i) free[i] = blocks.block(i + 1);
  std::vector<EnhancedOLP> out;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == p * p) {
      out.emplace_back(blocks, counts);
      return;
    }
    const int i = pos / p, j = pos % p;
    for (int c = 0;; ++c) {
      counts[i][j] = c;
      rec(pos + 1);
      if (i == j ? free[i] < 2 : (free[i] < 1 || free[j] < 1)) break;
      free[i] -= 1;
      free[j] -= 1;
    }
    free[i] += counts[i][j];
    free[j] += counts[i][j];
    counts[i][j] = 0;
  };
  rec(0);
  return out;
}

Hasse2 hasse(const BlockStructure& blocks) {
  std::vector<EnhancedOLP> classes = enumerate_orbit_classes(blocks);
  std::vector<HomProfile> prof;
  for (const auto& c : classes) prof.push_back(hom_profile(c));
  const std::size_t m = classes.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      bool ok = true;
      for (int k = 0; k < blocks.p() && ok; ++k) {
        ok = prof[x].a[k] <= prof[y].a[k];
        for (int l = 0; l < blocks.p() && ok; ++l) ok = prof[x].b[k][l] <= prof[y].b[k][l];
      }
      leq[x][y] = ok;
    }
  return {std::move(classes), Poset(std::move(leq))};
}

int orbit_dim(const EnhancedOLP& e) { return e.blocks().parabolic_dim() - hom_dim(e, e); }

OrientedLinkPattern normal_form_pattern(const EnhancedOLP& e) {
  const BlockStructure& blocks = e.blocks();
  const int p = e.p();
  std::vector<int> low(p), high(p);
  for (int i = 0; i < p; ++i) {
    low[i] = blocks.flag_dim(i) + 1;
    high[i] = blocks.flag_dim(i + 1);
  }
  std::vector<Arrow> arrows;
  for (int src = 0; src < p; ++src)
    for (int tgt = p - 1; tgt >= 0; --tgt)
      for (int c = 0; c < e.counts()[tgt][src]; ++c) {
        const int s = low[src]++;
        const int t = high[tgt]--;
        arrows.push_back({s, t});
      }
  return OrientedLinkPattern(blocks.n(), std::move(arrows));
}

Matrix normal_form(const EnhancedOLP& e) { return normal_form_pattern(e).normal_form(); }

std::vector<OrientedLinkPattern> expand_to_b_orbits(const EnhancedOLP& e) {
  const BlockStructure& blocks = e.blocks();
  const int n = blocks.n();
  auto remaining = e.counts();
  std::vector<int> dots = e.dots();
  std::vector<bool> used(n + 1, false);
  std::vector<Arrow> arrows;
  std::vector<OrientedLinkPattern> out;
  std::function<void(int)> rec = [&](int v) {
    while (v <= n && used[v]) ++v;
    if (v > n) {
      out.emplace_back(n, arrows);
      return;
    }
    const int bv = blocks.block_of_vertex(v) - 1;
    used[v] = true;
    if (dots[bv] > 0) {
      --dots[bv];
      rec(v + 1);
      ++dots[bv];
    }
    for (int w = v + 1; w <= n; ++w) {
      if (used[w]) continue;
      used[w] = true;
      for (const Arrow a : {Arrow{v, w}, Arrow{w, v}}) {
        int& slot = remaining[blocks.block_of_vertex(a.target) - 1][blocks.block_of_vertex(a.source) - 1];
        if (slot == 0) continue;
        --slot;
        arrows.push_back(a);
        rec(v + 1);
        arrows.pop_back();
        ++slot;
      }
      used[w] = false;
    }
    used[v] = false;
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> block_sums(const Matrix& n, const BlockStructure& blocks) {
  return olp_to_eolp(pattern_of_normal_form(n), blocks).counts();
}

namespace {

void require_two_nilpotent(const Matrix& x) {
  if (!x.is_square()) throw Error(ErrorCode::NotTwoNilpotent, "matrix is not square");
  if (!(x * x).is_zero()) throw Error(ErrorCode::NotTwoNilpotent, "matrix does not square to zero");
}

}  // namespace

InvariantTable invariant_table(const Matrix& x) {
  require_two_nilpotent(x);
  const int n = static_cast<int>(x.rows());
  InvariantTable t(n);
  for (int i = 1; i <= n; ++i) {
    RowReducer cols(n - i + 1);
    for (int j = 1; j <= n; ++j) {
      Vector v(n - i + 1);
      for (int r = i; r <= n; ++r) v[r - i] = x(r - 1, j - 1);
      t.at(i, j) = t.at(i, j - 1) + (cols.insert(std::move(v)) ? 1 : 0);
    }
  }
  return t;
}

InvariantTable intersection_table(const Matrix& x) {
  require_two_nilpotent(x);
  const int n = static_cast<int>(x.rows());
  InvariantTable t(n);
  for (int j = 1; j <= n; ++j) {
    const SubspaceBasis image = SubspaceBasis::column_space(x.submatrix(0, n, 0, j));
    for (int i = 1; i <= n; ++i) t.at(i, j) = intersection_dim(image, SubspaceBasis::coordinate(n, i, n));
  }
  return t;
}

OrientedLinkPattern identify(const Matrix& x) {
  const InvariantTable t = invariant_table(x);
  const int n = t.n();
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int d = t.at(i, j) - t.at(i, j - 1) - t.at(i + 1, j) + t.at(i + 1, j - 1);
      if (d == 1) {
        arrows.push_back({j, i});
      } else if (d != 0) {
        throw Error(ErrorCode::ReconstructionMismatch, "invariant table is not a pattern count");
      }
    }
  OrientedLinkPattern pattern;
  try {
    pattern = OrientedLinkPattern(n, std::move(arrows));
  } catch (const Error&) {
    throw Error(ErrorCode::ReconstructionMismatch, "reconstructed arrows do not form a link pattern");
  }
  if (!(invariant_table(pattern.normal_form()) == t)) {
    throw Error(ErrorCode::ReconstructionMismatch, "normal form does not reproduce the invariant table");
  }
  return pattern;
}

EnhancedOLP open_orbit(const BlockStructure& blocks) {
  const int n = blocks.n();
  const int p = blocks.p();
  std::vector<std::vector<int>> counts(p, std::vector<int>(p, 0));
  for (int k = 1; k <= n / 2; ++k) ++counts[blocks.block_of_vertex(n - k + 1) - 1][blocks.block_of_vertex(k) - 1];
  return EnhancedOLP(blocks, std::move(counts));
}

namespace {

int hom_sum(const std::vector<Indecomposable2>& left, const std::vector<Indecomposable2>& right) {
  int total = 0;
  for (const auto& a : left)
    for (const auto& b : right) total += hom_dim_indec(a, b);
  return total;
}

}  // namespace

CoverReport verify_cover(const EnhancedOLP& e, const EnhancedOLP& f) {
  require_same_blocks(e, f);
  if (e == f || !deg_leq(e, f)) throw Error(ErrorCode::NotACover, "pair is not a strict degeneration");
  for (const EnhancedOLP& g : enumerate_orbit_classes(e.blocks())) {
    if (g == e || g == f) continue;
    if (deg_leq(e, g) && deg_leq(g, f)) throw Error(ErrorCode::NotACover, "class " + g.label() + " lies strictly between");
  }
  CoverReport report;
  std::vector<Indecomposable2> rest = summands(f);
  for (const Indecomposable2& x : summands(e)) {
    auto it = std::find(rest.begin(), rest.end(), x);
    if (it != rest.end()) {
      report.common.push_back(x);
      rest.erase(it);
    } else {
      report.d.push_back(x);
    }
  }
  report.d_prime = std::move(rest);
  for (const Indecomposable2& x : report.common) {
    const std::vector<Indecomposable2> single{x};
    if (hom_sum(single, report.d) != hom_sum(single, report.d_prime) ||
        hom_sum(report.d, single) != hom_sum(report.d_prime, single)) {
      report.hom_conditions = false;
    }
  }
  report.codimension = orbit_dim(e) - orbit_dim(f);
  return report;
}

Matrix u_normal_form(const LabelledOLP& l) {
  const OrientedLinkPattern& pat = l.pattern();
  Matrix m(pat.n(), pat.n());
  for (std::size_t k = 0; k < pat.arrows().size(); ++k) {
    const Arrow& a = pat.arrows()[k];
    if (sgn(l.labels()[k]) == 0) throw Error(ErrorCode::ZeroLabel, "arrow label is zero");
    m(a.target - 1, a.source - 1) = l.labels()[k];
  }
  return m;
}

}  // namespace parorb
