#include "parorb/link_pattern.hpp"

#include <algorithm>

#include "parorb/error.hpp"

namespace parorb {

OrientedLinkPattern::OrientedLinkPattern(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative pattern size");
  std::vector<int> incidence(n + 1, 0);
  for (const Arrow& a : arrows_) {
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n) {
      throw Error(ErrorCode::IndexOutOfRange, "arrow endpoint out of range");
    }
    if (a.source == a.target) throw Error(ErrorCode::InvalidArgument, "loops are not allowed in a link pattern", a.source);
    for (int v : {a.source, a.target}) {
      if (++incidence[v] > 1) {
        throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " meets more than one arrow", v);
      }
    }
  }
  std::sort(arrows_.begin(), arrows_.end());
}

bool OrientedLinkPattern::is_fixed(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.source == v || a.target == v; });
}

Matrix OrientedLinkPattern::normal_form() const {
  Matrix m(n_, n_);
  for (const Arrow& a : arrows_) m(a.target - 1, a.source - 1) = 1;
  return m;
}

std::string OrientedLinkPattern::to_string() const {
  std::string s;
  for (const Arrow& a : arrows_) s += "(" + std::to_string(a.source) + "→" + std::to_string(a.target) + ")";
  return s.empty() ? "∅" : s;
}

EnhancedOLP::EnhancedOLP(BlockStructure blocks, std::vector<std::vector<int>> counts)
    : blocks_(std::move(blocks)), counts_(std::move(counts)) {
  const int p = blocks_.p();
  if (static_cast<int>(counts_.size()) != p) throw Error(ErrorCode::SizeMismatch, "counts must be p x p");
  for (const auto& row : counts_) {
    if (static_cast<int>(row.size()) != p) throw Error(ErrorCode::SizeMismatch, "counts must be p x p");
    for (int c : row)
      if (c < 0) throw Error(ErrorCode::InvalidArgument, "counts must be nonnegative");
  }
  for (int i = 0; i < p; ++i) {
    int incidence = 0;
    for (int j = 0; j < p; ++j) incidence += counts_[i][j] + counts_[j][i];
    if (incidence > blocks_.block(i + 1)) {
      throw Error(ErrorCode::ConstraintViolation,
                  "block " + std::to_string(i + 1) + " has " + std::to_string(incidence) +
                      " arrow incidences but capacity " + std::to_string(blocks_.block(i + 1)),
                  i + 1);
    }
  }
}

std::vector<int> EnhancedOLP::dots() const {
  const int p = blocks_.p();
  std::vector<int> d(p);
  for (int i = 0; i < p; ++i) {
    int incidence = 0;
    for (int j = 0; j < p; ++j) incidence += counts_[i][j] + counts_[j][i];
    d[i] = blocks_.block(i + 1) - incidence;
  }
  return d;
}

int EnhancedOLP::arrow_count() const {
  int total = 0;
  for (const auto& row : counts_)
    for (int c : row) total += c;
  return total;
}

std::vector<int> EnhancedOLP::flattened() const {
  std::vector<int> flat;
  for (const auto& row : counts_) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

std::string EnhancedOLP::label() const {
  const int p = blocks_.p();
  std::string s;
  for (int src = 0; src < p; ++src)
    for (int tgt = 0; tgt < p; ++tgt)
      for (int k = 0; k < counts_[tgt][src]; ++k)
        s += "(" + std::to_string(src + 1) + "→" + std::to_string(tgt + 1) + ")";
  s += "·";
  const auto d = dots();
  for (int i = 0; i < p; ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

LabelledOLP::LabelledOLP(int n, std::vector<std::pair<Arrow, Rational>> labelled_arrows) {
  std::sort(labelled_arrows.begin(), labelled_arrows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Arrow> arrows;
  for (const auto& [arrow, label] : labelled_arrows) {
    if (sgn(label) == 0) {
      throw Error(ErrorCode::ZeroLabel, "arrow " + std::to_string(arrow.source) + "→" + std::to_string(arrow.target) +
                                            " has label 0");
    }
    arrows.push_back(arrow);
    labels_.push_back(label);
  }
  pattern_ = OrientedLinkPattern(n, std::move(arrows));
}

EnhancedOLP eolp_from_counts(const BlockStructure& blocks, const std::vector<std::vector<int>>& counts) {
  return EnhancedOLP(blocks, counts);
}

EnhancedOLP olp_to_eolp(const OrientedLinkPattern& pattern, const BlockStructure& blocks) {
  if (pattern.n() != blocks.n()) {
    throw Error(ErrorCode::SizeMismatch, "pattern has " + std::to_string(pattern.n()) + " vertices, blocks cover " +
                                             std::to_string(blocks.n()));
  }
  const int p = blocks.p();
  std::vector<std::vector<int>> counts(p, std::vector<int>(p, 0));
  for (const Arrow& a : pattern.arrows()) {
    ++counts[blocks.block_of_vertex(a.target) - 1][blocks.block_of_vertex(a.source) - 1];
  }
  return EnhancedOLP(blocks, std::move(counts));
}

OrientedLinkPattern pattern_of_normal_form(const Matrix& n) {
  if (!n.is_square()) throw Error(ErrorCode::NotNormalForm, "matrix is not square");
  const int size = static_cast<int>(n.rows());
  std::vector<Arrow> arrows;
  std::vector<int> row_count(size, 0), col_count(size, 0);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const Rational& x = n(r, c);
      if (sgn(x) == 0) continue;
      if (x != 1) throw Error(ErrorCode::NotNormalForm, "entries must be 0 or 1");
      if (++row_count[r] > 1 || ++col_count[c] > 1) {
        throw Error(ErrorCode::NotNormalForm, "not a partial permutation matrix");
      }
      arrows.push_back({c + 1, r + 1});
    }
  if (!(n * n).is_zero()) throw Error(ErrorCode::NotNormalForm, "matrix does not square to zero");
  return OrientedLinkPattern(size, std::move(arrows));
}

}  // namespace parorb
