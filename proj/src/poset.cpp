#include "parorb/poset.hpp"

#include <sstream>

#include "parorb/error.hpp"

namespace parorb {

Poset::Poset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  for (const auto& row : leq_)
    if (row.size() != leq_.size()) throw Error(ErrorCode::ShapeMismatch, "relation matrix must be square");
}

bool Poset::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!leq_[i][i]) return false;
  return true;
}

bool Poset::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (leq_[i][j] && leq_[j][i]) return false;
  return true;
}

bool Poset::is_transitive() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < size(); ++k)
        if (leq_[j][k] && !leq_[i][k]) return false;
    }
  return true;
}

std::vector<std::size_t> Poset::minima() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    bool minimal = true;
    for (std::size_t i = 0; i < size() && minimal; ++i) minimal = !less(i, j);
    if (minimal) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> Poset::maxima() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < size() && maximal; ++j) maximal = !less(i, j);
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < size() && cover; ++k) cover = !(less(i, k) && less(k, j));
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

std::string Poset::to_dot(const std::vector<std::string>& labels, const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < size(); ++i) {
    std::string label = i < labels.size() ? labels[i] : std::to_string(i);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& [i, j] : covers()) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace parorb
