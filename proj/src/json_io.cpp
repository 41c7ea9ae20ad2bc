#include "parorb/json_io.hpp"

#include "parorb/error.hpp"

namespace parorb {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object()) fail(std::string("expected a JSON object of kind ") + kind);
  if (j.contains("kind") && j.at("kind") != kind) fail(std::string("expected kind ") + kind);
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
}

Json to_json(const OrientedLinkPattern& p) {
  Json arrows = Json::array();
  for (const Arrow& a : p.arrows()) arrows.push_back({a.source, a.target});
  return {{"kind", "olp"}, {"n", p.n()}, {"arrows", arrows}};
}

OrientedLinkPattern olp_from_json(const Json& j) {
  expect_kind(j, "olp");
  return guarded([&] {
    std::vector<Arrow> arrows;
    for (const Json& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) fail("arrow must be [source, target]");
      arrows.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    return OrientedLinkPattern(j.at("n").get<int>(), std::move(arrows));
  });
}

Json to_json(const EnhancedOLP& e) {
  return {{"kind", "eolp"}, {"blocks", e.blocks().blocks()}, {"counts", e.counts()}, {"dots", e.dots()}};
}

EnhancedOLP eolp_from_json(const Json& j) {
  expect_kind(j, "eolp");
  return guarded([&] {
    return eolp_from_counts(BlockStructure(j.at("blocks").get<std::vector<int>>()),
                            j.at("counts").get<std::vector<std::vector<int>>>());
  });
}

Json to_json(const Matrix& m) { return m.to_strings(); }

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) fail("matrix row must be an array");
    std::vector<Rational> r;
    for (const Json& x : row) {
      if (x.is_string()) {
        r.push_back(parse_rational(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        r.emplace_back(std::to_string(x.get<long long>()));
      } else {
        fail("matrix entries must be strings \"p/q\" or integers");
      }
    }
    if (!rows.empty() && r.size() != rows.front().size()) fail("ragged matrix rows");
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

Json to_json(const Decomposition3& d) {
  Json parts = Json::object();
  for (std::size_t k = 0; k < catalog().size(); ++k)
    if (d.multiplicity(k) > 0) parts[catalog()[k].id] = d.multiplicity(k);
  return {{"kind", "decomp3"}, {"parts", parts}, {"label", d.label()}};
}

Decomposition3 decomposition3_from_json(const Json& j) {
  expect_kind(j, "decomp3");
  return guarded([&] {
    std::vector<std::pair<std::string, int>> parts;
    for (const auto& [id, m] : j.at("parts").items()) parts.emplace_back(id, m.get<int>());
    return Decomposition3::of(parts);
  });
}

Json to_json(const HomProfile& h) { return {{"a", h.a}, {"b", h.b}}; }

}  // namespace parorb
