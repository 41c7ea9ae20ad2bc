// Acceptance checks. One line per criterion; exit status is non-zero when any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "drawn_hasse.hpp"
#include "parorb/linalg.hpp"
#include "parorb/nilp2.hpp"
#include "parorb/nilp3.hpp"
#include "parorb/rep_type.hpp"
#include "support.hpp"

using namespace parorb;
using parorb::testing::eolp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Seconds; 0 means no limit.
constexpr double kLimitCounts = 1.0;
constexpr double kLimitExpand = 1.0;
constexpr double kLimitHomTable = 60.0;
constexpr double kLimitHasse3 = 10.0;
constexpr double kLimitOrbitDim = 120.0;
constexpr double kLimitPoset = 300.0;
constexpr double kLimitCatalog = 10.0;
constexpr double kMinConfidence = 1.0 - 1e-6;
constexpr std::uint64_t kSeed = 20240611;

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

Outcome orbit_counts() {
  Outcome o;
  const std::vector<std::pair<std::vector<int>, std::size_t>> degree_two = {
      {{1, 1, 1}, 7}, {{2, 1}, 4}, {{3}, 2}, {{1, 1}, 3}};
  for (const auto& [blocks, expected] : degree_two) {
    const std::size_t got = enumerate_orbit_classes(BlockStructure(blocks)).size();
    if (got != expected)
      fail(o, BlockStructure(blocks).to_string() + " x=2: " + std::to_string(got) + " != " + std::to_string(expected));
  }
  const std::size_t got = enumerate_orbit_classes3(2, 2).size();
  if (got != 14) fail(o, "(2,2) x=3: " + std::to_string(got) + " != 14");
  if (o.pass) o.detail = "7, 4, 2, 3, 14";
  return o;
}

Outcome b_in_p() {
  Outcome o;
  const std::set<std::vector<Arrow>> expected = {
      {{1, 2}, {4, 3}}, {{1, 3}, {4, 2}}, {{2, 1}, {4, 3}}, {{2, 3}, {4, 1}}, {{3, 1}, {4, 2}}, {{3, 2}, {4, 1}}};
  const auto got = expand_to_b_orbits(eolp({3, 1}, {{1, 1}, {2, 1}}));
  std::set<std::vector<Arrow>> got_sets;
  for (const auto& p : got) got_sets.insert(p.arrows());
  if (got.size() != 6 || got_sets != expected) fail(o, std::to_string(got.size()) + " patterns, set differs");
  if (o.pass) o.detail = "6 patterns";
  return o;
}

Outcome hom_table() {
  Outcome o;
  std::ifstream in(std::string(PARORB_TEST_DATA) + "/hom_table3.txt");
  if (!in) {
    fail(o, "cannot read hom_table3.txt");
    return o;
  }
  std::vector<std::string> columns;
  std::map<std::string, std::vector<int>> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "columns") {
      for (std::string id; ss >> id;) columns.push_back(id);
      continue;
    }
    for (int v; ss >> v;) rows[head].push_back(v);
  }
  const auto& table = hom_table3();
  int compared = 0, differing = 0;
  std::string first;
  for (const auto& [row, values] : rows)
    for (std::size_t c = 0; c < values.size() && c < columns.size(); ++c) {
      ++compared;
      const int solver = table[catalog_index(row)][catalog_index(columns[c])];
      if (solver != values[c]) {
        if (differing++ == 0)
          first = "[" + row + ", " + columns[c] + "] solver " + std::to_string(solver) + " printed " +
                  std::to_string(values[c]);
      }
    }
  if (compared != 900) fail(o, std::to_string(compared) + " printed values read");
  if (differing) fail(o, std::to_string(differing) + "/900 cells differ, first " + first);
  if (o.pass) o.detail = "900/900 equal";
  return o;
}

Outcome hasse_two_two() {
  Outcome o;
  const auto h = hasse3(2, 2);
  const auto pictured = drawn_hasse::nodes();
  std::map<Decomposition3, std::string> name;
  for (const auto& [k, d] : pictured) name[d] = k;

  int extra = 0;
  for (const auto& c : h.classes)
    if (!name.count(c)) ++extra;
  if (h.classes.size() != 14) fail(o, std::to_string(h.classes.size()) + " nodes, " + std::to_string(extra) + " unpictured");

  std::set<std::pair<std::string, std::string>> computed, drawn;
  int touching_unpictured = 0;
  for (auto [i, j] : h.order.covers()) {
    if (name.count(h.classes[i]) && name.count(h.classes[j]))
      computed.insert({name[h.classes[i]], name[h.classes[j]]});
    else
      ++touching_unpictured;
  }
  for (const auto& e : drawn_hasse::edges()) drawn.insert(e);
  int missing = 0, added = 0;
  for (const auto& e : drawn) missing += !computed.count(e);
  for (const auto& e : computed) added += !drawn.count(e);
  if (missing || added || touching_unpictured)
    fail(o, "edges: " + std::to_string(missing) + " drawn not computed, " + std::to_string(added) +
                " computed not drawn, " + std::to_string(touching_unpictured) + " through unpictured nodes");
  if (o.pass) o.detail = "14 nodes, 20 edges";
  return o;
}

Outcome orbit_dim_oracle() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& bs : compositions(n))
      for (const auto& c : enumerate_orbit_classes(bs)) {
        const Matrix nf = normal_form(c);
        ++checked;
        if (orbit_dim(c) != bs.parabolic_dim() - pattern_intertwiner_dim(nf, nf, bs))
          fail(o, bs.to_string() + " " + c.label());
      }
  if (o.pass) o.detail = std::to_string(checked) + " classes";
  return o;
}

Outcome poset_properties() {
  Outcome o;
  int structures = 0, covers = 0, bad_codim = 0, bad_hom = 0;
  std::string first;
  for (int n = 1; n <= 5; ++n)
    for (const auto& bs : compositions(n)) {
      ++structures;
      const auto h = hasse(bs);
      if (!h.order.is_partial_order()) fail(o, bs.to_string() + " not a partial order");
      const auto top = h.order.maxima(), bottom = h.order.minima();
      if (top.size() != 1 || h.classes[top[0]] != eolp(bs.blocks(), {})) fail(o, bs.to_string() + " maximum");
      if (bottom.size() != 1 || h.classes[bottom[0]] != open_orbit(bs)) fail(o, bs.to_string() + " minimum");
      for (auto [i, j] : h.order.covers()) {
        ++covers;
        const auto r = verify_cover(h.classes[i], h.classes[j]);
        if (r.codimension != 1 && bad_codim++ == 0)
          first = bs.to_string() + " " + h.classes[i].label() + " -> " + h.classes[j].label() + " codim " +
                  std::to_string(r.codimension);
        if (!r.hom_conditions) ++bad_hom;
      }
    }
  if (bad_codim || bad_hom)
    fail(o, std::to_string(bad_codim) + "/" + std::to_string(covers) + " covers with codim != 1, " +
                std::to_string(bad_hom) + " failing hom conditions, first " + first);
  if (o.pass) o.detail = std::to_string(structures) + " block structures, " + std::to_string(covers) + " covers";
  return o;
}

Outcome identification() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  int classes = 0, failures = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : enumerate_orbit_classes(BlockStructure::borel(n))) {
      ++classes;
      const auto pattern = normal_form_pattern(c);
      const Matrix nf = normal_form(c);
      for (int t = 0; t < 200; ++t) {
        const Matrix g = parorb::testing::random_upper(n, rng);
        if (identify(g * nf * inverse(g)) != pattern) ++failures;
      }
    }
  if (failures) fail(o, std::to_string(failures) + " failures");
  if (o.pass) o.detail = std::to_string(classes) + " classes x 200";
  return o;
}

Outcome p_conjugacy() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  std::vector<BlockStructure> structures;
  for (int n = 1; n <= 6; ++n)
    for (const auto& bs : compositions(n)) structures.push_back(bs);
  int equal = 0, unequal = 0, wrong = 0;
  for (int t = 0; t < 500; ++t) {
    const BlockStructure& bs = structures[std::uniform_int_distribution<std::size_t>(0, structures.size() - 1)(rng)];
    const auto borel = enumerate_orbit_classes(BlockStructure::borel(bs.n()));
    std::uniform_int_distribution<std::size_t> pick(0, borel.size() - 1);
    Matrix a = normal_form(borel[pick(rng)]), b;
    // Half the pairs are drawn inside one P-class so that both outcomes occur.
    if (t % 2 == 0) {
      const auto inside = expand_to_b_orbits(olp_to_eolp(pattern_of_normal_form(a), bs));
      b = inside[std::uniform_int_distribution<std::size_t>(0, inside.size() - 1)(rng)].normal_form();
    } else {
      b = normal_form(borel[pick(rng)]);
    }
    SamplingOptions opts;
    opts.seed = kSeed;
    opts.stream = static_cast<std::uint64_t>(t);
    const auto v = is_p_conjugate(a, b, bs, opts);
    if (block_sums(a, bs) == block_sums(b, bs)) {
      ++equal;
      if (!v.conjugate || !v.certificate || *v.certificate * a != b * *v.certificate) ++wrong;
    } else {
      ++unequal;
      if (v.conjugate || v.confidence < kMinConfidence) ++wrong;
    }
  }
  if (wrong) fail(o, std::to_string(wrong) + " wrong verdicts");
  if (o.pass) o.detail = std::to_string(equal) + " equal, " + std::to_string(unequal) + " unequal";
  return o;
}

Outcome hom_formula() {
  Outcome o;
  int pairs = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& bs : compositions(n)) {
      const auto classes = enumerate_orbit_classes(bs);
      std::vector<Representation> reps;
      for (const auto& c : classes) reps.push_back(Representation::of_flag(normal_form(c), bs));
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) {
          ++pairs;
          if (hom_dim(classes[i], classes[j]) != hom_dimension(reps[i], reps[j]))
            fail(o, bs.to_string() + " " + classes[i].label() + ", " + classes[j].label());
        }
    }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

int separated(const std::vector<Matrix>& family, const BlockStructure& bs, std::uint64_t stream0) {
  int count = 0;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      SamplingOptions opts;
      opts.seed = kSeed;
      opts.stream = stream0 + i * 64 + j;
      const auto v = is_p_conjugate(family[i], family[j], bs, opts);
      if (!v.conjugate && v.confidence >= kMinConfidence) ++count;
    }
  return count;
}

Outcome witnesses() {
  Outcome o;
  const std::vector<Rational> values = {1, 2, 3, -1, Rational(1, 2), 5, -7, Rational(2, 3)};
  std::vector<Matrix> e, f, d;
  for (const auto& l : values) {
    e.push_back(witness_E(4, 0, l).matrix);
    f.push_back(witness_F(4, l).matrix);
    d.push_back(witness_Dx(4, 3, l).strict.matrix);
  }
  std::ostringstream report;
  const int se = separated(e, BlockStructure({2, 2}), 0);
  const int sf = separated(f, BlockStructure({1, 3}), 1000);
  report << "E(2,2) " << se << "/28, F(1,3) " << sf << "/28";
  if (se != 28) fail(o, "E separates " + std::to_string(se) + "/28");
  if (sf != 28) fail(o, "F separates " + std::to_string(sf) + "/28");

  const std::vector<Rational> grid = {1, 2, -1, 3};
  auto wild = [&](const std::string& name, auto family, const BlockStructure& bs, std::uint64_t stream0) {
    std::vector<Matrix> ms;
    int nilpotent = 0;
    for (const auto& l : grid)
      for (const auto& m : grid) {
        ms.push_back(family(l, m).matrix);
        nilpotent += ms.back().power(3).is_zero();
      }
    const int s = separated(ms, bs, stream0);
    report << ", " << name << " N^3=0 " << nilpotent << "/16 sep " << s << "/120";
    if (nilpotent != 16) fail(o, name + " N^3 = 0 for " + std::to_string(nilpotent) + "/16");
    if (s != 120) fail(o, name + " separates " + std::to_string(s) + "/120");
  };
  wild("wild(3,4,3)", wild_family_343, BlockStructure({3, 4, 3}), 2000);
  wild("wild(5,5)", wild_family_55, BlockStructure({5, 5}), 40000);

  const auto dx = witness_Dx(4, 3, 1);
  report << ", D_x printed formula nilpotent: " << (dx.printed.report.passed ? "yes" : "no") << " (trace "
         << dx.printed.matrix.trace().get_str() << ")";
  bool strict_nilpotent = true;
  for (const auto& m : d) strict_nilpotent = strict_nilpotent && m.power(3).is_zero();
  const int sd = separated(d, BlockStructure({1, 1, 2}), 80000);
  report << ", strict D_x(1,1,2) N^3=0 " << (strict_nilpotent ? "yes" : "no") << " sep " << sd << "/28";
  if (!strict_nilpotent) fail(o, "strict D_x not 3-nilpotent");
  if (sd != 28) fail(o, "strict D_x separates " + std::to_string(sd) + "/28");
  o.detail = report.str() + (o.pass ? "" : " | " + o.detail);
  return o;
}

Outcome catalog_integrity() {
  Outcome o;
  const auto r = verify_catalog();
  int passed = 0;
  for (const auto& c : r.entries) passed += c.passed;
  if (r.entries.size() != 30 || !r.all_passed) fail(o, std::to_string(passed) + "/" + std::to_string(r.entries.size()));
  if (o.pass) o.detail = "30/30 entries";
  return o;
}

Outcome open_orbits() {
  Outcome o;
  int pairs = 0, structures = 0;
  for (int n = 1; n <= 7; ++n)
    for (int b1 = 1; b1 < n; ++b1) {
      const int b2 = n - b1;
      ++pairs;
      const auto classes = enumerate_orbit_classes3(b1, b2);
      int best = -1, at_best = 0;
      for (const auto& c : classes) {
        const int d = orbit_dim3(c, b1, b2);
        if (d > best) best = d, at_best = 0;
        at_best += d == best;
      }
      const auto open = open_orbit3(b1, b2);
      if (at_best != 1 || orbit_dim3(open, b1, b2) != best)
        fail(o, "x=3 (" + std::to_string(b1) + "," + std::to_string(b2) + ")");
    }
  for (int n = 1; n <= 6; ++n)
    for (const auto& bs : compositions(n)) {
      ++structures;
      int best = -1, at_best = 0;
      for (const auto& c : enumerate_orbit_classes(bs)) {
        const int d = orbit_dim(c);
        if (d > best) best = d, at_best = 0;
        at_best += d == best;
      }
      if (at_best != 1 || orbit_dim(open_orbit(bs)) != best) fail(o, "x=2 " + bs.to_string());
    }
  if (o.pass) o.detail = std::to_string(pairs) + " (b1,b2), " + std::to_string(structures) + " block structures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"orbit counts", kLimitCounts, orbit_counts},
      {"B-orbits inside a P-orbit", kLimitExpand, b_in_p},
      {"degree-3 hom table", kLimitHomTable, hom_table},
      {"Hasse diagram (2,2) x=3", kLimitHasse3, hasse_two_two},
      {"orbit dimension vs centralizer", kLimitOrbitDim, orbit_dim_oracle},
      {"poset properties", kLimitPoset, poset_properties},
      {"identification robustness", 0, identification},
      {"P-conjugacy by block sums", 0, p_conjugacy},
      {"hom formula vs intertwiners", 0, hom_formula},
      {"witness separation", 0, witnesses},
      {"catalog integrity", kLimitCatalog, catalog_integrity},
      {"open orbits", 0, open_orbits},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[k].limit > 0 && secs > criteria[k].limit) {
      o.pass = false;
      o.detail += " (over time limit " + std::to_string(criteria[k].limit) + " s)";
    }
    failed += !o.pass;
    std::printf("%s  %2zu  %-34s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
