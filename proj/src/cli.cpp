#include "parorb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "parorb/error.hpp"
#include "parorb/json_io.hpp"
#include "parorb/linalg.hpp"
#include "parorb/nilp2.hpp"
#include "parorb/nilp3.hpp"
#include "parorb/rep_type.hpp"

namespace parorb::cli {

namespace {

struct Options {
  std::uint64_t seed = 0;
  int trials = 20;
  long range = 1000000;
  std::string output;
  std::vector<int> blocks;
  int nilpotency = 2;
  std::string format;
  std::string klass;
  std::string left;
  std::string right;
  std::string matrix;
  bool table = false;
  std::string family;
  std::string params;
};

// Inline JSON, or a file path (optionally prefixed with '@').
Json load_json(const std::string& arg) {
  std::string text = arg;
  const bool inline_json = !arg.empty() && (arg.front() == '{' || arg.front() == '[');
  if (!inline_json) {
    const std::string path = !arg.empty() && arg.front() == '@' ? arg.substr(1) : arg;
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_json(text);
}

BlockStructure blocks_of(const Options& o) {
  if (o.blocks.empty()) throw Error(ErrorCode::InvalidArgument, "--blocks is required");
  return BlockStructure(o.blocks);
}

std::pair<int, int> maximal_blocks(const BlockStructure& b) {
  if (b.p() != 2) {
    throw Error(ErrorCode::InvalidArgument,
                "nilpotency 3 orbit classes are available for two blocks only (other cases are wild)");
  }
  return {b.block(1), b.block(2)};
}

void require_degree(int x) {
  if (x < 1 || x > 3) throw Error(ErrorCode::InvalidArgument, "supported nilpotency degrees: 1, 2, 3");
}

EnhancedOLP class_for(const Options& o, const Json& j) {
  EnhancedOLP e = eolp_from_json(j);
  if (!o.blocks.empty() && e.blocks() != BlockStructure(o.blocks)) {
    throw Error(ErrorCode::BlockMismatch, "class blocks differ from --blocks");
  }
  return e;
}

std::vector<EnhancedOLP> classes2(const BlockStructure& b, int x) {
  if (x == 1) {
    const int p = b.p();
    return {EnhancedOLP(b, std::vector<std::vector<int>>(p, std::vector<int>(p, 0)))};
  }
  return enumerate_orbit_classes(b);
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  const BlockStructure b = blocks_of(o);
  require_degree(o.nilpotency);
  const bool ascii = o.format == "ascii";
  if (o.nilpotency == 3) {
    const auto [b1, b2] = maximal_blocks(b);
    for (const Decomposition3& d : enumerate_orbit_classes3(b1, b2)) {
      if (ascii) {
        out << d.label() << "  dim=" << orbit_dim3(d, b1, b2) << "\n";
      } else {
        Json j = to_json(d);
        j["orbit_dim"] = orbit_dim3(d, b1, b2);
        out << j.dump() << "\n";
      }
    }
    return;
  }
  for (const EnhancedOLP& e : classes2(b, o.nilpotency)) {
    if (ascii) {
      out << e.label() << "  dim=" << orbit_dim(e) << "\n";
    } else {
      Json j = to_json(e);
      j["label"] = e.label();
      j["orbit_dim"] = orbit_dim(e);
      out << j.dump() << "\n";
    }
  }
}

void emit_poset(const Poset& order, const std::vector<std::string>& labels, const std::vector<Json>& nodes,
                const std::string& format, std::ostream& out) {
  if (format.empty() || format == "dot") {
    out << order.to_dot(labels);
  } else if (format == "json") {
    Json edges = Json::array();
    for (const auto& [i, j] : order.covers()) edges.push_back({i, j});
    out << Json{{"nodes", nodes}, {"covers", edges}}.dump() << "\n";
  } else {
    for (const auto& [i, j] : order.covers()) out << labels[i] << " -> " << labels[j] << "\n";
  }
}

void cmd_hasse(const Options& o, std::ostream& out) {
  const BlockStructure b = blocks_of(o);
  require_degree(o.nilpotency);
  if (o.nilpotency == 3) {
    const auto [b1, b2] = maximal_blocks(b);
    const Hasse3 h = hasse3(b1, b2);
    std::vector<std::string> labels;
    std::vector<Json> nodes;
    for (const auto& d : h.classes) {
      labels.push_back(d.label());
      Json j = to_json(d);
      j["orbit_dim"] = orbit_dim3(d, b1, b2);
      nodes.push_back(j);
    }
    emit_poset(h.order, labels, nodes, o.format, out);
    return;
  }
  std::vector<EnhancedOLP> classes = classes2(b, o.nilpotency);
  std::vector<std::vector<bool>> leq(classes.size(), std::vector<bool>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) leq[i][j] = deg_leq(classes[i], classes[j]);
  std::vector<std::string> labels;
  std::vector<Json> nodes;
  for (const auto& e : classes) {
    labels.push_back(e.label());
    Json j = to_json(e);
    j["label"] = e.label();
    j["orbit_dim"] = orbit_dim(e);
    j["profile"] = to_json(hom_profile(e));
    nodes.push_back(j);
  }
  emit_poset(Poset(std::move(leq)), labels, nodes, o.format, out);
}

void cmd_dim(const Options& o, std::ostream& out) {
  const Json j = load_json(o.klass);
  if (j.value("kind", "") == "decomp3") {
    const auto [b1, b2] = maximal_blocks(blocks_of(o));
    const Decomposition3 d = decomposition3_from_json(j);
    out << Json{{"orbit_dim", orbit_dim3(d, b1, b2)}, {"parabolic_dim", b1 * b1 + b1 * b2 + b2 * b2}}.dump() << "\n";
    return;
  }
  const EnhancedOLP e = class_for(o, j);
  out << Json{{"orbit_dim", orbit_dim(e)},
              {"parabolic_dim", e.blocks().parabolic_dim()},
              {"profile", to_json(hom_profile(e))}}
             .dump()
      << "\n";
}

void cmd_expand(const Options& o, std::ostream& out) {
  const EnhancedOLP e = class_for(o, load_json(o.klass));
  for (const auto& p : expand_to_b_orbits(e)) out << to_json(p).dump() << "\n";
}

void cmd_identify(const Options& o, std::ostream& out) {
  const Matrix x = matrix_from_json(load_json(o.matrix));
  const OrientedLinkPattern p = identify(x);
  Json j = to_json(p);
  if (!o.blocks.empty()) j["class"] = to_json(olp_to_eolp(p, BlockStructure(o.blocks)));
  out << j.dump() << "\n";
}

void cmd_homdim(const Options& o, std::ostream& out) {
  if (o.table) {
    Json cols = Json::array();
    for (const auto& e : catalog()) cols.push_back(e.id);
    out << Json{{"columns", cols}, {"rows", cols}, {"hom", hom_table3()}}.dump() << "\n";
    return;
  }
  if (o.left.empty() || o.right.empty()) throw Error(ErrorCode::InvalidArgument, "--left and --right are required");
  const Json l = load_json(o.left), r = load_json(o.right);
  if (l.value("kind", "") == "decomp3") {
    const Decomposition3 a = decomposition3_from_json(l), b = decomposition3_from_json(r);
    out << Json{{"hom_dim", hom_dim3(a, b)}}.dump() << "\n";
    return;
  }
  out << Json{{"hom_dim", hom_dim(class_for(o, l), class_for(o, r))}}.dump() << "\n";
}

void cmd_classify(const Options& o, std::ostream& out) {
  const BlockStructure b = blocks_of(o);
  out << Json{{"blocks", b.blocks()}, {"nilpotency", o.nilpotency}, {"type", to_string(classify(b, o.nilpotency))}}
             .dump()
      << "\n";
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "parameter '" + item + "' is not key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

Json report_json(const Witness& w) {
  return {{"variant", w.report.variant},
          {"matrix", to_json(w.matrix)},
          {"nilpotency_index", w.report.nilpotency_index},
          {"required", w.report.required},
          {"passed", w.report.passed}};
}

void cmd_witness(const Options& o, std::ostream& out) {
  auto params = parse_params(o.params);
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (fallback.empty()) throw Error(ErrorCode::InvalidArgument, "missing parameter " + key);
    return fallback;
  };
  auto integer = [&](const std::string& key, const std::string& fallback) {
    try {
      return std::stoi(get(key, fallback));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "parameter " + key + " must be an integer");
    }
  };
  auto rational = [&](const std::string& key) { return parse_rational(get(key, "1")); };
  Json j{{"family", o.family}};
  if (o.family == "dx") {
    const WitnessDx w = witness_Dx(integer("n", "4"), integer("x", "3"), rational("lambda"));
    j["printed"] = report_json(w.printed);
    j["strict"] = report_json(w.strict);
    j["passing_variant"] = w.passing_variant;
  } else if (o.family == "e") {
    j["witness"] = report_json(witness_E(integer("n", "4"), integer("s", "0"), rational("lambda")));
  } else if (o.family == "f") {
    j["witness"] = report_json(witness_F(integer("n", "4"), rational("lambda")));
  } else if (o.family == "wild343") {
    j["witness"] = report_json(wild_family_343(rational("lambda"), rational("mu")));
  } else if (o.family == "wild55") {
    j["witness"] = report_json(wild_family_55(rational("lambda"), rational("mu")));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family " + o.family);
  }
  out << j.dump() << "\n";
}

void cmd_verify_catalog(std::ostream& out) {
  const CatalogReport r = verify_catalog();
  Json entries = Json::array();
  for (const auto& c : r.entries) {
    entries.push_back({{"id", c.id},
                       {"nil_cubed_zero", c.nil_cubed_zero},
                       {"nil_squared_nonzero", c.nil_squared_nonzero},
                       {"injective", c.injective},
                       {"injectivity_as_expected", c.injectivity_as_expected},
                       {"radical_codim", c.radical_codim},
                       {"passed", c.passed}});
  }
  out << Json{{"all_passed", r.all_passed}, {"entries", entries}}.dump() << "\n";
}

void cmd_conjugate(const Options& o, std::ostream& out) {
  const BlockStructure b = blocks_of(o);
  const Matrix a = matrix_from_json(load_json(o.left)), c = matrix_from_json(load_json(o.right));
  const ConjugacyVerdict v = is_p_conjugate(a, c, b, {o.trials, o.seed, o.range, 0});
  Json j{{"conjugate", v.conjugate},
         {"trials", v.trials},
         {"seed", v.seed},
         {"range", v.range},
         {"confidence", v.confidence},
         {"intertwiner_dim", v.intertwiner_dim}};
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  out << j.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Parabolic orbits on nilpotent matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--trials", o.trials, "Sampling trials")->check(CLI::NonNegativeNumber);
  app.add_option("--range", o.range, "Sample coefficients from [-range, range]")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Write results to FILE");

  auto blocks = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--blocks", o.blocks, "Block sizes, e.g. 3,1")->delimiter(',');
    if (required) opt->required();
  };
  auto nilpotency = [&](CLI::App* sub) {
    sub->add_option("--nilpotency,-x", o.nilpotency, "Nilpotency degree")->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List orbit classes");
  blocks(enumerate, true);
  nilpotency(enumerate);
  enumerate->add_option("--format", o.format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));

  auto* hasse_cmd = app.add_subcommand("hasse", "Cover relations of the degeneration order");
  blocks(hasse_cmd, true);
  nilpotency(hasse_cmd);
  hasse_cmd->add_option("--format", o.format, "dot, json or ascii")->check(CLI::IsMember({"dot", "json", "ascii"}));

  auto* dim = app.add_subcommand("dim", "Orbit dimension of a class");
  blocks(dim, false);
  dim->add_option("--class", o.klass, "Class JSON or file")->required();

  auto* expand = app.add_subcommand("expand", "B-orbits inside a P-orbit");
  blocks(expand, false);
  expand->add_option("--class", o.klass, "Class JSON or file")->required();

  auto* ident = app.add_subcommand("identify", "B-orbit of a 2-nilpotent matrix");
  blocks(ident, false);
  ident->add_option("--matrix", o.matrix, "Matrix JSON or file")->required();

  auto* homdim = app.add_subcommand("homdim", "Hom dimensions");
  blocks(homdim, false);
  homdim->add_option("--left", o.left, "Left class JSON or file");
  homdim->add_option("--right", o.right, "Right class JSON or file");
  homdim->add_flag("--table", o.table, "Full hom table of the degree-3 catalog");

  auto* classify_cmd = app.add_subcommand("classify", "Representation type");
  blocks(classify_cmd, true);
  classify_cmd->add_option("--nilpotency,-x", o.nilpotency, "Nilpotency degree")->required();

  auto* witness = app.add_subcommand("witness", "Witness matrices");
  witness->add_option("--family", o.family, "dx, e, f, wild343 or wild55")
      ->required()
      ->check(CLI::IsMember({"dx", "e", "f", "wild343", "wild55"}));
  witness->add_option("--params", o.params, "key=value list, e.g. n=4,lambda=2");

  auto* verify = app.add_subcommand("verify-catalog", "Check the degree-3 catalog");

  auto* conj = app.add_subcommand("conjugate", "P-conjugacy of two matrices");
  blocks(conj, true);
  conj->add_option("--left", o.left, "Matrix JSON or file")->required();
  conj->add_option("--right", o.right, "Matrix JSON or file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << Json{{"error", "ParseError"}, {"message", "cannot open " + o.output}}.dump() << "\n";
      return 1;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;

  try {
    if (enumerate->parsed()) cmd_enumerate(o, sink);
    else if (hasse_cmd->parsed()) cmd_hasse(o, sink);
    else if (dim->parsed()) cmd_dim(o, sink);
    else if (expand->parsed()) cmd_expand(o, sink);
    else if (ident->parsed()) cmd_identify(o, sink);
    else if (homdim->parsed()) cmd_homdim(o, sink);
    else if (classify_cmd->parsed()) cmd_classify(o, sink);
    else if (witness->parsed()) cmd_witness(o, sink);
    else if (verify->parsed()) cmd_verify_catalog(sink);
    else if (conj->parsed()) cmd_conjugate(o, sink);
  } catch (const Error& e) {
    Json j{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (e.index() > 0) j["index"] = e.index();
    err << j.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace parorb::cli
