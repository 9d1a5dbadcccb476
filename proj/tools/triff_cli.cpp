// triff: command-line front end for constructing, verifying, searching and
// bounding trifferent codes.
//
// Exit status: 0 success, 1 a check failed (witness printed), 2 usage or
// input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triff/bounds.hpp"
#include "triff/code.hpp"
#include "triff/constructions.hpp"
#include "triff/graphs.hpp"
#include "triff/search.hpp"
#include "triff/triff_io.hpp"

using nlohmann::json;
using namespace triff;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Resolved options of the subcommand that ran, for echoing into outputs.
struct RunConfig {
  std::string command;
  json options = json::object();

  std::vector<std::string> comment_lines() const {
    std::vector<std::string> out{" command: " + command};
    for (auto it = options.begin(); it != options.end(); ++it)
      out.push_back(" --" + it.key() + "=" +
                    (it->is_string() ? it->get<std::string>() : it->dump()));
    return out;
  }
};

RunConfig resolve(const CLI::App *leaf) {
  RunConfig cfg;
  std::vector<std::string> path;
  for (const CLI::App *a = leaf; a && a->get_parent(); a = a->get_parent())
    path.insert(path.begin(), a->get_name());
  for (std::size_t i = 0; i < path.size(); ++i)
    cfg.command += (i ? " " : "") + path[i];
  for (const CLI::Option *opt : leaf->get_options()) {
    std::string name = opt->get_single_name();
    if (name == "help")
      continue;
    if (opt->get_expected_max() == 0) {
      cfg.options[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto &res = opt->results();
      cfg.options[name] = res.size() == 1 ? json(res.front()) : json(res);
    } else {
      cfg.options[name] = opt->get_default_str();
    }
  }
  return cfg;
}

void emit_text(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit_json(json j, const RunConfig &cfg, const std::string &path = {}) {
  j["config"] = {{"command", cfg.command}, {"options", cfg.options}};
  emit_text(j.dump(2) + "\n", path);
}

std::string join_words(const Code &code, const IndexTriple &t) {
  return code[t[0]].to_string() + " " + code[t[1]].to_string() + " " +
         code[t[2]].to_string();
}

json verification_json(const Code &code, const VerificationResult &v) {
  json j{{"schema", 1},
         {"n", code.block_length()},
         {"size", code.size()},
         {"r", code.r_bound() ? json(*code.r_bound()) : json(nullptr)},
         {"status", v.ok() ? "trifferent" : "not_trifferent"}};
  if (v.witness) {
    const auto &w = *v.witness;
    j["witness"] = {{"indices", {w[0], w[1], w[2]}},
                    {"codewords",
                     {code[w[0]].to_string(), code[w[1]].to_string(),
                      code[w[2]].to_string()}}};
  }
  return j;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

SigmaChoice sigma_from(const std::string &kind, std::uint64_t seed) {
  if (kind == "cyclic")
    return {};
  if (kind == "random")
    return {SigmaChoice::Kind::random, seed};
  throw std::invalid_argument("--sigma must be cyclic or random");
}

json kst_json(const DerivedGraph &g, std::size_t s, std::uint64_t t) {
  json j{{"s", s}, {"t", t}};
  if (auto w = contains_kst(g, s, t)) {
    j["free"] = false;
    j["witness_valid"] = validate_witness(g, *w);
    json right = json::array();
    for (std::size_t v : w->right) {
      if (g.kind() == DerivedGraph::Kind::simple)
        right.push_back(std::to_string(v + 1));
      else
        right.push_back(std::to_string(g.right_labels()[v].first + 1) + "," +
                        std::to_string(g.right_labels()[v].second + 1));
    }
    json left = json::array();
    for (std::size_t u : w->left)
      left.push_back(u + 1);
    j["witness"] = {{"left", left}, {"right", right}};
  } else {
    j["free"] = true;
  }
  return j;
}

DerivedGraph graph_for(const Code &code) {
  if (code.r_bound() == 2)
    return build_graph_r2(code);
  if (code.r_bound() == 3)
    return build_graph_r3(code);
  throw std::invalid_argument("derived graphs need a 2- or 3-bounded code");
}

json graph_summary(const DerivedGraph &g) {
  json hist = json::object();
  for (auto [m, c] : g.multiplicity_histogram())
    hist[std::to_string(m)] = c;
  const bool simple = g.kind() == DerivedGraph::Kind::simple;
  json j{{"schema", 1},
         {"kind", simple ? "simple" : "bipartite"},
         {"left_vertices", g.left_count()},
         {"right_vertices", g.right_count()},
         {"edges", g.edge_count()},
         {"multiplicity_histogram", hist}};
  j["freeness"] = json::array(
      {simple ? kst_json(g, 3, 9) : kst_json(g, 5, kR3ForbiddenRight)});
  return j;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Trifferent code toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  // Values bound to options. Each subcommand only reads its own.
  std::size_t n = 0, r = 0, q = 0, t = 0, target = 0, s = 0;
  std::size_t coordinate = 0;
  std::uint64_t t_kst = 0, trials = 0, seed = 0, budget = SearchConfig{}.budget;
  double u_real = 0, v_real = 0, tb_value = 0;
  unsigned workers = 1;
  std::string input, output, base_path, sigma_kind = "cyclic", format = "json";
  std::string table_path, kind = "exact", edges_path;
  std::vector<std::string> code_paths;
  bool exhaustive = false, oracle = false, no_symmetry = false;
  bool no_group_bound = false, override_caps = false;

  auto *construct = app.add_subcommand("construct", "Build a code family");
  construct->require_subcommand(1);
  auto *c_one = construct->add_subcommand("one-bounded", "2n words with one 2 each");
  c_one->add_option("--n", n, "Block length")->required()->check(CLI::Range(1, 4096));
  c_one->add_option("-o,--output", output, "Output .triff path");
  auto *c_triple = construct->add_subcommand("triple", "Affine-plane flag code over a base code");
  c_triple->add_option("--q", q, "Prime field order")->required();
  c_triple->add_option("--base", base_path, "Base .triff (default: smallest one-bounded code that fits)");
  c_triple->add_option("--sigma", sigma_kind, "cyclic or random");
  c_triple->add_option("--seed", seed, "Seed for --sigma random");
  c_triple->add_option("-o,--output", output, "Output .triff path");
  auto *c_rec = construct->add_subcommand("recursive", "3^t-bounded recursive code");
  c_rec->add_option("--t", t, "Depth")->required()->check(CLI::Range(0, 4));
  c_rec->add_option("--target", target, "Minimum size")->required()->check(CLI::PositiveNumber);
  c_rec->add_option("--sigma", sigma_kind, "cyclic or random");
  c_rec->add_option("--seed", seed, "Seed for --sigma random");
  c_rec->add_option("-o,--output", output, "Output .triff path");

  auto *verify = app.add_subcommand("verify", "Check the trifference property");
  verify->add_option("input", input, ".triff file")->required();
  verify->add_option("--workers", workers, "Verification threads")->check(CLI::Range(1, 256));
  verify->add_option("--format", format, "json or table");

  auto *search = app.add_subcommand("search", "Exact maximum codes");
  search->require_subcommand(1);
  auto *s_max = search->add_subcommand("max", "Maximum trifferent code");
  auto *s_maxr = search->add_subcommand("max-r", "Maximum r-bounded trifferent code");
  for (auto *sub : {s_max, s_maxr}) {
    sub->add_option("--n", n, "Block length")->required()->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "Node budget");
    sub->add_flag("--no-symmetry", no_symmetry, "Do not fix the first codeword");
    sub->add_flag("--no-group-bound", no_group_bound, "Plain candidate-count bound only");
    sub->add_flag("--oracle", oracle, "Confirm with the exhaustive oracle");
    sub->add_flag("--override", override_caps, "Lift the size caps");
    sub->add_option("--table", table_path, "Results table to update (JSON)");
    sub->add_option("-o,--output", output, "Certificate path (default stdout)");
  }
  s_maxr->add_option("--r", r, "Number of twos")->required();

  auto *bound = app.add_subcommand("bound", "Numeric bounds");
  bound->require_subcommand(1);
  auto *b_report = bound->add_subcommand("report", "All bounds on T(n)");
  b_report->add_option("--n", n, "Block length")->required()->check(CLI::PositiveNumber);
  b_report->add_option("--exact-table", table_path, "Exact values from search");
  b_report->add_option("--code", code_paths, "Codes whose rate is reported");
  b_report->add_option("--format", format, "json or table");
  auto *b_zar = bound->add_subcommand("zarankiewicz", "KST upper bound on z(u,v;s,t)");
  b_zar->add_option("--u", u_real)->required();
  b_zar->add_option("--v", v_real)->required();
  b_zar->add_option("--s", s)->required();
  b_zar->add_option("--t", t_kst)->required();
  auto *b_transfer = bound->add_subcommand("transfer", "Upper bound on T(n) from T_b(n,r)");
  b_transfer->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  b_transfer->add_option("--r", r)->required();
  b_transfer->add_option("--tb", tb_value, "T_b(n,r) or an upper bound on it")->required();
  auto *b_deficit = bound->add_subcommand("deficit", "r-bounded deficit");
  b_deficit->add_option("--r", r)->required();
  b_deficit->add_option("--n", n);
  b_deficit->add_option("--tb", tb_value);
  b_deficit->add_option("--kind", kind, "exact, lower or upper (nature of --tb)");

  auto *graph = app.add_subcommand("graph", "Derived graphs");
  graph->require_subcommand(1);
  auto *g_build = graph->add_subcommand("build", "Build the derived graph");
  g_build->add_option("input", input)->required();
  g_build->add_option("--edges", edges_path, "Edge-list output path");
  g_build->add_option("-o,--output", output, "Summary path (default stdout)");
  auto *g_kst = graph->add_subcommand("kst-check", "Search for K_{s,t}");
  g_kst->add_option("input", input)->required();
  g_kst->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  g_kst->add_option("--t", t_kst)->required()->check(CLI::PositiveNumber);
  auto *g_bip = graph->add_subcommand("bipartition", "Crossing fraction of equi-bipartitions");
  g_bip->add_option("input", input)->required();
  g_bip->add_option("--seed", seed)->required();
  g_bip->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  g_bip->add_flag("--exhaustive", exhaustive);

  auto *sample = app.add_subcommand("sample-shift", "|(C+v) ∩ A_r| over random shifts");
  sample->add_option("input", input)->required();
  sample->add_option("--r", r)->required();
  sample->add_option("--trials", trials)->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed);
  sample->add_flag("--exhaustive", exhaustive, "Enumerate all 3^n shifts");

  auto *prune_cmd = app.add_subcommand("prune", "Pruning chain of a trifferent code");
  prune_cmd->add_option("input", input)->required();

  auto *project_cmd = app.add_subcommand("project", "Restrict to a 2 at one coordinate");
  project_cmd->add_option("input", input)->required();
  project_cmd->add_option("--coordinate", coordinate, "1-based coordinate (default: best)");
  project_cmd->add_option("-o,--output", output, "Output .triff path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto leaf = [&]() {
    const CLI::App *a = &app;
    while (!a->get_subcommands().empty())
      a = a->get_subcommands().front();
    return a;
  }();
  const RunConfig cfg = resolve(leaf);

  try {
    if (format != "json" && format != "table")
      throw std::invalid_argument("--format must be json or table");

    // construct ----------------------------------------------------------
    if (leaf == c_one || leaf == c_rec || leaf == c_triple) {
      TriffFile file{Code(1), {}};
      if (leaf == c_one) {
        file.code = one_bounded(n);
        file.comments = {" construction: one-bounded", " size=" + std::to_string(file.code.size())};
      } else if (leaf == c_rec) {
        const SigmaChoice sigma = sigma_from(sigma_kind, seed);
        const auto rc = recursive_construction(t, target, sigma);
        file.code = rc.code;
        file.comments = describe(rc, sigma);
      } else {
        const SigmaChoice sigma = sigma_from(sigma_kind, seed);
        const AffinePlane plane(q, sigma);
        Code base(1);
        std::string provenance;
        if (base_path.empty()) {
          const std::size_t need = plane.line_count();
          base = one_bounded((need + 1) / 2);
          provenance = " base=one_bounded(" + std::to_string(base.block_length()) + ")";
        } else {
          base = read_triff(base_path).code;
          provenance = " base=" + base_path;
        }
        file.code = triple_construction(plane, base);
        file.comments = {" construction: triple", " q=" + std::to_string(q),
                         sigma.kind == SigmaChoice::Kind::cyclic
                             ? std::string(" sigma=cyclic")
                             : " sigma=random seed=" + std::to_string(seed),
                         provenance, " size=" + std::to_string(file.code.size())};
      }
      for (auto &line : cfg.comment_lines())
        file.comments.push_back(line);
      emit_text(format_triff(file), output);
      return kExitOk;
    }

    // verify -------------------------------------------------------------
    if (leaf == verify) {
      const Code code = read_triff(input).code;
      const auto v = verify_trifferent(code, workers);
      if (format == "json") {
        emit_json(verification_json(code, v), cfg);
      } else {
        std::cout << (v.ok() ? "trifferent" : "not trifferent") << ": n="
                  << code.block_length() << " size=" << code.size() << "\n";
        if (v.witness)
          std::cout << "witness: " << join_words(code, *v.witness) << "\n";
      }
      if (!v.ok())
        std::cerr << "not trifferent; witness " << join_words(code, *v.witness) << "\n";
      return v.ok() ? kExitOk : kExitCheckFailed;
    }

    // search -------------------------------------------------------------
    if (leaf == s_max || leaf == s_maxr) {
      SearchConfig sc;
      sc.budget = budget;
      sc.symmetry_breaking = !no_symmetry;
      sc.group_bound = !no_group_bound;
      sc.override_caps = override_caps;
      auto cert = leaf == s_max ? max_trifferent(n, sc) : max_r_bounded(n, r, sc);
      if (oracle)
        confirm_with_oracle(cert, override_caps ? SIZE_MAX : kOracleDefaultCap);
      if (!table_path.empty()) {
        ExactTable table;
        if (std::ifstream in(table_path); in)
          table = ExactTable::from_json(json::parse(in));
        record(table, cert);
        emit_text(table.to_json().dump(2) + "\n", table_path);
      }
      emit_json(cert.to_json(), cfg, output);
      if (cert.oracle_checked && cert.status == SearchCertificate::Status::optimal &&
          cert.oracle_value != cert.best_size) {
        std::cerr << "oracle disagrees with branch and bound\n";
        return kExitCheckFailed;
      }
      return kExitOk;
    }

    // bound --------------------------------------------------------------
    if (leaf == b_report) {
      ExactTable table;
      if (!table_path.empty()) {
        std::ifstream in(table_path);
        if (!in)
          throw std::runtime_error("cannot open " + table_path);
        table = ExactTable::from_json(json::parse(in));
      }
      std::vector<std::pair<std::string, Code>> codes;
      for (const auto &p : code_paths)
        codes.emplace_back(p, read_triff(p).code);
      const auto rep = bound_report(n, table, codes);
      if (format == "json") {
        emit_json(rep.to_json(), cfg);
      } else {
        std::cout << rep.to_table();
        for (auto &line : cfg.comment_lines())
          std::cout << "#" << line << "\n";
      }
      return kExitOk;
    }
    if (leaf == b_zar) {
      const double z = zarankiewicz_bound(u_real, v_real, s, t_kst);
      emit_json({{"schema", 1}, {"zarankiewicz_bound", z}, {"text", format_number(z)}}, cfg);
      return kExitOk;
    }
    if (leaf == b_transfer) {
      json j{{"schema", 1},
             {"rho_b", rho_b(n, r, tb_value)},
             {"log2_transfer_bound", log2_transfer_bound(n, r, tb_value)}};
      const double tr = transfer_bound(n, r, tb_value);
      j["transfer_bound"] = std::isfinite(tr) ? json(tr) : json(nullptr);
      j["elias_bound"] = std::isfinite(elias_bound(n)) ? json(elias_bound(n)) : json(nullptr);
      emit_json(j, cfg);
      return kExitOk;
    }
    if (leaf == b_deficit) {
      json j{{"schema", 1}, {"r", r}};
      if (n > 0) {
        ValueKind vk = ValueKind::exact;
        if (kind == "lower")
          vk = ValueKind::lower_bound;
        else if (kind == "upper")
          vk = ValueKind::upper_bound;
        else if (kind != "exact")
          throw std::invalid_argument("--kind must be exact, lower or upper");
        const auto d = deficit(n, r, tb_value, vk);
        const char *names[] = {"exact", "upper", "lower"};
        j["deficit"] = {{"n", n}, {"tb", tb_value}, {"delta", d.delta},
                        {"delta_kind", names[static_cast<int>(d.delta_kind())]}};
      }
      try {
        j["deficit_upper"] = deficit_upper(r);
        j["alpha"] = deficit_exponent();
      } catch (const std::invalid_argument &) {
        j["deficit_upper"] = nullptr;
      }
      emit_json(j, cfg);
      return kExitOk;
    }

    // graph --------------------------------------------------------------
    if (leaf == g_build) {
      const auto g = graph_for(read_triff(input).code);
      if (!edges_path.empty())
        emit_text(g.edge_list(), edges_path);
      emit_json(graph_summary(g), cfg, output);
      return kExitOk;
    }
    if (leaf == g_kst) {
      const auto g = graph_for(read_triff(input).code);
      auto j = kst_json(g, s, t_kst);
      const bool free = j["free"].get<bool>();
      emit_json({{"schema", 1}, {"kst", j}}, cfg);
      return free ? kExitOk : kExitCheckFailed;
    }
    if (leaf == g_bip) {
      const auto g = build_graph_r2(read_triff(input).code);
      const auto st = exhaustive ? exhaustive_bipartition_check(g)
                                 : random_bipartition_check(g, seed, trials);
      json j{{"schema", 1}, {"applicable", st.applicable}, {"trials", st.trials}};
      if (st.applicable) {
        j["mean_crossing_fraction"] = st.mean_crossing_fraction;
        j["min_crossing_fraction"] = st.min_crossing_fraction;
        j["max_crossing_fraction"] = st.max_crossing_fraction;
        j["exact_expectation"] = st.exact_expectation;
      }
      emit_json(j, cfg);
      return kExitOk;
    }

    // sample-shift -------------------------------------------------------
    if (leaf == sample) {
      const Code code = read_triff(input).code;
      json j{{"schema", 1}, {"n", code.block_length()}, {"size", code.size()}, {"r", r}};
      if (exhaustive) {
        const auto e = shift_density_exhaustive(code, r);
        j["shifts"] = e.shifts;
        j["total"] = e.total;
        j["expected_total"] = e.expected_total;
        j["mean"] = e.mean();
        j["max"] = e.max;
        j["identity_holds"] = e.total == e.expected_total;
      } else {
        if (sample->count("--seed") == 0 || sample->count("--trials") == 0)
          throw std::invalid_argument("random sampling needs --trials and --seed");
        const auto st = shift_density_sample(code, r, trials, seed);
        j["trials"] = st.trials;
        j["mean"] = st.mean;
        j["max"] = st.max;
        j["exact_expectation"] = st.exact_expectation;
        j["certified_tb_lower_bound"] = st.max;
      }
      emit_json(j, cfg);
      return kExitOk;
    }

    // prune / project ----------------------------------------------------
    if (leaf == prune_cmd) {
      const Code code = read_triff(input).code;
      PruneChain chain;
      try {
        chain = prune(code);
      } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
      }
      json steps = json::array();
      for (std::size_t k = 0; k < chain.steps.size(); ++k) {
        const auto &st = chain.steps[k];
        steps.push_back({{"coordinate", st.coordinate + 1},
                         {"removed_symbol", st.removed_symbol},
                         {"symbol_counts", st.symbol_counts},
                         {"size_after", chain.codes[k + 1].size()}});
      }
      json final_words = json::array();
      for (const auto &w : chain.codes.back())
        final_words.push_back(w.to_string());
      emit_json({{"schema", 1}, {"initial_size", code.size()}, {"steps", steps},
                 {"final", final_words}},
                cfg);
      return kExitOk;
    }
    if (leaf == project_cmd) {
      const Code code = read_triff(input).code;
      if (project_cmd->count("--coordinate") && coordinate == 0)
        throw std::out_of_range("--coordinate is 1-based");
      const std::size_t i = project_cmd->count("--coordinate")
                                ? coordinate - 1
                                : best_project(code);
      TriffFile file{project(code, i), {}};
      file.comments = {" projection of " + input + " at coordinate " + std::to_string(i + 1)};
      for (auto &line : cfg.comment_lines())
        file.comments.push_back(line);
      emit_text(format_triff(file), output);
      return kExitOk;
    }
  } catch (const ParseError &e) {
    std::cerr << input << ":" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
