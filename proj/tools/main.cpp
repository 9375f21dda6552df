// clusterweave: command-line front end. Exit codes: 0 success, 1 domain
// error, 2 usage error. Data goes to stdout (or --out), diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clusterweave/braid.hpp"
#include "clusterweave/errors.hpp"
#include "clusterweave/exchange_graph.hpp"
#include "clusterweave/folding.hpp"
#include "clusterweave/ngraph.hpp"
#include "clusterweave/seed.hpp"
#include "io.hpp"
#include "scenarios.hpp"

namespace {

using cw::io::json;

// Raised for malformed flag values; reported like a parse error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flag values starting with '@' name a file to read.
std::string read_arg(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw UsageError("cannot read " + value.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_arg(const std::string& flag, const std::string& value) {
  try {
    return json::parse(read_arg(value));
  } catch (const json::parse_error& e) {
    throw UsageError(flag + " is not valid JSON: " + e.what());
  }
}

struct Common {
  std::string out;
  std::string format = "json";
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

void emit_json(const Common& c, const json& j) { emit(c, j.dump() + "\n"); }

std::vector<int> zero_based(const std::vector<int>& ks) {
  std::vector<int> out;
  for (int k : ks) out.push_back(k - 1);
  return out;
}

cw::Seed seed_input(const std::string& matrix, const std::string& seed, const std::string& type) {
  if (!seed.empty()) return cw::io::seed_from_json(parse_json_arg("--seed", seed));
  if (!matrix.empty()) return cw::Seed::initial(cw::io::matrix_from_json(parse_json_arg("--matrix", matrix)));
  if (!type.empty()) return cw::Seed::initial(cw::bipartite_matrix(cw::parse_dynkin(type)));
  throw UsageError("one of --matrix, --seed or --type is required");
}

// Tripod arm lengths of the affine E types.
std::optional<std::array<int, 3>> tripod_of(const cw::DynkinType& t) {
  if (t.family != 'E' || t.twist != 1) return std::nullopt;
  if (t.rank == 6) return std::array<int, 3>{3, 3, 3};
  if (t.rank == 7) return std::array<int, 3>{2, 4, 4};
  if (t.rank == 8) return std::array<int, 3>{2, 3, 6};
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clusterweave: cluster patterns, foldings, braids and N-graphs of affine type"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "Write output to this file instead of stdout");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  // mutate
  std::string matrix, seed, type;
  std::vector<int> ks;
  auto* mutate = app.add_subcommand("mutate", "Mutate a matrix or seed at 1-based indices, in order");
  mutate->add_option("--matrix", matrix, "Exchange matrix as JSON rows (or @file)");
  mutate->add_option("--seed", seed, "Seed as JSON (or @file)");
  mutate->add_option("-k,--index", ks, "Mutation indices, 1-based")->required()->delimiter(',');

  // explore
  int depth = 0, jobs = 1;
  size_t cap = 100000;
  bool descending = false;
  auto* explore = app.add_subcommand("explore", "Breadth-first exchange graph exploration");
  explore->add_option("--matrix", matrix, "Exchange matrix as JSON rows (or @file)");
  explore->add_option("--seed", seed, "Seed as JSON (or @file)");
  explore->add_option("--type", type, "Dynkin type; uses its bipartite matrix");
  explore->add_option("--depth", depth, "Maximum mutation distance")->required()->check(CLI::NonNegativeNumber);
  explore->add_option("--cap", cap, "Maximum number of seed classes")->check(CLI::PositiveNumber);
  explore->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  explore->add_flag("--descending", descending, "Visit mutation indices from n down to 1");

  // fold
  std::string triple;
  bool list = false;
  int fold_depth = -1;
  auto* fold = app.add_subcommand("fold", "Fold a catalog triple");
  fold->add_option("--triple", triple, "Triple name, e.g. E6t-Z3-G2t");
  fold->add_flag("--list", list, "List the catalog triples");
  fold->add_option("--depth", fold_depth, "Also check global foldability to this depth (report on stderr)");

  // braid
  std::string word, equiv;
  int strands = 0;
  bool hat = false, cyclic = false;
  size_t budget = 1000000;
  auto* braid = app.add_subcommand("braid", "Braid words, bricks and brick quivers");
  braid->add_option("--word", word, "Word such as \"s1 s2^3 s1\"");
  braid->add_option("--strands", strands, "Strand count for --word")->check(CLI::Range(2, 64));
  braid->add_option("--type", type, "D~n or E~6/E~7/E~8: uses the word beta of that type");
  braid->add_flag("--hat", hat, "With --type: the closure with half twists");
  braid->add_option("--equiv", equiv, "Search for a relation path to this word");
  braid->add_option("--budget", budget, "Expansion budget for --equiv");
  braid->add_flag("--cyclic", cyclic, "Allow cyclic rotation in --equiv");

  // ngraph
  std::string input;
  std::vector<int> cycles_to_mutate;
  int coxeter = 0;
  auto* ngraph = app.add_subcommand("ngraph", "Catalog N-graphs, Legendrian mutation and Coxeter paddings");
  ngraph->add_option("--type", type, "D~n (n >= 4), E~6, E~7 or E~8");
  ngraph->add_option("--in", input, "N-graph JSON with cycles (or @file)");
  ngraph->add_option("--mutate", cycles_to_mutate, "Cycle indices to mutate, 1-based, in order")->delimiter(',');
  ngraph->add_option("--coxeter", coxeter, "Apply Legendrian Coxeter mutation r times (negative: inverse)");

  // verify
  std::string scenario;
  auto* verify = app.add_subcommand("verify", "Run a named acceptance scenario, or 'all'");
  verify->add_option("scenario", scenario, "Scenario name or number")->required();

  for (auto* sub : {mutate, explore, fold, braid, ngraph, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool dot = common.format == "dot";
    if (mutate->parsed()) {
      if (matrix.empty() == seed.empty()) throw UsageError("give exactly one of --matrix or --seed");
      if (!matrix.empty()) {
        const auto b = cw::mutate_matrix_sequence(cw::io::matrix_from_json(parse_json_arg("--matrix", matrix)),
                                                  zero_based(ks));
        dot ? emit(common, cw::io::quiver_dot(b)) : emit_json(common, b.to_rows());
      } else {
        const auto s = cw::mutate_seed_sequence(seed_input("", seed, ""), zero_based(ks));
        dot ? emit(common, cw::io::quiver_dot(s.matrix)) : emit_json(common, cw::io::to_json(s));
      }
    } else if (explore->parsed()) {
      const auto g = cw::explore(seed_input(matrix, seed, type), cw::ExploreOptions{depth, cap, jobs, descending});
      dot ? emit(common, cw::io::slice_dot(g)) : emit_json(common, cw::io::to_json(g));
      std::cerr << g.nodes.size() << " seed classes, " << g.edges.size() << " edges"
                << (g.complete ? ", complete" : "") << "\n";
    } else if (fold->parsed()) {
      if (list) {
        for (const auto& name : cw::catalog_triple_names()) emit(common, name + "\n");
        return 0;
      }
      if (triple.empty()) throw UsageError("--triple is required");
      const auto t = cw::catalog_triple(triple);
      const auto f = cw::fold(t.matrix, t.action);
      dot ? emit(common, cw::io::quiver_dot(f)) : emit_json(common, f.to_rows());
      std::cerr << t.source << " / " << t.group << " -> " << cw::classify_cartan(cw::cartan_counterpart(f)).name()
                << "\n";
      if (fold_depth >= 0) {
        const auto r = cw::verify_globally_foldable(t.matrix, t.action, fold_depth);
        std::cerr << "globally foldable to depth " << fold_depth << ": " << (r.ok && r.commutes ? "yes" : "no")
                  << " (" << r.explored << " matrices)\n";
        if (!(r.ok && r.commutes)) return 1;
      }
    } else if (braid->parsed()) {
      cw::BraidWord w;
      if (!type.empty()) {
        const auto t = cw::parse_dynkin(type);
        if (t.family == 'D' && t.twist == 1) {
          w = hat ? cw::beta_hat_affine_d(t.rank) : cw::beta_affine_d(t.rank);
        } else if (auto abc = tripod_of(t)) {
          w = hat ? cw::beta_hat_tripod((*abc)[0], (*abc)[1], (*abc)[2]) : cw::beta_tripod((*abc)[0], (*abc)[1], (*abc)[2]);
        } else {
          throw cw::Unsupported("no braid word for type " + t.name());
        }
      } else if (!word.empty()) {
        if (strands == 0) throw UsageError("--word needs --strands");
        w = cw::parse_braid(word, strands);
      } else {
        throw UsageError("one of --word or --type is required");
      }
      if (!equiv.empty()) {
        const auto w2 = cw::parse_braid(equiv, w.strands);
        const auto r = cw::equivalent_bounded(w, w2, budget, cyclic);
        json rules = json::array();
        for (const auto& rule : r.witness) rules.push_back(rule.str());
        emit_json(common, {{"from", cw::io::to_json(w)}, {"to", cw::io::to_json(w2)},
                           {"equivalent", r.equivalent}, {"witness", rules}, {"expanded", r.expanded}});
        return r.equivalent ? 0 : 1;
      }
      const auto q = cw::brick_quiver(w);
      if (dot) {
        emit(common, cw::io::quiver_dot(q));
      } else {
        json bricks = json::array();
        for (const auto& b : cw::bricks(w)) bricks.push_back({{"level", b.level}, {"left", b.left}, {"right", b.right}});
        emit_json(common, {{"word", cw::io::to_json(w)}, {"bricks", bricks}, {"quiver", q.to_rows()},
                           {"type", cw::classify_cartan(cw::cartan_counterpart(q)).name()}});
      }
    } else if (ngraph->parsed()) {
      cw::NGraphWithCycles g;
      if (!input.empty()) {
        const json j = parse_json_arg("--in", input);
        g.graph = cw::io::ngraph_from_json(j);
        g.cycles = cw::io::cycles_from_json(j);
      } else if (!type.empty()) {
        g = cw::build_initial(cw::parse_dynkin(type));
      } else {
        throw UsageError("one of --type or --in is required");
      }
      for (int k : zero_based(cycles_to_mutate)) g = cw::mutate_cycle(g.graph, g.cycles, k);
      if (coxeter != 0) {
        const int dir = coxeter > 0 ? 1 : -1;
        auto it = cw::legendrian_coxeter_mutation(g.graph, g.cycles, dir);
        for (int r = 1; r < std::abs(coxeter); ++r) it = cw::legendrian_coxeter_mutation(it, dir);
        g = it.materialized;
      }
      if (dot) {
        emit(common, cw::io::ngraph_dot(g.graph));
      } else {
        json j = cw::io::to_json(g.graph, g.cycles);
        j["boundary_word"] = g.graph.boundary_word(0).str();
        if (!g.cycles.empty()) j["quiver"] = cw::intersection_quiver(g.graph, g.cycles).to_rows();
        json violations = json::array();
        for (const auto& v : cw::validate(g.graph)) violations.push_back(cw::violation_name(v.kind) + ": " + v.detail);
        j["violations"] = violations;
        emit_json(common, j);
      }
    } else if (verify->parsed()) {
      std::vector<cw::scenarios::Scenario> chosen;
      if (scenario == "all") {
        chosen = cw::scenarios::all();
      } else if (auto s = cw::scenarios::find(scenario)) {
        chosen.push_back(*s);
      } else {
        std::string names;
        for (const auto& s : cw::scenarios::all()) names += " " + s.name;
        throw UsageError("unknown scenario '" + scenario + "'; known:" + names);
      }
      bool ok = true;
      for (const auto& s : chosen) {
        const auto r = cw::scenarios::run(s);
        ok = ok && r.ok;
        emit(common, (chosen.size() == 1 ? r.detail : r.line()) + "\n");
        if (chosen.size() == 1 && !r.ok) std::cerr << r.line() << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const cw::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const cw::io::json::exception& e) {
    std::cerr << "usage error: malformed JSON value: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
