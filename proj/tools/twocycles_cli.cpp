// twocycles: solve, verify, enumerate, generate, classify and probe.
//
// Exit status: 0 all assertions hold, 1 assertion failures, 2 input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twocycles/graph.hpp"
#include "twocycles/graph6.hpp"
#include "twocycles/harness.hpp"
#include "twocycles/solver.hpp"
#include "twocycles/structure.hpp"

namespace {

using namespace twocycles;

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kInputError = 2;

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  long n = 0;
  long m = 0;
  return static_cast<bool>(in >> n >> m);
}

// A file holding graph6 (first line) or an edge list, or a graph6 string.
Graph load_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (looks_like_edge_list(text)) return parse_edge_list(text);
    std::istringstream lines(text);
    std::string first;
    std::getline(lines, first);
    return parse_graph6(first);
  }
  return parse_graph6(arg);
}

nlohmann::json cycles_json(const CyclePairCert& c) {
  return {{"first", c.first.vertices()}, {"second", c.second.vertices()}};
}

int run_solve(const std::string& input, int n1, int n2, const std::string& strategy_text) {
  const auto strategy = parse_strategy(strategy_text);
  if (!strategy) throw InputError("unknown strategy '" + strategy_text + "'");
  const Graph g = load_graph(input);
  nlohmann::json out{{"graph6", encode_graph6(g)}, {"n1", n1}, {"n2", n2},
                     {"strategy", strategy_text}};
  const bool asserted = ore_condition(g, 2);
  try {
    SolveResult res = find_disjoint_cycles(g, n1, n2, *strategy);
    out["found"] = res.cert.has_value();
    if (res.cert) out["cycles"] = cycles_json(*res.cert);
    out["trace"] = nlohmann::json::parse(res.trace.to_json());
    if (res.contract_error) out["contract_error"] = *res.contract_error;
    std::cout << out.dump() << '\n';
    if (res.contract_error) return kAssertionFailed;
    return asserted && !res.cert ? kAssertionFailed : kOk;
  } catch (const ProofContractError& e) {
    out["found"] = false;
    out["contract_error"] = e.what();
    out["trace"] = nlohmann::json::parse(e.trace().to_json());
    std::cout << out.dump() << '\n';
    return kAssertionFailed;
  }
}

int finish_report(const Report& r) {
  std::cout << r.to_json_lines();
  if (!r.passed()) return kAssertionFailed;
  return r.parse_errors > 0 ? kInputError : kOk;
}

int run_verify(const std::string& mode_text, int n, const std::string& input, int workers,
               bool no_oracle) {
  const auto mode = parse_mode(mode_text);
  if (!mode) throw InputError("unknown mode '" + mode_text + "'");
  VerifyOptions options;
  options.workers = workers;
  options.check_oracle = !no_oracle;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw InputError("cannot open " + input);
    Graph6Source source(in, input);
    return finish_report(verify_stream(source, *mode, options));
  }
  if (n == 0) throw InputError("verify needs --n or --input");
  LabeledSource source(n);
  return finish_report(verify_stream(source, *mode, options));
}

int run_enumerate(int n, std::optional<int> sigma2_min) {
  LabeledEnumerator en(n, sigma2_min);
  while (auto g = en.next()) std::cout << encode_graph6(*g) << '\n';
  return kOk;
}

int run_gen(const std::string& descriptor, bool edge_list) {
  const Graph g = gen_family(parse_family(descriptor));
  if (edge_list)
    std::cout << format_edge_list(g);
  else
    std::cout << encode_graph6(g) << '\n';
  return kOk;
}

int run_classify(const std::string& input) {
  const Graph g = load_graph(input);
  const StructureClass s = classify_near_hamiltonian(g);
  nlohmann::json out{{"graph6", encode_graph6(g)}, {"kind", to_string(kind_of(s))}};
  if (const auto* h = std::get_if<HamiltonCycleCase>(&s)) {
    out["cycle"] = h->cycle.vertices();
  } else if (const auto* nb = std::get_if<NearBipartiteCase>(&s)) {
    out["m"] = nb->m;
    out["independent"] = nb->independent.to_vector();
    out["other"] = nb->other.to_vector();
  } else {
    const auto& cone = std::get<ConeOverCliquesCase>(s);
    out["cut"] = cone.cut;
    out["left"] = cone.left.to_vector();
    out["right"] = cone.right.to_vector();
  }
  out["verified"] = verify_structure(g, s);
  std::cout << out.dump() << '\n';
  return verify_structure(g, s) ? kOk : kAssertionFailed;
}

int run_probe(const std::string& input, int workers) {
  std::ifstream in(input);
  if (!in) throw InputError("cannot open " + input);
  Graph6Source source(in, input);
  return finish_report(probe_open_question(source, workers));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint cycle pairs under the sigma2 >= n + 2 degree-sum condition"};
  app.require_subcommand(1);

  std::string solve_input;
  int n1 = 0;
  int n2 = 0;
  std::string strategy = "proof_first";
  auto* solve = app.add_subcommand("solve", "Find disjoint n1- and n2-cycles");
  solve->add_option("graph", solve_input, "graph6 string, or a file with graph6 or an edge list")
      ->required();
  solve->add_option("--n1", n1, "First cycle length")->required();
  solve->add_option("--n2", n2, "Second cycle length")->required();
  solve->add_option("--strategy", strategy, "proof_first | oracle_only | proof_only");

  std::string mode = "theorem15";
  int order = 0;
  std::string input;
  int workers = 1;
  bool no_oracle = false;
  auto* verify = app.add_subcommand("verify", "Check a statement over a graph corpus");
  verify->add_option("--mode", mode, "theorem15 | elzahar | ore_bondy | lemma27");
  auto* n_opt = verify->add_option("--n", order, "All labeled graphs on n vertices (n <= 8)");
  verify->add_option("--input", input, "graph6 file, one graph per line")->excludes(n_opt);
  verify->add_option("--workers", workers, "Worker threads");
  verify->add_flag("--no-oracle", no_oracle, "Skip the oracle cross-check");

  int enum_n = 0;
  std::optional<int> sigma2_min;
  auto* enumerate = app.add_subcommand("enumerate", "Print labeled graphs as graph6");
  enumerate->add_option("--n", enum_n, "Order (3..8)")->required();
  enumerate->add_option("--sigma2-min", sigma2_min, "Keep graphs with sigma2 at least this");

  std::string descriptor;
  bool edge_list = false;
  auto* gen = app.add_subcommand("gen", "Build a named family, e.g. J(K2,U(K3,K4))");
  gen->add_option("descriptor", descriptor, "Family descriptor")->required();
  gen->add_flag("--edge-list", edge_list, "Print an edge list instead of graph6");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Structure of a graph with sigma2 >= n - 1");
  classify->add_option("graph", classify_input, "graph6 string or file")->required();

  std::string probe_input;
  int probe_workers = 1;
  auto* probe = app.add_subcommand("probe", "Search sigma2 = n + 1 graphs for missing pairs");
  probe->add_option("--input", probe_input, "graph6 file")->required();
  probe->add_option("--workers", probe_workers, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return run_solve(solve_input, n1, n2, strategy);
    if (*verify) return run_verify(mode, order, input, workers, no_oracle);
    if (*enumerate) return run_enumerate(enum_n, sigma2_min);
    if (*gen) return run_gen(descriptor, edge_list);
    if (*classify) return run_classify(classify_input);
    if (*probe) return run_probe(probe_input, probe_workers);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << '\n';
    return kAssertionFailed;
  }
  return kInputError;
}
