// Command-line front end: check, gen, bench, verify-potential.
//
// Exit codes for `check` and `verify-potential`: 0 balanced, 1 unbalanced,
// 2 indeterminate, 3 usage / IO / validation error, 4 methods disagree.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dqgraph/balance.hpp"
#include "dqgraph/bench.hpp"
#include "dqgraph/generators.hpp"
#include "dqgraph/graph_io.hpp"

namespace {

using namespace dqgraph;

constexpr int kExitBalanced = 0;
constexpr int kExitUnbalanced = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitError = 3;
constexpr int kExitDisagreement = 4;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::balanced: return kExitBalanced;
    case Verdict::unbalanced: return kExitUnbalanced;
    case Verdict::indeterminate: return kExitIndeterminate;
  }
  return kExitError;
}

void print_report(std::ostream& os, const BalanceReport& r) {
  os << std::left << std::setw(15) << to_string(r.method) << ' ' << to_string(r.verdict);
  if (r.failure_stage) os << " at " << to_string(*r.failure_stage);
  if (r.err) os << "  Err=" << std::scientific << std::setprecision(3) << *r.err << std::defaultfloat;
  os << "  (" << std::scientific << std::setprecision(3) << r.seconds << std::defaultfloat << " s)";
  if (!r.detail.empty()) os << "  " << r.detail;
  os << '\n';
  if (r.witness) {
    os << "  witness cycle:";
    for (std::size_t k = 0; k < r.witness->length(); ++k)
      os << ' ' << r.witness->vertices[k] << (r.witness->forward[k] ? " ->" : " <-");
    os << ' ' << r.witness->vertices.front() << '\n';
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

WeightType require_weight_type(const std::string& name) {
  const auto t = parse_weight_type(name);
  if (!t) throw Error(Errc::invalid_argument, "unknown weight type \"" + name + "\"");
  return *t;
}

int run_check(const std::string& file, const std::string& method_name, bool as_json) {
  const WeightedDigraph g = read_graph_file(file);
  std::vector<Method> methods;
  if (method_name == "all") {
    if (is_unit_type(g.weight_type()))
      methods = {Method::direct, Method::gain_graph, Method::cycle_oracle};
    else
      methods = {Method::cycle_oracle, Method::wdg_similarity};
  } else {
    const auto m = parse_method(method_name);
    if (!m) throw Error(Errc::invalid_argument, "unknown method \"" + method_name + "\"");
    methods = {*m};
  }

  std::vector<BalanceReport> reports;
  for (const Method m : methods) reports.push_back(check_balance(g, m));

  std::optional<Verdict> consensus;
  bool disagree = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::indeterminate) continue;
    if (consensus && *consensus != r.verdict) disagree = true;
    consensus = r.verdict;
  }
  const Verdict overall = consensus.value_or(Verdict::indeterminate);

  if (as_json) {
    nlohmann::json out{{"verdict", disagree ? "disagreement" : std::string(to_string(overall))}};
    out["reports"] = nlohmann::json::array();
    for (const auto& r : reports) out["reports"].push_back(to_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(std::cout, r);
    if (reports.size() > 1) std::cout << "overall: " << (disagree ? "disagreement" : to_string(overall)) << '\n';
  }
  if (disagree) return kExitDisagreement;
  return exit_code(overall);
}

int run_verify_potential(const std::string& file, bool as_json) {
  const WeightedDigraph g = read_graph_file(file);
  const auto p = build_potential(g);
  if (!p) {
    if (as_json)
      std::cout << nlohmann::json{{"potential", nullptr}, {"verdict", "unbalanced"}}.dump(2) << '\n';
    else
      std::cout << "no potential function: some arc does not fit theta(i)^-1 theta(j) c_ij\n";
    return kExitUnbalanced;
  }
  const SimilarityCheck check = wdg_similarity_check(g, *p);
  const bool ok = check.err <= kBalanceTol && check.null_residual <= kBalanceTol;
  if (as_json) {
    nlohmann::json theta = nlohmann::json::array();
    for (const auto& t : p->theta) theta.push_back(to_json(t));
    std::cout << nlohmann::json{{"verdict", ok ? "balanced" : "unbalanced"},
                                {"theta", theta},
                                {"c", p->c},
                                {"err", check.err},
                                {"null_residual", check.null_residual}}
                     .dump(2)
              << '\n';
  } else {
    for (std::size_t i = 0; i < p->theta.size(); ++i) std::cout << "theta(" << i + 1 << ") = " << p->theta[i] << '\n';
    for (std::size_t e = 0; e < p->c.size(); ++e)
      std::cout << "c(" << g.graph().arc(e).tail << "," << g.graph().arc(e).head << ") = " << p->c[e] << '\n';
    std::cout << std::scientific << std::setprecision(3) << "Err = " << check.err
              << "  |L y| = " << check.null_residual << '\n';
  }
  return ok ? kExitBalanced : kExitUnbalanced;
}

struct GenOptions {
  std::string shape;
  int n{3};
  std::string type{"udq"};
  std::uint64_t seed{1};
  double density{0.3};
  bool dst{false};
  bool unbalanced{false};
  std::string out;
};

int run_gen(const GenOptions& o) {
  const WeightType type = require_weight_type(o.type);
  WeightedDigraph g;
  if (o.shape == "cycle")
    g = gen_cycle(o.n, type, o.seed);
  else if (o.shape == "tree")
    g = gen_tree(o.n, type, o.seed);
  else
    g = gen_random_balanced(o.n, o.density, type, o.seed, o.dst);
  if (o.unbalanced) {
    const auto arc = pick_cycle_arc(g, o.seed + 1);
    if (!arc) throw Error(Errc::invalid_argument, "graph has no cycle, so it cannot be made unbalanced");
    g = perturb(g, *arc, o.seed + 2);
  }
  if (o.out.empty())
    std::cout << serialize_graph(g) << '\n';
  else
    write_graph_file(o.out, g);
  return 0;
}

int run_bench(const std::string& sizes, const std::string& types, const std::string& methods, int reps,
              std::uint64_t seed, const std::string& out) {
  BenchConfig config;
  config.sizes.clear();
  for (const auto& s : split_list(sizes)) config.sizes.push_back(std::stoi(s));
  config.weight_types.clear();
  for (const auto& t : split_list(types)) config.weight_types.push_back(require_weight_type(t));
  config.methods.clear();
  for (const auto& m : split_list(methods)) {
    const auto parsed = parse_method(m);
    if (!parsed) throw Error(Errc::invalid_argument, "unknown method \"" + m + "\"");
    config.methods.push_back(*parsed);
  }
  config.repetitions = reps;
  config.seed = seed;
  const auto records = bench(config);
  if (out.empty()) {
    write_csv(std::cout, records);
  } else {
    std::ofstream file(out);
    if (!file) throw Error(Errc::invalid_argument, "cannot write " + out);
    write_csv(file, records);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balance checks for (dual) quaternion weighted directed graphs"};
  app.require_subcommand(1);

  std::string check_file;
  std::string check_method = "all";
  bool check_json = false;
  auto* check = app.add_subcommand("check", "Decide whether a graph file is balanced");
  check->add_option("file", check_file, "Graph JSON file")->required();
  check->add_option("--method", check_method, "direct | gain | cycles | potential | all")
      ->check(CLI::IsMember({"direct", "gain", "cycles", "potential", "all"}));
  check->add_flag("--json", check_json, "Print reports as JSON");

  GenOptions gen_options;
  auto* gen = app.add_subcommand("gen", "Generate a balanced (or perturbed) graph as JSON");
  gen->add_option("shape", gen_options.shape, "cycle | tree | random")
      ->required()
      ->check(CLI::IsMember({"cycle", "tree", "random"}));
  gen->add_option("--n", gen_options.n, "Vertex count")->required();
  gen->add_option("--type", gen_options.type, "udq | udc | dq | complex | real (or full names)");
  gen->add_option("--seed", gen_options.seed, "RNG seed");
  gen->add_option("--density", gen_options.density, "Extra arcs per vertex (random graphs)");
  gen->add_flag("--dst", gen_options.dst, "Orient tree arcs so a directed spanning tree exists (random graphs)");
  gen->add_flag("--unbalanced", gen_options.unbalanced, "Perturb the weight of one arc lying on a cycle");
  gen->add_option("--out", gen_options.out, "Output file (default: stdout)");

  std::string sizes = "10,20,50,100,200,500";
  std::string types = "udc,udq";
  std::string methods = "direct,gain";
  int reps = 1;
  std::uint64_t bench_seed = BenchConfig{}.seed;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time the checkers on balanced directed cycles (CSV)");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated cycle lengths");
  bench_cmd->add_option("--types", types, "Comma-separated weight types");
  bench_cmd->add_option("--methods", methods, "Comma-separated methods");
  bench_cmd->add_option("--reps", reps, "Timing repetitions per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "Base seed");
  bench_cmd->add_option("--out", bench_out, "CSV output file (default: stdout)");

  std::string potential_file;
  bool potential_json = false;
  auto* verify = app.add_subcommand("verify-potential", "Build a potential function and check the similarity");
  verify->add_option("file", potential_file, "Graph JSON file")->required();
  verify->add_flag("--json", potential_json, "Print the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return run_check(check_file, check_method, check_json);
    if (*gen) return run_gen(gen_options);
    if (*bench_cmd) return run_bench(sizes, types, methods, reps, bench_seed, bench_out);
    if (*verify) return run_verify_potential(potential_file, potential_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
