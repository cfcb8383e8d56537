// Copyright 2026 The setp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "setp/core.hpp"
#include "setp/eval.hpp"
#include "setp/io.hpp"
#include "setp/solvers.hpp"
#include "setp/transforms.hpp"
#include "setp/verify.hpp"

namespace {

using namespace setp;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

// Thrown for bad flags or unreadable/unparseable inputs.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AnyInstance load(const std::string& path) {
  try {
    return read_instance_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::vector<Violation> violations_of(const AnyInstance& inst) {
  return std::visit(
      [](const auto& x) -> std::vector<Violation> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OriginalInstance>) {
          return validate_original(x);
        } else if constexpr (std::is_same_v<T, SimplifiedInstance>) {
          return validate_simplified(x);
        } else {
          return validate_tsp(x);
        }
      },
      inst);
}

// Prints violations to stdout; true when there were none.
bool report_violations(const AnyInstance& inst) {
  const auto violations = violations_of(inst);
  for (const Violation& v : violations) std::cout << "violation=" << describe(v) << "\n";
  return violations.empty();
}

void emit(const std::string& key, const std::string& value) { std::cout << key << "=" << value << "\n"; }
void emit(const std::string& key, double value) { emit(key, format_real(value)); }

// Simplified view of an instance for evaluate/solve; originals are reduced
// with the given or default epsilon, which is echoed.
struct Prepared {
  SimplifiedInstance instance;
  std::optional<Reduction> reduction;
};

Prepared prepare(const AnyInstance& any, std::optional<double> epsilon) {
  if (const auto* s = std::get_if<SimplifiedInstance>(&any)) return {*s, std::nullopt};
  if (const auto* o = std::get_if<OriginalInstance>(&any)) {
    const double eps = epsilon.value_or(default_epsilon(*o));
    if (!(eps > 0.0)) throw UsageError("--epsilon must be positive");
    Reduction red = simplify(*o, eps);
    emit("epsilon", red.epsilon);
    SimplifiedInstance inst = red.instance;
    return {std::move(inst), std::move(red)};
  }
  throw UsageError("tsp instances must be reduced first (setp reduce --from tsp)");
}

int cmd_validate(const std::string& path) {
  const AnyInstance inst = load(path);
  emit("kind", std::string(kind_name(inst)));
  if (!report_violations(inst)) return kDomainFailure;
  std::cout << "OK\n";
  return kOk;
}

struct EvaluateArgs {
  std::string path;
  std::string order;
  std::string method = "closed";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
};

int cmd_evaluate(const EvaluateArgs& args) {
  const AnyInstance any = load(args.path);
  emit("kind", std::string(kind_name(any)));
  if (!report_violations(any)) return kDomainFailure;
  const Prepared prep = prepare(any, args.epsilon);

  AprioriOrder order;
  try {
    if (prep.reduction) {
      const int n = prep.instance.num_required() - 1;
      order = to_simplified_order(parse_order(args.order, n), prep.reduction->map);
    } else {
      order = parse_order(args.order, prep.instance.num_required());
    }
  } catch (const ParseError& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }

  ExpectedCost cost;
  if (args.method == "closed") {
    cost = expected_cost_closed_form(order, prep.instance);
  } else if (args.method == "enum") {
    cost = expected_cost_enumeration(order, prep.instance);
  } else {
    cost = expected_cost_monte_carlo(order, prep.instance, args.samples, args.seed);
  }
  emit("n", std::to_string(prep.instance.num_required()));
  emit("order", format_order(order));
  emit("method", std::string(to_string(cost.method)));
  emit("value", cost.value);
  if (cost.method == Method::kMonteCarlo) {
    emit("samples", std::to_string(args.samples));
    emit("seed", std::to_string(args.seed));
    emit("stderr", cost.std_error);
  }
  return kOk;
}

struct SolveArgs {
  std::string path;
  bool exact = false;
  bool heuristic = false;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
};

int cmd_solve(const SolveArgs& args) {
  const AnyInstance any = load(args.path);
  emit("kind", std::string(kind_name(any)));
  if (!report_violations(any)) return kDomainFailure;
  const Prepared prep = prepare(any, args.epsilon);
  const SimplifiedInstance& inst = prep.instance;

  const bool exact = args.exact || (!args.heuristic && inst.num_required() <= kBruteForceGuard);
  SolveResult result;
  if (exact) {
    result = brute_force(inst);
  } else {
    result = local_search(inst, nearest_neighbor(inst, 0), args.budget, args.seed);
  }
  emit("solver", exact ? "exact" : "heuristic");
  emit("n", std::to_string(inst.num_required()));
  emit("order", format_order(result.order));
  emit("cost", result.cost.value);
  emit("evaluations", std::to_string(result.evaluations));
  // timing goes to stderr so that stdout stays reproducible
  std::cerr << "wall_time=" << format_real(result.wall_time.count()) << "\n";
  return kOk;
}

struct ReduceArgs {
  std::string path;
  std::string from;
  std::optional<double> epsilon;
  std::string out;
  std::string map;
};

int cmd_reduce(const ReduceArgs& args) {
  const AnyInstance any = load(args.path);
  const std::string kind(kind_name(any));
  if (!args.from.empty() && args.from != kind) {
    throw UsageError("--from " + args.from + " but " + args.path + " holds a " + kind + " instance");
  }
  if (kind == "simplified") throw UsageError("instance is already simplified");
  if (args.epsilon && !(*args.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  emit("source", kind);
  if (!report_violations(any)) return kDomainFailure;

  Reduction red;
  if (const auto* tsp = std::get_if<TspInstance>(&any)) {
    red = tsp_to_setp(*tsp, args.epsilon.value_or(default_epsilon(*tsp)));
  } else {
    const auto& orig = std::get<OriginalInstance>(any);
    red = simplify(orig, args.epsilon.value_or(default_epsilon(orig)));
  }
  write_text_file(args.out, serialize(red.instance));
  if (!args.map.empty()) write_text_file(args.map, serialize(red.map));
  emit("epsilon", red.epsilon);
  emit("n", std::to_string(red.instance.num_required()));
  emit("vertices", std::to_string(red.instance.num_vertices()));
  emit("instance", args.out);
  if (!args.map.empty()) emit("map", args.map);
  return kOk;
}

int cmd_verify(const std::string& suite, int seeds, std::optional<int> size) {
  int default_size = 8;
  if (suite == "oracle") default_size = 10;
  if (suite == "reduction") default_size = 7;
  SuiteReport report;
  try {
    report = run_suite(suite, size.value_or(default_size), seeds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << format_report(report);
  return report.passed() ? kOk : kDomainFailure;
}

struct GenArgs {
  std::string kind = "simplified";
  int n = 5;
  int v = 5;
  int e = 8;
  std::uint64_t seed = 0;
  bool metric = false;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  std::string text;
  try {
    if (args.kind == "simplified") {
      text = serialize(gen_random_simplified(args.n, args.seed, args.metric));
    } else if (args.kind == "original") {
      text = serialize(gen_random_original(args.v, args.e, args.n, args.seed));
    } else {
      text = serialize(gen_random_tsp(args.n, args.seed));
    }
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(args.out, text);
    emit("written", args.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Eulerian tour problem toolkit"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check an instance file's invariants");
  validate->add_option("path", validate_path, "Instance file")->required();

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Expected cost of an a priori order");
  evaluate->add_option("path", ev.path, "Instance file")->required();
  evaluate->add_option("--order", ev.order, "Order spec, e.g. 0+,2-,1+")->required();
  evaluate->add_option("--method", ev.method, "closed | enum | mc")
      ->check(CLI::IsMember({"closed", "enum", "mc"}));
  evaluate->add_option("--samples", ev.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", ev.seed, "Monte Carlo seed");
  evaluate->add_option("--epsilon", ev.epsilon, "Depot edge length for original instances");

  SolveArgs sv;
  auto* solve = app.add_subcommand("solve", "Optimize the a priori order");
  solve->add_option("path", sv.path, "Instance file")->required();
  auto* exact_flag = solve->add_flag("--exact", sv.exact, "Brute force");
  solve->add_flag("--heuristic", sv.heuristic, "Nearest neighbor + local search")->excludes(exact_flag);
  solve->add_option("--budget", sv.budget, "Local search evaluation budget")->check(CLI::PositiveNumber);
  solve->add_option("--seed", sv.seed, "Local search seed");
  solve->add_option("--epsilon", sv.epsilon, "Depot edge length for original instances");

  ReduceArgs rd;
  auto* reduce = app.add_subcommand("reduce", "Reduce a tsp or original instance to simplified form");
  reduce->add_option("path", rd.path, "Instance file")->required();
  reduce->add_option("--from", rd.from, "tsp | original")->check(CLI::IsMember({"tsp", "original"}));
  reduce->add_option("--epsilon", rd.epsilon, "Gadget / depot edge length");
  reduce->add_option("-o,--out", rd.out, "Output instance file")->required();
  reduce->add_option("--map", rd.map, "Output vertex map file");

  std::string suite;
  int seeds = 50;
  std::optional<int> size;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "oracle | equivalence | reduction | eulerian-contrast")
      ->required()
      ->check(CLI::IsMember({"oracle", "equivalence", "reduction", "eulerian-contrast"}));
  verify->add_option("--seeds", seeds, "Number of random instances")->check(CLI::PositiveNumber);
  verify->add_option("--size", size, "Instance size (n, edges or cities)");

  GenArgs gn;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", gn.kind, "simplified | original | tsp")
      ->check(CLI::IsMember({"simplified", "original", "tsp"}));
  gen->add_option("--n", gn.n, "Required edges (simplified, original) or cities (tsp)");
  gen->add_option("--v", gn.v, "Vertices (original)");
  gen->add_option("--e", gn.e, "Edges before depot embedding (original)");
  gen->add_option("--seed", gn.seed, "Seed");
  gen->add_flag("--metric", gn.metric, "Metric closure of distances (simplified)");
  gen->add_option("-o,--out", gn.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_path);
    if (evaluate->parsed()) return cmd_evaluate(ev);
    if (solve->parsed()) return cmd_solve(sv);
    if (reduce->parsed()) return cmd_reduce(rd);
    if (verify->parsed()) return cmd_verify(suite, seeds, size);
    if (gen->parsed()) return cmd_gen(gn);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
