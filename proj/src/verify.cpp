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

#include "setp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "setp/core.hpp"
#include "setp/eval.hpp"
#include "setp/graph.hpp"
#include "setp/io.hpp"
#include "setp/solvers.hpp"
#include "setp/transforms.hpp"

namespace setp {

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t SuiteReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

namespace {

CheckResult make_check(std::string name, double error, double tolerance, std::string detail = {}) {
  return {std::move(name), error <= tolerance, error, tolerance, std::move(detail)};
}

}  // namespace

SuiteReport verify_oracle(int size, int seeds) {
  if (size < 1 || size > kEnumerationGuard) throw std::invalid_argument("oracle: size must be in 1..20");
  SuiteReport report{"oracle", {}};
  for (int s = 0; s < seeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const bool metric = s % 2 == 1;
    const SimplifiedInstance inst = gen_random_simplified(size, seed, metric);
    const AprioriOrder order = gen_random_order(size, seed);
    const double closed = closed_form_value(order, inst);
    const double exact = enumeration_value(order, inst);
    report.checks.push_back(make_check("seed=" + std::to_string(s), std::abs(closed - exact),
                                       1e-9 * std::max(1.0, std::abs(exact)),
                                       std::string("n=") + std::to_string(size) +
                                           (metric ? " metric" : " nonmetric")));
  }
  return report;
}

SuiteReport verify_equivalence(int max_edges, int seeds) {
  if (max_edges < 5) throw std::invalid_argument("equivalence: size must be at least 5 edges");
  SuiteReport report{"equivalence", {}};
  const int base_edges = max_edges - 2;  // embed_depot adds two
  for (int s = 0; s < seeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const int e = 3 + s % (base_edges - 2);
    const int v = 3 + static_cast<int>(seed / 3 % static_cast<std::uint64_t>(e - 2));
    const int n = 1 + s % e;
    const OriginalInstance inst = gen_random_original(v, e, n, seed);
    const double eps = default_epsilon(inst);
    const Reduction red = simplify(inst, eps);
    const double tol = red.instance.num_required() * eps + 1e-9;

    double worst = 0.0;
    const auto tours = enumerate_eulerian_tours(inst.graph, inst.depot);
    for (const EulerianTour& tour : tours) {
      const double direct = expected_cost_original_direct(tour, inst);
      const AprioriOrder order = to_simplified_order(induced_order(tour, inst), red.map);
      worst = std::max(worst, std::abs(direct - closed_form_value(order, red.instance)));
    }
    report.checks.push_back(make_check("seed=" + std::to_string(s), tours.empty() ? tol + 1.0 : worst, tol,
                                       "v=" + std::to_string(v) + " e=" + std::to_string(e + 2) +
                                           " n=" + std::to_string(n) +
                                           " tours=" + std::to_string(tours.size())));
  }
  return report;
}

SuiteReport verify_reduction(int max_cities, int seeds) {
  if (max_cities < 3 || max_cities > kBruteForceGuard) {
    throw std::invalid_argument("reduction: size must be in 3..9");
  }
  SuiteReport report{"reduction", {}};
  const int low = std::min(4, max_cities);
  for (int s = 0; s < seeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const int m = low + s % (max_cities - low + 1);
    const TspInstance tsp = gen_random_tsp(m, seed);
    const double eps = default_epsilon(tsp);
    const Reduction red = tsp_to_setp(tsp, eps);
    const SolveResult setp_opt = brute_force(red.instance);
    const TspSolution tsp_opt = brute_force_tsp(tsp);
    const std::string tag = "seed=" + std::to_string(s);
    const std::string detail = "m=" + std::to_string(m);

    report.checks.push_back(make_check(tag + "/optimum",
                                       std::abs(setp_opt.cost.value - (tsp_opt.cost + m * eps)), m * eps,
                                       detail));
    const auto lifted = lift_to_tsp_tour(setp_opt.order, red.map);
    report.checks.push_back(make_check(tag + "/lifted-tour", std::abs(tsp_tour_cost(tsp, lifted) - tsp_opt.cost),
                                       1e-9, detail));
  }

  for (int m = 3; m <= std::min(max_cities, 6); ++m) {
    const Reduction red = tsp_to_setp(TspInstance{Eigen::MatrixXd::Ones(m, m) - Eigen::MatrixXd::Identity(m, m)},
                                      1e-6);
    std::vector<int> tour(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) tour[static_cast<std::size_t>(i)] = i;
    int tours = 0;
    int mismatches = 0;
    do {
      if (tour[1] > tour.back()) continue;  // one direction per undirected tour
      ++tours;
      const auto back = lift_to_tsp_tour(inject_tsp_tour(tour, red.map), red.map);
      if (canonical_tsp_tour(back) != canonical_tsp_tour(tour)) ++mismatches;
    } while (std::next_permutation(tour.begin() + 1, tour.end()));
    report.checks.push_back(make_check("bijection/m=" + std::to_string(m), mismatches, 0.0,
                                       "tours=" + std::to_string(tours)));
  }
  return report;
}

SuiteReport verify_eulerian_contrast(int max_edges, int seeds) {
  if (max_edges < 5) throw std::invalid_argument("eulerian-contrast: size must be at least 5 edges");
  SuiteReport report{"eulerian-contrast", {}};
  const int base_edges = max_edges - 2;
  double best_spread = 0.0;
  std::string witness = "none found";
  for (int s = 0; s < seeds; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    const int e = base_edges;
    const int v = 3 + s % (e - 2);
    const OriginalInstance inst = gen_random_original(v, e, std::max(1, e / 2), seed);
    const auto tours = enumerate_eulerian_tours(inst.graph, inst.depot);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const EulerianTour& tour : tours) {
      const double c = expected_cost_original(tour, inst).value;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      witness = "seed=" + std::to_string(s) + " v=" + std::to_string(v) + " e=" + std::to_string(e + 2) +
                " tours=" + std::to_string(tours.size()) + " min=" + format_real(lo) + " max=" + format_real(hi);
    }
    if (best_spread > 1e-3) break;
  }
  // error is the shortfall below the required spread
  report.checks.push_back({"spread", best_spread > 1e-3, std::max(0.0, 1e-3 - best_spread), 0.0,
                           "spread=" + format_real(best_spread) + " " + witness});
  return report;
}

SuiteReport run_suite(std::string_view name, int size, int seeds) {
  if (name == "oracle") return verify_oracle(size, seeds);
  if (name == "equivalence") return verify_equivalence(size, seeds);
  if (name == "reduction") return verify_reduction(size, seeds);
  if (name == "eulerian-contrast") return verify_eulerian_contrast(size, seeds);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  for (const CheckResult& c : report.checks) {
    out += "check=" + report.suite + "/" + c.name + " result=" + (c.pass ? "pass" : "fail") +
           " error=" + format_real(c.error) + " tolerance=" + format_real(c.tolerance) +
           " margin=" + format_real(c.margin());
    if (!c.detail.empty()) out += " " + c.detail;
    out += "\n";
  }
  out += "suite=" + report.suite + " passed=" + std::to_string(report.passed_count()) + "/" +
         std::to_string(report.checks.size()) + " result=" + (report.passed() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace setp
