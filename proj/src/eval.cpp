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

#include "setp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "setp/graph.hpp"
#include "setp/random.hpp"
#include "setp/transforms.hpp"

namespace setp {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm: return "closed_form";
    case Method::kEnumeration: return "enumeration";
    case Method::kMonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

ExpectedCost expected_cost_closed_form(const AprioriOrder& order, const SimplifiedInstance& inst) {
  return {closed_form_value(order, inst), Method::kClosedForm, 0.0};
}

ExpectedCost expected_cost_enumeration(const AprioriOrder& order, const SimplifiedInstance& inst,
                                       int guard) {
  return {enumeration_value(order, inst, guard), Method::kEnumeration, 0.0};
}

namespace {

// Running mean and sum of squared deviations (Welford / Chan et al.).
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0.0) return;
    if (count == 0.0) {
      *this = other;
      return;
    }
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * (other.count / total);
    m2 += other.m2 + delta * delta * (count * other.count / total);
    count = total;
  }
};

Moments run_batch(const OrientedSequence<double>& seq, const Eigen::MatrixXd& d, std::uint64_t seed,
                  std::uint64_t batch, std::uint64_t draws) {
  Engine rng = make_stream(seed, batch);
  const int n = static_cast<int>(seq.from.size());
  std::vector<int> served;
  served.reserve(static_cast<std::size_t>(n));
  Moments m;
  for (std::uint64_t s = 0; s < draws; ++s) {
    served.clear();
    for (int i = 0; i < n; ++i) {
      if (uniform01(rng) < seq.prob(i)) served.push_back(i);
    }
    m.add(tour_cost(seq, served, d));
  }
  return m;
}

}  // namespace

ExpectedCost expected_cost_monte_carlo(const AprioriOrder& order, const SimplifiedInstance& inst,
                                       std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  if (samples == 0) throw ParameterError("monte carlo needs at least one sample");
  const auto seq = lay_out(order, inst);
  const std::uint64_t batches = (samples + kMonteCarloBatch - 1) / kMonteCarloBatch;
  std::vector<Moments> per_batch(static_cast<std::size_t>(batches));

  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t b = first; b < batches; b += stride) {
      const std::uint64_t draws = std::min(kMonteCarloBatch, samples - b * kMonteCarloBatch);
      per_batch[static_cast<std::size_t>(b)] = run_batch(seq, inst.distance, seed, b, draws);
    }
  };

  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(batches)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  Moments total;
  for (const Moments& m : per_batch) total.merge(m);
  const double sd = samples > 1 ? std::sqrt(std::max(0.0, total.m2 / (total.count - 1.0))) : 0.0;
  return {total.mean, Method::kMonteCarlo, sd / std::sqrt(total.count)};
}

double aposteriori_cost_original(const EulerianTour& tour, const Scenario& s,
                                 const OriginalInstance& inst, const Eigen::MatrixXd& shortest) {
  if (s.size() != inst.num_required()) throw StructuralError("scenario size does not match instance");
  const Multigraph& g = inst.graph;
  std::vector<int> index_of(static_cast<std::size_t>(g.num_edges()), -1);
  for (int k = 0; k < inst.num_required(); ++k) {
    index_of[static_cast<std::size_t>(inst.required[static_cast<std::size_t>(k)])] = k;
  }

  double cost = 0.0;
  int at = inst.depot;
  for (const TourStep& step : tour.steps) {
    const int k = index_of[static_cast<std::size_t>(step.edge)];
    if (k < 0 || !s.served[static_cast<std::size_t>(k)]) continue;
    cost += shortest(at, step_from(g, step)) + inst.length(step.edge);
    at = step_to(g, step);
  }
  return cost + shortest(at, inst.depot);
}

double expected_cost_original_direct(const EulerianTour& tour, const OriginalInstance& inst, int guard) {
  if (const std::string problem = check_tour(tour, inst.graph); !problem.empty()) {
    throw StructuralError("invalid Eulerian tour: " + problem);
  }
  const int n = inst.num_required();
  if (n > guard) {
    throw GuardError("direct enumeration refused: n = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard),
                     static_cast<std::size_t>(guard));
  }
  const Eigen::MatrixXd shortest = all_pairs_shortest_paths(inst.graph, inst.length);
  Scenario s{std::vector<bool>(static_cast<std::size_t>(n))};
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double pr = 1.0;
    for (int k = 0; k < n; ++k) {
      const bool on = (mask >> k & 1U) != 0;
      s.served[static_cast<std::size_t>(k)] = on;
      pr *= on ? inst.prob(k) : 1.0 - inst.prob(k);
    }
    if (pr != 0.0) total += pr * aposteriori_cost_original(tour, s, inst, shortest);
  }
  return total;
}

ExpectedCost expected_cost_original(const EulerianTour& tour, const OriginalInstance& inst,
                                    const EvalOptions& options) {
  const double eps = options.epsilon.value_or(default_epsilon(inst));
  const Reduction red = simplify(inst, eps);
  const AprioriOrder order = to_simplified_order(induced_order(tour, inst), red.map);
  switch (options.method) {
    case Method::kClosedForm: return expected_cost_closed_form(order, red.instance);
    case Method::kEnumeration: return expected_cost_enumeration(order, red.instance);
    case Method::kMonteCarlo:
      return expected_cost_monte_carlo(order, red.instance, options.samples, options.seed);
  }
  throw ParameterError("unknown evaluation method");
}

}  // namespace setp
