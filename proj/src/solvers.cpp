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

#include "setp/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

#include "setp/core.hpp"
#include "setp/random.hpp"
#include "setp/transforms.hpp"

namespace setp {

namespace {

using Clock = std::chrono::steady_clock;

void check_instance(const SimplifiedInstance& inst) {
  const int n = inst.num_required();
  if (n == 0) throw StructuralError("instance has no required edges");
  if (inst.prob.size() != n || inst.distance.rows() != 2 * n || inst.distance.cols() != 2 * n) {
    throw StructuralError("instance sizes are inconsistent");
  }
}

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  AprioriOrder order;
  std::uint64_t evaluations = 0;
};

// All orders whose sequence starts with (0, second), in lexicographic order
// of (sequence, orient). For n == 1 `second` is ignored.
Candidate search_chunk(const SimplifiedInstance& inst, int second) {
  const int n = inst.num_required();
  Candidate best;

  AprioriOrder order;
  order.sequence.push_back(0);
  if (n > 1) {
    order.sequence.push_back(second);
    for (int e = 1; e < n; ++e) {
      if (e != second) order.sequence.push_back(e);
    }
  }
  order.orient.assign(static_cast<std::size_t>(n), 0);

  OrientedSequence<double> seq{std::vector<int>(static_cast<std::size_t>(n)),
                               std::vector<int>(static_cast<std::size_t>(n)), Eigen::VectorXd(n)};
  const std::uint64_t masks = std::uint64_t{1} << n;
  do {
    for (int i = 0; i < n; ++i) seq.prob(i) = inst.prob(order.sequence[static_cast<std::size_t>(i)]);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      // orient[0] is the most significant bit, so masks ascend lexicographically
      for (int e = 0; e < n; ++e) {
        order.orient[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(mask >> (n - 1 - e) & 1U);
      }
      for (int i = 0; i < n; ++i) {
        const int e = order.sequence[static_cast<std::size_t>(i)];
        const RequiredPair& r = inst.matching[static_cast<std::size_t>(e)];
        const bool flip = order.orient[static_cast<std::size_t>(e)] != 0;
        seq.from[static_cast<std::size_t>(i)] = flip ? r.head : r.tail;
        seq.to[static_cast<std::size_t>(i)] = flip ? r.tail : r.head;
      }
      const double cost = closed_form_kernel(seq, inst.distance);
      ++best.evaluations;
      if (cost < best.cost) {
        best.cost = cost;
        best.order = order;
      }
    }
  } while (n > 2 && std::next_permutation(order.sequence.begin() + 2, order.sequence.end()));
  return best;
}

}  // namespace

SolveResult brute_force(const SimplifiedInstance& inst, int guard, unsigned workers) {
  const auto started = Clock::now();
  check_instance(inst);
  const int n = inst.num_required();
  if (n > guard) {
    throw GuardError("brute force refused: n = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard),
                     static_cast<std::size_t>(guard));
  }

  const int chunks = std::max(1, n - 1);
  std::vector<Candidate> results(static_cast<std::size_t>(chunks));
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(chunks));

  auto work = [&](unsigned first) {
    for (int c = static_cast<int>(first); c < chunks; c += static_cast<int>(workers)) {
      results[static_cast<std::size_t>(c)] = search_chunk(inst, c + 1);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  // chunks are in lexicographic order, so a strict comparison keeps the
  // lexicographically smallest optimum
  SolveResult out;
  double best = std::numeric_limits<double>::infinity();
  for (const Candidate& c : results) {
    out.evaluations += c.evaluations;
    if (c.cost < best) {
      best = c.cost;
      out.order = c.order;
    }
  }
  out.cost = {best, Method::kClosedForm, 0.0};
  out.wall_time = Clock::now() - started;
  return out;
}

AprioriOrder nearest_neighbor(const SimplifiedInstance& inst, int start_edge) {
  check_instance(inst);
  const int n = inst.num_required();
  if (start_edge < 0 || start_edge >= n) throw ParameterError("nearest_neighbor: start edge out of range");

  AprioriOrder order;
  order.orient.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  order.sequence.push_back(start_edge);
  visited[static_cast<std::size_t>(start_edge)] = true;
  int at = inst.matching[static_cast<std::size_t>(start_edge)].head;

  for (int step = 1; step < n; ++step) {
    int pick = -1;
    bool pick_flip = false;
    double closest = std::numeric_limits<double>::infinity();
    for (int e = 0; e < n; ++e) {
      if (visited[static_cast<std::size_t>(e)]) continue;
      const RequiredPair& r = inst.matching[static_cast<std::size_t>(e)];
      if (inst.distance(at, r.tail) < closest || pick < 0) {
        closest = inst.distance(at, r.tail);
        pick = e;
        pick_flip = false;
      }
      if (inst.distance(at, r.head) < closest) {
        closest = inst.distance(at, r.head);
        pick = e;
        pick_flip = true;
      }
    }
    visited[static_cast<std::size_t>(pick)] = true;
    order.sequence.push_back(pick);
    order.orient[static_cast<std::size_t>(pick)] = pick_flip ? 1 : 0;
    const RequiredPair& r = inst.matching[static_cast<std::size_t>(pick)];
    at = pick_flip ? r.tail : r.head;
  }
  return canonicalize(order);
}

namespace {

struct Move {
  int first;  // flip: edge index; reversal: first position
  int last;   // -1 for a flip, else last position (inclusive)
};

AprioriOrder apply(const AprioriOrder& order, const Move& move) {
  AprioriOrder out = order;
  if (move.last < 0) {
    out.orient[static_cast<std::size_t>(move.first)] ^= 1U;
    return out;
  }
  auto begin = out.sequence.begin() + move.first;
  auto end = out.sequence.begin() + move.last + 1;
  std::reverse(begin, end);
  for (auto it = begin; it != end; ++it) out.orient[static_cast<std::size_t>(*it)] ^= 1U;
  return out;
}

}  // namespace

SolveResult local_search(const SimplifiedInstance& inst, const AprioriOrder& init, std::uint64_t budget,
                         std::uint64_t seed) {
  const auto started = Clock::now();
  check_instance(inst);
  check_order(init, inst);
  const int n = inst.num_required();

  std::vector<Move> moves;
  for (int e = 0; e < n; ++e) moves.push_back({e, -1});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // reversing everything only mirrors the cycle
      if (i == 0 && j == n - 1) continue;
      moves.push_back({i, j});
    }
  }
  Engine rng = make_stream(seed, 4);
  shuffle(moves.begin(), moves.end(), rng);

  SolveResult out;
  AprioriOrder current = init;
  double cost = closed_form_value(current, inst);
  out.evaluations = 1;
  out.trace.push_back(cost);

  while (out.evaluations < budget) {
    std::optional<AprioriOrder> best;
    double best_cost = cost;
    const double threshold = 1e-12 * std::max(1.0, cost);
    for (const Move& move : moves) {
      if (out.evaluations >= budget) break;
      AprioriOrder candidate = apply(current, move);
      const double c = closed_form_value(candidate, inst);
      ++out.evaluations;
      if (c < best_cost && cost - c > threshold) {
        best_cost = c;
        best = std::move(candidate);
      }
    }
    if (!best) break;
    current = std::move(*best);
    cost = best_cost;
    out.trace.push_back(cost);
  }

  out.order = canonicalize(current);
  out.cost = {cost, Method::kClosedForm, 0.0};
  out.wall_time = Clock::now() - started;
  return out;
}

double tsp_tour_cost(const TspInstance& tsp, std::span<const int> tour) {
  double cost = 0.0;
  for (std::size_t k = 0; k < tour.size(); ++k) cost += tsp.cost(tour[k], tour[(k + 1) % tour.size()]);
  return cost;
}

TspSolution brute_force_tsp(const TspInstance& tsp, int guard) {
  const int m = tsp.num_cities();
  if (m < 3) throw ParameterError("brute_force_tsp: at least 3 cities required");
  if (m > guard) {
    throw GuardError("TSP brute force refused: m = " + std::to_string(m) + " exceeds guard " +
                         std::to_string(guard),
                     static_cast<std::size_t>(guard));
  }
  std::vector<int> tour(static_cast<std::size_t>(m));
  std::iota(tour.begin(), tour.end(), 0);
  TspSolution best{tour, std::numeric_limits<double>::infinity()};
  do {
    const double c = tsp_tour_cost(tsp, tour);
    if (c < best.cost) best = {tour, c};
  } while (std::next_permutation(tour.begin() + 1, tour.end()));
  best.tour = canonical_tsp_tour(best.tour);
  return best;
}

}  // namespace setp
