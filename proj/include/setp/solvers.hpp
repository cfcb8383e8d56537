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

#ifndef SETP_SOLVERS_HPP
#define SETP_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "setp/eval.hpp"
#include "setp/types.hpp"

namespace setp {

struct SolveResult {
  AprioriOrder order;  // canonical
  ExpectedCost cost;   // closed form
  std::uint64_t evaluations = 0;
  std::chrono::duration<double> wall_time{0.0};
  /// Cost after each accepted move, starting with the initial cost
  /// (local search only).
  std::vector<double> trace;
};

inline constexpr int kBruteForceGuard = 9;

/// Exact minimum of the closed-form expected cost over all (n-1)! 2^n
/// canonical orders. Ties go to the lexicographically smallest
/// (sequence, orient). The search is split over `workers` threads (0: one
/// per hardware thread); the result does not depend on the split.
/// Throws GuardError when n exceeds `guard`.
SolveResult brute_force(const SimplifiedInstance& inst, int guard = kBruteForceGuard,
                        unsigned workers = 0);

/// Greedy chain from `start_edge` (served forward): repeatedly jump to the
/// closest endpoint of an unvisited edge, entering the edge there.
AprioriOrder nearest_neighbor(const SimplifiedInstance& inst, int start_edge = 0);

/// Best-improvement descent over segment reversals (2-opt; reversing a
/// segment also flips its edges) and single orientation flips. Stops at a
/// local optimum or once `budget` evaluations are spent. `seed` fixes the
/// scan order of moves, which decides between equally good moves.
SolveResult local_search(const SimplifiedInstance& inst, const AprioriOrder& init,
                         std::uint64_t budget, std::uint64_t seed);

struct TspSolution {
  std::vector<int> tour;  // canonical, see canonical_tsp_tour
  double cost = 0.0;
};

double tsp_tour_cost(const TspInstance& tsp, std::span<const int> tour);

inline constexpr int kTspBruteForceGuard = 11;

/// Exhaustive symmetric TSP with city 0 fixed first.
TspSolution brute_force_tsp(const TspInstance& tsp, int guard = kTspBruteForceGuard);

}  // namespace setp

#endif  // SETP_SOLVERS_HPP
