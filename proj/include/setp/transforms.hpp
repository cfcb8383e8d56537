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

#ifndef SETP_TRANSFORMS_HPP
#define SETP_TRANSFORMS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "setp/types.hpp"

namespace setp {

struct WeightedGraph {
  Multigraph graph;
  Eigen::VectorXd length;  // indexed by edge id
};

struct DepotEmbedding {
  WeightedGraph weighted;
  int depot = 0;  // the new duplicate vertex
};

/// Adds a duplicate of `depot` joined to it by two parallel zero-length edges.
/// The duplicate gets the next vertex id, the two edges the next edge ids.
DepotEmbedding embed_depot(const Multigraph& g, const Eigen::VectorXd& length, int depot);

/// Builds an OriginalInstance over `g` with the depot duplicated.
/// `required` lists edge ids of `g`; they keep their ids in the result.
OriginalInstance make_original(const Multigraph& g, const Eigen::VectorXd& length, int depot,
                               std::vector<int> required, Eigen::VectorXd prob);

enum class Source { kOriginal, kTsp };

/// Where each simplified vertex and required edge came from.
struct VertexMap {
  Source source = Source::kOriginal;
  /// Original vertex (or TSP city) of each simplified vertex.
  std::vector<int> vertex_origin;
  /// Original required-edge index (or TSP city) of each simplified required
  /// edge; -1 marks the depot edge.
  std::vector<int> required_origin;
};

struct Reduction {
  SimplifiedInstance instance;
  VertexMap map;
  double epsilon = 0.0;
};

/// 1e-6 times the smallest positive distance (1e-6 if there is none).
double default_epsilon(const OriginalInstance& inst);
double default_epsilon(const TspInstance& tsp);
double default_epsilon(const SimplifiedInstance& inst);

/// Reduces an original instance to the simplified form.
///
/// Required edge k becomes simplified edge k + 1 between private copies of
/// its endpoints, so shared endpoints end up as co-located copies. Simplified
/// edge 0 is the depot: vertex 0 sits at the depot and vertex 1 hangs off it
/// at distance `epsilon`, served with probability 1. All other distances are
/// shortest-path distances of the original graph, except that a required
/// edge's own pair keeps the edge's length, since serving means traversing
/// that edge.
///
/// Throws StructuralError for an invalid instance, ParameterError for
/// epsilon <= 0.
Reduction simplify(const OriginalInstance& inst, double epsilon);

/// Prepends the depot edge to an order over the original required edges.
AprioriOrder to_simplified_order(const AprioriOrder& original_order, const VertexMap& map);

/// Each city i becomes vertices (2i, 2i+1) at distance epsilon, joined by a
/// required edge with probability 1; other distances are city costs.
/// Throws ParameterError for epsilon <= 0 or fewer than 3 cities.
Reduction tsp_to_setp(const TspInstance& tsp, double epsilon);

/// City sequence read off an order over a TSP gadget instance.
/// Throws StructuralError if `map` does not describe a gadget.
std::vector<int> lift_to_tsp_tour(const AprioriOrder& order, const VertexMap& map);

/// Gadget order visiting cities in `tour` order, every edge forward.
AprioriOrder inject_tsp_tour(std::span<const int> tour, const VertexMap& map);

/// Rotates a city tour to start at city 0 and picks the direction whose
/// second city is smaller, so equal undirected tours compare equal.
std::vector<int> canonical_tsp_tour(std::span<const int> tour);

/// Connected Eulerian multigraph with exactly `e` edges on `v` vertices and
/// lengths uniform in [0, 1). Edges are read off a random closed walk of
/// length e that visits every vertex, so parity and connectivity hold by
/// construction. Throws ParameterError unless v >= 3 and e >= v.
WeightedGraph gen_random_eulerian(int v, int e, std::uint64_t seed);

/// Random Eulerian graph, random depot, `n` random required edges (never the
/// depot's own edges) with uniform probabilities.
OriginalInstance gen_random_original(int v, int e, int n, std::uint64_t seed);

/// Uniform symmetric distances, random perfect matching, uniform
/// probabilities. `metric` replaces the distances by their shortest-path
/// closure.
SimplifiedInstance gen_random_simplified(int n, std::uint64_t seed, bool metric);

/// Uniformly random order and orientations over n edges.
AprioriOrder gen_random_order(int n, std::uint64_t seed);

/// Uniform symmetric costs in [0, 1).
TspInstance gen_random_tsp(int m, std::uint64_t seed);

}  // namespace setp

#endif  // SETP_TRANSFORMS_HPP
