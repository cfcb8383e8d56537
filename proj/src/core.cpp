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

#include "setp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "setp/graph.hpp"

namespace setp {

Multigraph::Multigraph(int num_vertices) {
  if (num_vertices < 0) throw ParameterError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
}

int Multigraph::add_vertex() {
  adjacency_.emplace_back();
  return num_vertices() - 1;
}

int Multigraph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw StructuralError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                          std::to_string(v) + ")");
  }
  const int id = num_edges();
  edges_.push_back({u, v});
  adjacency_[static_cast<std::size_t>(u)].push_back({id, v});
  adjacency_[static_cast<std::size_t>(v)].push_back({id, u});
  return id;
}

std::string_view to_string(Invariant invariant) {
  switch (invariant) {
    case Invariant::kOddDegree: return "odd-degree";
    case Invariant::kDisconnected: return "disconnected";
    case Invariant::kSelfLoop: return "self-loop";
    case Invariant::kNegativeLength: return "negative-length";
    case Invariant::kNonFinite: return "non-finite";
    case Invariant::kShape: return "shape";
    case Invariant::kProbabilityRange: return "probability-range";
    case Invariant::kDepotMissing: return "depot-missing";
    case Invariant::kRequiredNotEdge: return "required-not-edge";
    case Invariant::kRequiredDuplicate: return "required-duplicate";
    case Invariant::kRequiredEmpty: return "required-empty";
    case Invariant::kSymmetry: return "symmetry";
    case Invariant::kDiagonal: return "diagonal";
    case Invariant::kMatchingCover: return "matching-cover";
  }
  return "unknown";
}

std::string describe(const Violation& violation) {
  return std::string(to_string(violation.invariant)) + ": " + violation.element;
}

std::vector<Violation> validate_original(const OriginalInstance& inst) {
  std::vector<Violation> out;
  const Multigraph& g = inst.graph;

  for (int id = 0; id < g.num_edges(); ++id) {
    if (g.edge(id).u == g.edge(id).v) {
      out.push_back({Invariant::kSelfLoop, "edge " + std::to_string(id)});
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) % 2 != 0) {
      out.push_back({Invariant::kOddDegree, "vertex " + std::to_string(v)});
    }
  }
  if (!is_edge_connected(g)) out.push_back({Invariant::kDisconnected, "graph"});

  if (inst.length.size() != g.num_edges()) {
    out.push_back({Invariant::kShape, "length vector has " + std::to_string(inst.length.size()) +
                                          " entries for " + std::to_string(g.num_edges()) + " edges"});
  } else {
    for (int id = 0; id < g.num_edges(); ++id) {
      const double len = inst.length(id);
      if (!std::isfinite(len)) {
        out.push_back({Invariant::kNonFinite, "length of edge " + std::to_string(id)});
      } else if (len < 0.0) {
        out.push_back({Invariant::kNegativeLength, "edge " + std::to_string(id)});
      }
    }
  }

  if (!g.has_vertex(inst.depot)) {
    out.push_back({Invariant::kDepotMissing, "depot " + std::to_string(inst.depot)});
  }

  if (inst.required.empty()) out.push_back({Invariant::kRequiredEmpty, "required"});
  std::vector<int> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (int id : inst.required) {
    if (id < 0 || id >= g.num_edges()) {
      out.push_back({Invariant::kRequiredNotEdge, "edge " + std::to_string(id)});
    } else if (seen[static_cast<std::size_t>(id)]++ == 1) {
      out.push_back({Invariant::kRequiredDuplicate, "edge " + std::to_string(id)});
    }
  }

  if (inst.prob.size() != inst.num_required()) {
    out.push_back({Invariant::kShape, "probability vector has " + std::to_string(inst.prob.size()) +
                                          " entries for " + std::to_string(inst.num_required()) +
                                          " required edges"});
  }
  for (Eigen::Index k = 0; k < inst.prob.size(); ++k) {
    const double p = inst.prob(k);
    if (!(p >= 0.0 && p <= 1.0)) {
      out.push_back({Invariant::kProbabilityRange, "required edge " + std::to_string(k)});
    }
  }
  return out;
}

std::string check_tour(const EulerianTour& tour, const Multigraph& g) {
  if (!g.has_vertex(tour.start)) return "start vertex out of range";
  if (static_cast<int>(tour.steps.size()) != g.num_edges()) {
    return "tour has " + std::to_string(tour.steps.size()) + " steps for " +
           std::to_string(g.num_edges()) + " edges";
  }
  std::vector<bool> used(static_cast<std::size_t>(g.num_edges()), false);
  int at = tour.start;
  for (std::size_t k = 0; k < tour.steps.size(); ++k) {
    const TourStep& s = tour.steps[k];
    if (s.edge < 0 || s.edge >= g.num_edges()) return "step " + std::to_string(k) + ": unknown edge";
    if (used[static_cast<std::size_t>(s.edge)]) {
      return "edge " + std::to_string(s.edge) + " used twice";
    }
    used[static_cast<std::size_t>(s.edge)] = true;
    if (step_from(g, s) != at) return "step " + std::to_string(k) + ": discontinuity";
    at = step_to(g, s);
  }
  if (at != tour.start) return "tour is not closed";
  return {};
}

bool is_valid_order(const AprioriOrder& order, int n) {
  if (order.size() != n || static_cast<int>(order.orient.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int e : order.sequence) {
    if (e < 0 || e >= n || seen[static_cast<std::size_t>(e)]) return false;
    seen[static_cast<std::size_t>(e)] = true;
  }
  return std::all_of(order.orient.begin(), order.orient.end(), [](std::uint8_t b) { return b <= 1; });
}

AprioriOrder identity_order(int n) {
  AprioriOrder order;
  order.sequence.resize(static_cast<std::size_t>(n));
  std::iota(order.sequence.begin(), order.sequence.end(), 0);
  order.orient.assign(static_cast<std::size_t>(n), 0);
  return order;
}

AprioriOrder canonicalize(const AprioriOrder& order) {
  AprioriOrder out = order;
  auto zero = std::find(out.sequence.begin(), out.sequence.end(), 0);
  if (zero != out.sequence.end()) std::rotate(out.sequence.begin(), zero, out.sequence.end());
  return out;
}

AprioriOrder induced_order(const EulerianTour& tour, const OriginalInstance& inst) {
  if (const std::string problem = check_tour(tour, inst.graph); !problem.empty()) {
    throw StructuralError("invalid Eulerian tour: " + problem);
  }
  if (tour.start != inst.depot) throw StructuralError("tour does not start at the depot");

  std::vector<int> index_of(static_cast<std::size_t>(inst.graph.num_edges()), -1);
  for (int k = 0; k < inst.num_required(); ++k) {
    index_of[static_cast<std::size_t>(inst.required[static_cast<std::size_t>(k)])] = k;
  }

  AprioriOrder order;
  order.orient.assign(inst.required.size(), 0);
  for (const TourStep& s : tour.steps) {
    const int k = index_of[static_cast<std::size_t>(s.edge)];
    if (k < 0) continue;
    order.sequence.push_back(k);
    order.orient[static_cast<std::size_t>(k)] = s.reversed ? 1 : 0;
  }
  return order;
}

}  // namespace setp
