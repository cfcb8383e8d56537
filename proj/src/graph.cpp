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

#include "setp/graph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <utility>

#include "setp/core.hpp"

namespace setp {

bool is_edge_connected(const Multigraph& g) {
  int root = -1;
  for (int v = 0; v < g.num_vertices() && root < 0; ++v) {
    if (g.degree(v) > 0) root = v;
  }
  if (root < 0) return true;

  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(v)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = true;
        stack.push_back(inc.neighbor);
      }
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0 && !seen[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

bool is_eulerian(const Multigraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return false;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return is_edge_connected(g);
}

namespace {

TourStep leave(const Multigraph& g, int from, int edge) {
  return {edge, g.edge(edge).u != from};
}

}  // namespace

EulerianTour hierholzer(const Multigraph& g, int start) {
  if (!is_eulerian(g)) throw StructuralError("hierholzer: graph is not Eulerian");
  if (!g.has_vertex(start) || g.degree(start) == 0) {
    throw StructuralError("hierholzer: start vertex has no incident edges");
  }

  std::vector<bool> used(static_cast<std::size_t>(g.num_edges()), false);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.num_vertices()), 0);
  // (vertex, step that reached it); the root carries edge -1
  std::vector<std::pair<int, TourStep>> stack{{start, TourStep{-1, false}}};
  std::vector<TourStep> circuit;
  circuit.reserve(static_cast<std::size_t>(g.num_edges()));

  while (!stack.empty()) {
    const int v = stack.back().first;
    const auto incident = g.incident(v);
    std::size_t& k = next[static_cast<std::size_t>(v)];
    while (k < incident.size() && used[static_cast<std::size_t>(incident[k].edge)]) ++k;
    if (k < incident.size()) {
      const Incidence inc = incident[k];
      used[static_cast<std::size_t>(inc.edge)] = true;
      stack.emplace_back(inc.neighbor, leave(g, v, inc.edge));
    } else {
      if (stack.back().second.edge >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  EulerianTour tour{start, std::move(circuit)};
  assert(check_tour(tour, g).empty());
  return tour;
}

namespace {

struct TourEnumerator {
  const Multigraph& g;
  int start;
  std::size_t limit;
  std::vector<bool> used;
  std::vector<TourStep> path;
  std::vector<EulerianTour> out;

  void extend(int v) {
    if (static_cast<int>(path.size()) == g.num_edges()) {
      if (v == start) {
        if (out.size() == limit) {
          throw GuardError("more than " + std::to_string(limit) + " Eulerian tours", limit);
        }
        out.push_back({start, path});
      }
      return;
    }
    for (const Incidence& inc : g.incident(v)) {
      if (used[static_cast<std::size_t>(inc.edge)]) continue;
      used[static_cast<std::size_t>(inc.edge)] = true;
      path.push_back(leave(g, v, inc.edge));
      extend(inc.neighbor);
      path.pop_back();
      used[static_cast<std::size_t>(inc.edge)] = false;
    }
  }
};

}  // namespace

std::vector<EulerianTour> enumerate_eulerian_tours(const Multigraph& g, int start, std::size_t limit) {
  if (!is_eulerian(g)) throw StructuralError("enumerate_eulerian_tours: graph is not Eulerian");
  if (!g.has_vertex(start)) throw StructuralError("enumerate_eulerian_tours: start out of range");
  if (g.num_edges() == 0) return {};
  TourEnumerator e{g, start, limit, std::vector<bool>(static_cast<std::size_t>(g.num_edges()), false),
                   {}, {}};
  e.path.reserve(static_cast<std::size_t>(g.num_edges()));
  e.extend(start);
  return std::move(e.out);
}

Eigen::MatrixXd all_pairs_shortest_paths(const Multigraph& g, const Eigen::VectorXd& length) {
  if (length.size() != g.num_edges()) {
    throw ParameterError("all_pairs_shortest_paths: one length per edge required");
  }
  const int n = g.num_vertices();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, kInf);
  d.diagonal().setZero();
  for (int id = 0; id < g.num_edges(); ++id) {
    const double len = length(id);
    if (!(len >= 0.0)) throw ParameterError("all_pairs_shortest_paths: negative edge length");
    const Edge& e = g.edge(id);
    if (e.u == e.v) continue;
    d(e.u, e.v) = std::min(d(e.u, e.v), len);
    d(e.v, e.u) = d(e.u, e.v);
  }
  metric_closure_in_place(d);
  return d;
}

}  // namespace setp
