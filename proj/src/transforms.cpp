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

#include "setp/transforms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "setp/core.hpp"
#include "setp/graph.hpp"
#include "setp/random.hpp"

namespace setp {

DepotEmbedding embed_depot(const Multigraph& g, const Eigen::VectorXd& length, int depot) {
  if (!g.has_vertex(depot)) throw StructuralError("embed_depot: depot " + std::to_string(depot) + " absent");
  if (length.size() != g.num_edges()) throw StructuralError("embed_depot: one length per edge required");

  DepotEmbedding out{{g, Eigen::VectorXd::Zero(g.num_edges() + 2)}, 0};
  out.weighted.length.head(g.num_edges()) = length;
  out.depot = out.weighted.graph.add_vertex();
  out.weighted.graph.add_edge(depot, out.depot);
  out.weighted.graph.add_edge(out.depot, depot);
  return out;
}

OriginalInstance make_original(const Multigraph& g, const Eigen::VectorXd& length, int depot,
                               std::vector<int> required, Eigen::VectorXd prob) {
  DepotEmbedding emb = embed_depot(g, length, depot);
  return {std::move(emb.weighted.graph), std::move(emb.weighted.length), emb.depot, std::move(required),
          std::move(prob)};
}

namespace {

template <typename Derived>
double smallest_positive(const Eigen::DenseBase<Derived>& values) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double x = values.reshaped()(i);
    if (x > 0.0 && x < best) best = x;
  }
  return std::isfinite(best) ? 1e-6 * best : 1e-6;
}

void throw_if_invalid(const std::vector<Violation>& violations, const char* what) {
  if (violations.empty()) return;
  std::string msg = std::string(what) + ": invalid instance (" + describe(violations.front());
  if (violations.size() > 1) msg += ", and " + std::to_string(violations.size() - 1) + " more";
  throw StructuralError(msg + ")");
}

}  // namespace

double default_epsilon(const OriginalInstance& inst) { return smallest_positive(inst.length); }
double default_epsilon(const TspInstance& tsp) { return smallest_positive(tsp.cost); }
double default_epsilon(const SimplifiedInstance& inst) { return smallest_positive(inst.distance); }

Reduction simplify(const OriginalInstance& inst, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("simplify: epsilon must be positive");
  throw_if_invalid(validate_original(inst), "simplify");

  const Eigen::MatrixXd shortest = all_pairs_shortest_paths(inst.graph, inst.length);
  const int n = inst.num_required() + 1;

  Reduction out;
  out.epsilon = epsilon;
  out.map.source = Source::kOriginal;
  out.map.vertex_origin.resize(static_cast<std::size_t>(2 * n));
  out.map.required_origin.resize(static_cast<std::size_t>(n));

  out.map.vertex_origin[0] = inst.depot;
  out.map.vertex_origin[1] = inst.depot;
  out.map.required_origin[0] = -1;
  for (int k = 0; k < inst.num_required(); ++k) {
    const Edge& e = inst.graph.edge(inst.required[static_cast<std::size_t>(k)]);
    out.map.vertex_origin[static_cast<std::size_t>(2 * (k + 1))] = e.u;
    out.map.vertex_origin[static_cast<std::size_t>(2 * (k + 1) + 1)] = e.v;
    out.map.required_origin[static_cast<std::size_t>(k + 1)] = k;
  }

  SimplifiedInstance& s = out.instance;
  s.distance.resize(2 * n, 2 * n);
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      s.distance(x, y) = x == y ? 0.0
                                : shortest(out.map.vertex_origin[static_cast<std::size_t>(x)],
                                           out.map.vertex_origin[static_cast<std::size_t>(y)]);
    }
  }
  // pendant depot copy
  for (int y = 0; y < 2 * n; ++y) {
    if (y == 1) continue;
    s.distance(1, y) += epsilon;
    s.distance(y, 1) = s.distance(1, y);
  }

  s.matching.resize(static_cast<std::size_t>(n));
  s.prob.resize(n);
  s.matching[0] = {0, 1};
  s.prob(0) = 1.0;
  for (int k = 0; k < inst.num_required(); ++k) {
    const int tail = 2 * (k + 1);
    const int head = tail + 1;
    s.matching[static_cast<std::size_t>(k + 1)] = {tail, head};
    s.prob(k + 1) = inst.prob(k);
    s.distance(tail, head) = s.distance(head, tail) = inst.length(inst.required[static_cast<std::size_t>(k)]);
  }
  return out;
}

AprioriOrder to_simplified_order(const AprioriOrder& original_order, const VertexMap& map) {
  const int n = static_cast<int>(map.required_origin.size());
  if (map.source != Source::kOriginal || n == 0 || map.required_origin[0] != -1 ||
      original_order.size() != n - 1) {
    throw StructuralError("to_simplified_order: order does not match the reduction");
  }
  // required_origin is k -> k - 1 for k >= 1 as built by simplify
  AprioriOrder out;
  out.sequence.reserve(static_cast<std::size_t>(n));
  out.orient.assign(static_cast<std::size_t>(n), 0);
  out.sequence.push_back(0);
  for (int e : original_order.sequence) {
    if (e < 0 || e >= n - 1) throw StructuralError("to_simplified_order: edge index out of range");
    out.sequence.push_back(e + 1);
    out.orient[static_cast<std::size_t>(e + 1)] = original_order.orient[static_cast<std::size_t>(e)];
  }
  return out;
}

Reduction tsp_to_setp(const TspInstance& tsp, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("tsp_to_setp: epsilon must be positive");
  const int m = tsp.num_cities();
  if (m < 3) throw ParameterError("tsp_to_setp: at least 3 cities required");
  throw_if_invalid(validate_tsp(tsp), "tsp_to_setp");

  Reduction out;
  out.epsilon = epsilon;
  out.map.source = Source::kTsp;
  SimplifiedInstance& s = out.instance;
  s.distance.resize(2 * m, 2 * m);
  for (int x = 0; x < 2 * m; ++x) {
    for (int y = 0; y < 2 * m; ++y) {
      s.distance(x, y) = x == y ? 0.0 : x / 2 == y / 2 ? epsilon : tsp.cost(x / 2, y / 2);
    }
  }
  s.prob = Eigen::VectorXd::Ones(m);
  for (int i = 0; i < m; ++i) {
    s.matching.push_back({2 * i, 2 * i + 1});
    out.map.required_origin.push_back(i);
    out.map.vertex_origin.push_back(i);
    out.map.vertex_origin.push_back(i);
  }
  return out;
}

namespace {

void check_gadget(const VertexMap& map) {
  const auto m = map.required_origin.size();
  bool ok = map.source == Source::kTsp && m >= 3 && map.vertex_origin.size() == 2 * m;
  for (std::size_t i = 0; ok && i < m; ++i) {
    ok = map.required_origin[i] == static_cast<int>(i) && map.vertex_origin[2 * i] == static_cast<int>(i) &&
         map.vertex_origin[2 * i + 1] == static_cast<int>(i);
  }
  if (!ok) throw StructuralError("vertex map does not describe a TSP gadget");
}

}  // namespace

std::vector<int> lift_to_tsp_tour(const AprioriOrder& order, const VertexMap& map) {
  check_gadget(map);
  if (!is_valid_order(order, static_cast<int>(map.required_origin.size()))) {
    throw StructuralError("lift_to_tsp_tour: order does not match the gadget");
  }
  std::vector<int> cities;
  cities.reserve(order.sequence.size());
  for (int e : order.sequence) cities.push_back(map.required_origin[static_cast<std::size_t>(e)]);
  return cities;
}

AprioriOrder inject_tsp_tour(std::span<const int> tour, const VertexMap& map) {
  check_gadget(map);
  const int m = static_cast<int>(map.required_origin.size());
  AprioriOrder order;
  order.sequence.assign(tour.begin(), tour.end());
  order.orient.assign(static_cast<std::size_t>(m), 0);
  if (!is_valid_order(order, m)) throw StructuralError("inject_tsp_tour: not a permutation of the cities");
  return order;
}

std::vector<int> canonical_tsp_tour(std::span<const int> tour) {
  std::vector<int> out(tour.begin(), tour.end());
  if (out.size() < 3) return out;
  auto zero = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), zero, out.end());
  if (out[1] > out.back()) std::reverse(out.begin() + 1, out.end());
  return out;
}

WeightedGraph gen_random_eulerian(int v, int e, std::uint64_t seed) {
  if (v < 3 || e < v) throw ParameterError("gen_random_eulerian: need v >= 3 and e >= v");
  Engine rng = make_stream(seed, 0);

  std::vector<int> walk(static_cast<std::size_t>(v));
  std::iota(walk.begin(), walk.end(), 0);
  shuffle(walk.begin(), walk.end(), rng);
  while (static_cast<int>(walk.size()) < e) {
    const bool last = static_cast<int>(walk.size()) == e - 1;
    int next;
    do {
      next = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v)));
    } while (next == walk.back() || (last && next == walk.front()));
    walk.push_back(next);
  }

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < walk.size(); ++k) edges.push_back({walk[k], walk[(k + 1) % walk.size()]});
  shuffle(edges.begin(), edges.end(), rng);

  WeightedGraph out{Multigraph(v), Eigen::VectorXd(e)};
  for (const Edge& edge : edges) out.graph.add_edge(edge.u, edge.v);
  for (int id = 0; id < e; ++id) out.length(id) = uniform01(rng);
  return out;
}

OriginalInstance gen_random_original(int v, int e, int n, std::uint64_t seed) {
  if (n < 1 || n > e) throw ParameterError("gen_random_original: need 1 <= n <= e");
  WeightedGraph wg = gen_random_eulerian(v, e, seed);
  Engine rng = make_stream(seed, 1);
  const int depot = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v)));
  std::vector<int> ids(static_cast<std::size_t>(e));
  std::iota(ids.begin(), ids.end(), 0);
  shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(n));
  Eigen::VectorXd prob(n);
  for (int k = 0; k < n; ++k) prob(k) = uniform01(rng);
  return make_original(wg.graph, wg.length, depot, std::move(ids), std::move(prob));
}

SimplifiedInstance gen_random_simplified(int n, std::uint64_t seed, bool metric) {
  if (n < 1) throw ParameterError("gen_random_simplified: need n >= 1");
  Engine rng = make_stream(seed, 2);
  SimplifiedInstance inst;
  inst.distance = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) inst.distance(i, j) = inst.distance(j, i) = uniform01(rng);
  }
  if (metric) metric_closure_in_place(inst.distance);

  std::vector<int> vertices(static_cast<std::size_t>(2 * n));
  std::iota(vertices.begin(), vertices.end(), 0);
  shuffle(vertices.begin(), vertices.end(), rng);
  for (int k = 0; k < n; ++k) {
    inst.matching.push_back({vertices[static_cast<std::size_t>(2 * k)], vertices[static_cast<std::size_t>(2 * k + 1)]});
  }
  inst.prob.resize(n);
  for (int k = 0; k < n; ++k) inst.prob(k) = uniform01(rng);
  return inst;
}

AprioriOrder gen_random_order(int n, std::uint64_t seed) {
  Engine rng = make_stream(seed, 5);
  AprioriOrder order = identity_order(n);
  shuffle(order.sequence.begin(), order.sequence.end(), rng);
  for (auto& bit : order.orient) bit = static_cast<std::uint8_t>(rng() >> 63);
  return order;
}

TspInstance gen_random_tsp(int m, std::uint64_t seed) {
  if (m < 3) throw ParameterError("gen_random_tsp: need m >= 3");
  Engine rng = make_stream(seed, 3);
  TspInstance tsp{Eigen::MatrixXd::Zero(m, m)};
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) tsp.cost(i, j) = tsp.cost(j, i) = uniform01(rng);
  }
  return tsp;
}

}  // namespace setp
