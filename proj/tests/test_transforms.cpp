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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "setp/core.hpp"
#include "setp/eval.hpp"
#include "setp/graph.hpp"
#include "setp/solvers.hpp"
#include "setp/transforms.hpp"

using namespace setp;

TEST_CASE("embed_depot") {
  const Multigraph k3 = testing::triangle();
  const Eigen::Vector3d len(1, 2, 3);
  const DepotEmbedding once = embed_depot(k3, len, 0);
  CHECK(once.weighted.graph.num_vertices() == 4);
  CHECK(once.weighted.graph.num_edges() == 5);
  CHECK(once.depot == 3);
  CHECK(once.weighted.graph.degree(once.depot) == 2);
  CHECK(once.weighted.graph.degree(0) == 4);
  CHECK(once.weighted.length.head(3) == len);
  CHECK(once.weighted.length.tail(2).isZero());
  CHECK(is_eulerian(once.weighted.graph));

  const DepotEmbedding twice = embed_depot(once.weighted.graph, once.weighted.length, once.depot);
  CHECK(twice.weighted.graph.num_vertices() == 5);
  CHECK(twice.weighted.graph.num_edges() == 7);
  CHECK(is_eulerian(twice.weighted.graph));

  CHECK_THROWS_AS(embed_depot(k3, len, 3), StructuralError);
}

TEST_CASE("simplify structure") {
  // doubled triangle, R = one (0,1) edge, depot at 2
  const OriginalInstance inst = make_original(testing::doubled_triangle(), testing::doubled_triangle_lengths(), 2,
                                              {0}, Eigen::VectorXd::Constant(1, 0.4));
  const Reduction red = simplify(inst, 1e-6);
  CHECK(red.instance.num_required() == 2);
  CHECK(red.instance.num_vertices() == 4);
  CHECK(validate_simplified(red.instance).empty());
  CHECK(red.instance.matching[0] == RequiredPair{0, 1});
  CHECK(red.instance.prob(0) == 1.0);
  CHECK(red.instance.prob(1) == 0.4);
  CHECK(red.instance.distance(0, 1) == 1e-6);
  CHECK(red.map.required_origin == std::vector<int>{-1, 0});
  CHECK(red.map.vertex_origin == std::vector<int>{inst.depot, inst.depot, 0, 1});
  // depot copy 0 at vertex 2: SP(2,0) = 3, SP(2,1) = 2
  CHECK(red.instance.distance(0, 2) == 3.0);
  CHECK(red.instance.distance(0, 3) == 2.0);
  CHECK(red.instance.distance(1, 3) == 2.0 + 1e-6);

  CHECK_THROWS_AS(simplify(inst, 0.0), ParameterError);
  CHECK_THROWS_AS(simplify(inst, -1.0), ParameterError);
  auto broken = inst;
  broken.prob(0) = 2.0;
  CHECK_THROWS_AS(simplify(broken, 1e-6), StructuralError);
}

TEST_CASE("simplify splits shared endpoints into co-located copies") {
  // required edges (0,1) and (1,2) share vertex 1
  const OriginalInstance inst = make_original(testing::doubled_triangle(), testing::doubled_triangle_lengths(), 0,
                                              {0, 1}, Eigen::Vector2d(0.5, 0.5));
  const Reduction red = simplify(inst, 1e-6);
  CHECK(red.instance.num_vertices() == 6);
  CHECK(validate_simplified(red.instance).empty());
  // copies of vertex 1: head of edge 1 (vertex 3) and tail of edge 2 (vertex 4)
  CHECK(red.map.vertex_origin[3] == 1);
  CHECK(red.map.vertex_origin[4] == 1);
  CHECK(red.instance.distance(3, 4) == 0.0);
}

TEST_CASE("simplify distances: shortest paths off the matching, edge lengths on it") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = gen_random_original(3 + static_cast<int>(seed % 4), 8, 1 + static_cast<int>(seed % 5), seed);
    const double eps = 1e-6;
    const Reduction red = simplify(inst, eps);
    const Eigen::MatrixXd sp = all_pairs_shortest_paths(inst.graph, inst.length);
    const auto& d = red.instance.distance;
    for (int x = 0; x < d.rows(); ++x) {
      for (int y = 0; y < d.cols(); ++y) {
        if (x == y) continue;
        const double base = sp(red.map.vertex_origin[static_cast<std::size_t>(x)],
                               red.map.vertex_origin[static_cast<std::size_t>(y)]) +
                            ((x == 1 || y == 1) ? eps : 0.0);
        const bool matched = x / 2 == y / 2 && x >= 2;
        if (matched) {
          const int k = x / 2 - 1;
          CHECK(d(x, y) == inst.length(inst.required[static_cast<std::size_t>(k)]));
          CHECK(d(x, y) >= base);
        } else {
          CHECK(d(x, y) == doctest::Approx(base).epsilon(1e-15));
        }
      }
    }
  }
}

TEST_CASE("simplify output is metric when required edges are shortest paths") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = gen_random_original(3 + static_cast<int>(seed % 4), 8, 1 + static_cast<int>(seed % 5), seed);
    inst.length.head(inst.graph.num_edges() - 2).setOnes();  // depot edges stay 0
    const Reduction red = simplify(inst, 1e-3);
    CHECK(triangle_defect(red.instance.distance) <= 1e-12);
  }
}

TEST_CASE("simplify preserves expected cost over every Eulerian tour") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int e = 3 + static_cast<int>(seed % 4);  // at most 8 edges with the depot
    const auto inst = gen_random_original(3, e, 1 + static_cast<int>(seed % static_cast<std::uint64_t>(e)), seed);
    const double eps = default_epsilon(inst);
    const Reduction red = simplify(inst, eps);
    const auto tours = enumerate_eulerian_tours(inst.graph, inst.depot);
    REQUIRE_FALSE(tours.empty());
    for (const EulerianTour& tour : tours) {
      const AprioriOrder order = to_simplified_order(induced_order(tour, inst), red.map);
      CHECK(order == canonicalize(order));
      const double simplified = closed_form_value(order, red.instance);
      const double direct = expected_cost_original_direct(tour, inst);
      CHECK(std::abs(simplified - direct) <= red.instance.num_required() * eps + 1e-9);
    }
  }
}

TEST_CASE("to_simplified_order prepends the depot edge") {
  VertexMap map{Source::kOriginal, {0, 0, 1, 2, 2, 0, 1, 2}, {-1, 0, 1, 2}};
  const AprioriOrder order = to_simplified_order(AprioriOrder{{2, 0, 1}, {0, 1, 0}}, map);
  CHECK(order.sequence == std::vector<int>{0, 3, 1, 2});
  CHECK(order.orient == std::vector<std::uint8_t>{0, 0, 1, 0});
  CHECK_THROWS_AS(to_simplified_order(identity_order(2), map), StructuralError);
}

TEST_CASE("tsp_to_setp on a unit triangle: every order costs 3 + 3 eps") {
  const TspInstance tsp{Eigen::Matrix3d::Ones() - Eigen::Matrix3d::Identity()};
  const double eps = 1e-6;
  const Reduction red = tsp_to_setp(tsp, eps);
  CHECK(red.instance.num_vertices() == 6);
  CHECK(red.instance.num_required() == 3);
  CHECK(red.instance.prob == Eigen::Vector3d::Ones());
  CHECK(validate_simplified(red.instance).empty());

  std::vector<int> seq{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      AprioriOrder order{seq, {static_cast<std::uint8_t>(mask & 1), static_cast<std::uint8_t>(mask >> 1 & 1),
                               static_cast<std::uint8_t>(mask >> 2 & 1)}};
      CHECK(enumeration_value(order, red.instance) == doctest::Approx(3.0 + 3e-6).epsilon(1e-15));
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("tsp_to_setp guards") {
  CHECK_THROWS_AS(tsp_to_setp(TspInstance{Eigen::MatrixXd::Zero(1, 1)}, 1e-6), ParameterError);
  CHECK_THROWS_AS(tsp_to_setp(TspInstance{Eigen::MatrixXd::Zero(2, 2)}, 1e-6), ParameterError);
  CHECK_THROWS_AS(tsp_to_setp(gen_random_tsp(4, 1), 0.0), ParameterError);
  TspInstance asym = gen_random_tsp(4, 1);
  asym.cost(0, 1) += 1.0;
  CHECK_THROWS_AS(tsp_to_setp(asym, 1e-6), StructuralError);
}

TEST_CASE("gadget optimum tracks the TSP optimum") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int m = 3 + static_cast<int>(seed % 5);
    const TspInstance tsp = gen_random_tsp(m, seed);
    const double eps = default_epsilon(tsp);
    const Reduction red = tsp_to_setp(tsp, eps);
    const SolveResult setp_opt = brute_force(red.instance);
    const TspSolution tsp_opt = brute_force_tsp(tsp);
    CHECK(std::abs(setp_opt.cost.value - (tsp_opt.cost + m * eps)) <= m * eps);
    CHECK(canonical_tsp_tour(lift_to_tsp_tour(setp_opt.order, red.map)) == tsp_opt.tour);
  }
}

TEST_CASE("lift_to_tsp_tour") {
  const Reduction red = tsp_to_setp(gen_random_tsp(3, 4), 1e-6);
  CHECK(lift_to_tsp_tour(AprioriOrder{{0, 2, 1}, {0, 0, 0}}, red.map) == std::vector<int>{0, 2, 1});
  // orientation does not change the city sequence
  CHECK(lift_to_tsp_tour(AprioriOrder{{0, 2, 1}, {1, 0, 1}}, red.map) == std::vector<int>{0, 2, 1});

  VertexMap not_gadget = red.map;
  not_gadget.source = Source::kOriginal;
  CHECK_THROWS_AS(lift_to_tsp_tour(identity_order(3), not_gadget), StructuralError);
  CHECK_THROWS_AS(lift_to_tsp_tour(identity_order(4), red.map), StructuralError);
}

TEST_CASE("lift inverts inject on every undirected tour") {
  for (int m = 3; m <= 6; ++m) {
    const TspInstance tsp = gen_random_tsp(m, static_cast<std::uint64_t>(m));
    const double eps = 1e-6;
    const Reduction red = tsp_to_setp(tsp, eps);
    std::vector<int> tour(static_cast<std::size_t>(m));
    std::iota(tour.begin(), tour.end(), 0);
    int count = 0;
    do {
      if (tour[1] > tour.back()) continue;
      ++count;
      const AprioriOrder order = inject_tsp_tour(tour, red.map);
      CHECK(canonical_tsp_tour(lift_to_tsp_tour(order, red.map)) == canonical_tsp_tour(tour));
      CHECK(std::abs(tsp_tour_cost(tsp, tour) - (closed_form_value(order, red.instance) - m * eps)) <= 1e-9);
    } while (std::next_permutation(tour.begin() + 1, tour.end()));
    int expected = 1;
    for (int k = 3; k < m; ++k) expected *= k;  // (m-1)!/2
    CHECK(count == expected);
  }
}

TEST_CASE("canonical_tsp_tour") {
  CHECK(canonical_tsp_tour(std::vector<int>{2, 0, 3, 1}) == std::vector<int>{0, 2, 1, 3});
  CHECK(canonical_tsp_tour(std::vector<int>{0, 1, 2, 3}) == std::vector<int>{0, 1, 2, 3});
  CHECK(canonical_tsp_tour(std::vector<int>{1, 0, 2}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("gen_random_eulerian") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int v = 3 + static_cast<int>(seed % 6);
    const int e = v + static_cast<int>(seed % 5);
    const WeightedGraph wg = gen_random_eulerian(v, e, seed);
    CHECK(wg.graph.num_edges() == e);
    CHECK(wg.graph.num_vertices() == v);
    CHECK(is_eulerian(wg.graph));
    CHECK((wg.length.array() >= 0.0).all());
    CHECK((wg.length.array() < 1.0).all());
    for (int x = 0; x < v; ++x) CHECK(wg.graph.degree(x) > 0);
  }
  const auto a = gen_random_eulerian(5, 9, 42);
  const auto b = gen_random_eulerian(5, 9, 42);
  CHECK(std::equal(a.graph.edges().begin(), a.graph.edges().end(), b.graph.edges().begin()));
  CHECK(a.length == b.length);
  CHECK_THROWS_AS(gen_random_eulerian(2, 4, 0), ParameterError);
  CHECK_THROWS_AS(gen_random_eulerian(5, 4, 0), ParameterError);
}

TEST_CASE("gen_random_original sweep") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = gen_random_original(6, 10, 1 + static_cast<int>(seed % 10), seed);
    CHECK(validate_original(inst).empty());
    CHECK(inst.graph.degree(inst.depot) == 2);
    for (int id : inst.required) CHECK(id < 10);
  }
  CHECK_THROWS_AS(gen_random_original(6, 10, 0, 1), ParameterError);
  CHECK_THROWS_AS(gen_random_original(6, 10, 11, 1), ParameterError);
}

TEST_CASE("gen_random_simplified") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto metric = gen_random_simplified(6, seed, true);
    CHECK(triangle_defect(metric.distance) == 0.0);
    CHECK(validate_simplified(metric).empty());
  }
  const auto a = gen_random_simplified(5, 7, false);
  const auto b = gen_random_simplified(5, 7, false);
  CHECK(a.distance == b.distance);
  CHECK(a.matching == b.matching);
  CHECK(a.prob == b.prob);
  CHECK(gen_random_simplified(5, 8, false).distance != a.distance);
}
