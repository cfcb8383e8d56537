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

#ifndef SETP_GRAPH_HPP
#define SETP_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "setp/types.hpp"

namespace setp {

/// True iff the graph has no self-loops, every vertex has even degree and the
/// vertices of nonzero degree form a single connected component.
bool is_eulerian(const Multigraph& g);

/// True iff the vertices of nonzero degree are connected.
bool is_edge_connected(const Multigraph& g);

/// Hierholzer's algorithm. Always leaves a vertex through its smallest unused
/// edge id, so the result depends only on the graph.
/// Throws StructuralError if the graph is not Eulerian or `start` is isolated.
EulerianTour hierholzer(const Multigraph& g, int start);

/// Every Eulerian tour starting at `start`, in lexicographic order of
/// (edge id, direction) choices. Parallel edges give distinct tours.
/// Throws GuardError if more than `limit` tours exist.
std::vector<EulerianTour> enumerate_eulerian_tours(const Multigraph& g, int start,
                                                   std::size_t limit = 100000);

/// In-place Floyd-Warshall closure of a square distance matrix.
template <typename Derived>
void metric_closure_in_place(Eigen::MatrixBase<Derived>& d) {
  const Eigen::Index n = d.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto dik = d(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto via = dik + d(k, j);
        if (via < d(i, j)) d(i, j) = via;
      }
    }
  }
}

template <typename Derived>
typename Derived::PlainObject metric_closure(const Eigen::MatrixBase<Derived>& d) {
  typename Derived::PlainObject out = d;
  metric_closure_in_place(out);
  return out;
}

/// Largest violation max(0, d(i,j) - d(i,k) - d(k,j)) over all triples.
template <typename Derived>
typename Derived::Scalar triangle_defect(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  Scalar worst(0);
  const Eigen::Index n = d.rows();
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Scalar gap = d(i, j) - d(i, k) - d(k, j);
        if (gap > worst) worst = gap;
      }
  return worst;
}

/// Shortest walk lengths between all vertex pairs; unreachable pairs are
/// +infinity. Throws ParameterError on negative or mis-sized lengths.
Eigen::MatrixXd all_pairs_shortest_paths(const Multigraph& g, const Eigen::VectorXd& length);

}  // namespace setp

#endif  // SETP_GRAPH_HPP
