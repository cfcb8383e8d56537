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

#ifndef SETP_CORE_HPP
#define SETP_CORE_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "setp/types.hpp"

namespace setp {

enum class Invariant {
  kOddDegree,
  kDisconnected,
  kSelfLoop,
  kNegativeLength,
  kNonFinite,
  kShape,
  kProbabilityRange,
  kDepotMissing,
  kRequiredNotEdge,
  kRequiredDuplicate,
  kRequiredEmpty,
  kSymmetry,
  kDiagonal,
  kMatchingCover,
};

std::string_view to_string(Invariant invariant);

/// A failed instance invariant and the element that failed it.
struct Violation {
  Invariant invariant;
  std::string element;
};

std::string describe(const Violation& violation);

std::vector<Violation> validate_original(const OriginalInstance& inst);

template <typename Scalar>
std::vector<Violation> validate_simplified(const BasicSimplifiedInstance<Scalar>& inst) {
  std::vector<Violation> out;
  const auto& d = inst.distance;
  const int n = inst.num_required();
  if (d.rows() != d.cols() || d.rows() != 2 * n) {
    out.push_back({Invariant::kShape, "distance matrix is " + std::to_string(d.rows()) + "x" +
                                          std::to_string(d.cols()) + ", expected " +
                                          std::to_string(2 * n) + "x" + std::to_string(2 * n)});
  }
  if (inst.prob.size() != n) {
    out.push_back({Invariant::kShape, "probability vector has length " +
                                          std::to_string(inst.prob.size()) + ", expected " +
                                          std::to_string(n)});
  }
  if (n == 0) out.push_back({Invariant::kRequiredEmpty, "matching"});

  if (d.rows() == d.cols()) {
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
      if (d(i, i) != Scalar(0)) {
        out.push_back({Invariant::kDiagonal, "D[" + std::to_string(i) + "][" + std::to_string(i) + "]"});
      }
      for (Eigen::Index j = 0; j < d.cols(); ++j) {
        const std::string at = "D[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        if (!std::isfinite(static_cast<double>(d(i, j)))) {
          out.push_back({Invariant::kNonFinite, at});
        } else if (d(i, j) < Scalar(0)) {
          out.push_back({Invariant::kNegativeLength, at});
        }
        if (j > i && d(i, j) != d(j, i)) out.push_back({Invariant::kSymmetry, at});
      }
    }
  }

  const int vertices = static_cast<int>(d.rows());
  std::vector<int> cover(static_cast<std::size_t>(vertices), 0);
  for (int k = 0; k < n; ++k) {
    for (int v : {inst.matching[k].tail, inst.matching[k].head}) {
      if (v < 0 || v >= vertices) {
        out.push_back({Invariant::kMatchingCover,
                       "edge " + std::to_string(k) + " endpoint " + std::to_string(v) + " out of range"});
      } else {
        ++cover[static_cast<std::size_t>(v)];
      }
    }
  }
  for (int v = 0; v < vertices; ++v) {
    const int c = cover[static_cast<std::size_t>(v)];
    if (c == 0) out.push_back({Invariant::kMatchingCover, "vertex " + std::to_string(v) + " uncovered"});
    if (c > 1) {
      out.push_back({Invariant::kMatchingCover,
                     "vertex " + std::to_string(v) + " covered " + std::to_string(c) + " times"});
    }
  }

  for (Eigen::Index k = 0; k < inst.prob.size(); ++k) {
    const Scalar p = inst.prob(k);
    if (!(p >= Scalar(0) && p <= Scalar(1))) {
      out.push_back({Invariant::kProbabilityRange, "p[" + std::to_string(k) + "]"});
    }
  }
  return out;
}

template <typename Scalar>
std::vector<Violation> validate_tsp(const BasicTspInstance<Scalar>& tsp) {
  std::vector<Violation> out;
  const auto& c = tsp.cost;
  if (c.rows() != c.cols()) {
    out.push_back({Invariant::kShape, "cost matrix is not square"});
    return out;
  }
  if (c.rows() < 3) out.push_back({Invariant::kShape, "fewer than 3 cities"});
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    if (c(i, i) != Scalar(0)) {
      out.push_back({Invariant::kDiagonal, "C[" + std::to_string(i) + "][" + std::to_string(i) + "]"});
    }
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      const std::string at = "C[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!std::isfinite(static_cast<double>(c(i, j)))) {
        out.push_back({Invariant::kNonFinite, at});
      } else if (c(i, j) < Scalar(0)) {
        out.push_back({Invariant::kNegativeLength, at});
      }
      if (j > i && c(i, j) != c(j, i)) out.push_back({Invariant::kSymmetry, at});
    }
  }
  return out;
}

/// Checks continuity, closure at `tour.start` and single use of every edge.
/// Returns an empty string when valid, otherwise the first problem found.
std::string check_tour(const EulerianTour& tour, const Multigraph& graph);

/// Vertex a step leaves from / arrives at.
inline int step_from(const Multigraph& g, const TourStep& s) {
  return s.reversed ? g.edge(s.edge).v : g.edge(s.edge).u;
}
inline int step_to(const Multigraph& g, const TourStep& s) {
  return s.reversed ? g.edge(s.edge).u : g.edge(s.edge).v;
}

bool is_valid_order(const AprioriOrder& order, int n);

/// Sequence 0..n-1, every edge forward.
AprioriOrder identity_order(int n);

/// Rotates the sequence so that edge 0 comes first. Two orders describe the
/// same solution iff their canonical forms are equal.
AprioriOrder canonicalize(const AprioriOrder& order);

/// Required edges of `inst` in the order and direction `tour` traverses them.
///
/// The sequence is read starting from the depot, which closes the cycle
/// between the last and the first entry. It is not rotated: in the original
/// form the depot fixes where the cycle is cut, and rotating would lose that.
/// Orientation 0 means the tour traverses the edge from `edge.u` to `edge.v`.
AprioriOrder induced_order(const EulerianTour& tour, const OriginalInstance& inst);

}  // namespace setp

#endif  // SETP_CORE_HPP
