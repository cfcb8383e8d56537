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

#ifndef SETP_TYPES_HPP
#define SETP_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace setp {

/// Input does not have the shape an operation requires (size mismatch,
/// invalid tour, vertex out of range, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive method refused an instance larger than its guard.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::size_t guard)
      : std::runtime_error(what), guard_(guard) {}
  std::size_t guard() const noexcept { return guard_; }

 private:
  std::size_t guard_;
};

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int edge = 0;
  int neighbor = 0;
};

/// Undirected multigraph with stable edge ids. Edge ids are assigned densely
/// in insertion order; parallel edges are distinct ids.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices);

  int add_vertex();
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const Edge> edges() const { return edges_; }

  /// Incidences of `v` in increasing edge-id order. A self-loop shows up twice.
  std::span<const Incidence> incident(int v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  bool has_vertex(int v) const { return v >= 0 && v < num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// One traversal of an edge; `reversed` means v -> u instead of u -> v.
struct TourStep {
  int edge = 0;
  bool reversed = false;
  friend bool operator==(const TourStep&, const TourStep&) = default;
};

/// Closed walk using every multigraph edge exactly once, starting at `start`.
struct EulerianTour {
  int start = 0;
  std::vector<TourStep> steps;
  friend bool operator==(const EulerianTour&, const EulerianTour&) = default;
};

/// Original formulation: an Eulerian multigraph whose depot has already been
/// duplicated (see transforms::embed_depot), plus the required edges.
struct OriginalInstance {
  Multigraph graph;
  Eigen::VectorXd length;     // indexed by edge id
  int depot = 0;
  std::vector<int> required;  // edge ids; position = required-edge index
  Eigen::VectorXd prob;       // indexed by required-edge index

  int num_required() const { return static_cast<int>(required.size()); }
};

/// A required edge of the simplified form, stored in its forward orientation.
struct RequiredPair {
  int tail = 0;
  int head = 0;
  friend bool operator==(const RequiredPair&, const RequiredPair&) = default;
};

/// Simplified formulation: complete symmetric distances over 2n vertices and a
/// perfect matching of n required edges with independent service probabilities.
template <typename Scalar>
struct BasicSimplifiedInstance {
  Matrix<Scalar> distance;
  std::vector<RequiredPair> matching;
  Vector<Scalar> prob;

  int num_required() const { return static_cast<int>(matching.size()); }
  int num_vertices() const { return static_cast<int>(distance.rows()); }
};

using SimplifiedInstance = BasicSimplifiedInstance<double>;

/// Symmetric TSP over `cost.rows()` cities.
template <typename Scalar>
struct BasicTspInstance {
  Matrix<Scalar> cost;
  int num_cities() const { return static_cast<int>(cost.rows()); }
};

using TspInstance = BasicTspInstance<double>;

/// A priori solution: cyclic order of required-edge indices plus one
/// orientation bit per edge. `orient` is indexed by edge index, not by
/// position, so rotating `sequence` never touches it.
struct AprioriOrder {
  std::vector<int> sequence;
  std::vector<std::uint8_t> orient;  // 0: tail -> head, 1: head -> tail

  int size() const { return static_cast<int>(sequence.size()); }
  friend bool operator==(const AprioriOrder&, const AprioriOrder&) = default;
};

/// One realization of the stochastic data.
struct Scenario {
  std::vector<bool> served;
  int size() const { return static_cast<int>(served.size()); }
};

}  // namespace setp

#endif  // SETP_TYPES_HPP
