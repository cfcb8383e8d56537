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

#ifndef SETP_EVAL_HPP
#define SETP_EVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setp/core.hpp"
#include "setp/types.hpp"

namespace setp {

enum class Method { kClosedForm, kEnumeration, kMonteCarlo };

std::string_view to_string(Method method);

struct ExpectedCost {
  double value = 0.0;
  Method method = Method::kClosedForm;
  double std_error = 0.0;  // nonzero only for Monte Carlo
};

inline constexpr int kEnumerationGuard = 20;

/// Endpoints and probabilities of an order laid out by cyclic position:
/// position i serves from `from[i]` to `to[i]` with probability `prob(i)`.
template <typename Scalar>
struct OrientedSequence {
  std::vector<int> from;
  std::vector<int> to;
  Vector<Scalar> prob;
};

template <typename Scalar>
void check_order(const AprioriOrder& order, const BasicSimplifiedInstance<Scalar>& inst) {
  if (!is_valid_order(order, inst.num_required())) {
    throw StructuralError("order is not a permutation with orientations over " +
                          std::to_string(inst.num_required()) + " required edges");
  }
}

template <typename Scalar>
OrientedSequence<Scalar> lay_out(const AprioriOrder& order, const BasicSimplifiedInstance<Scalar>& inst) {
  check_order(order, inst);
  const int n = order.size();
  OrientedSequence<Scalar> seq{std::vector<int>(static_cast<std::size_t>(n)),
                               std::vector<int>(static_cast<std::size_t>(n)), Vector<Scalar>(n)};
  for (int i = 0; i < n; ++i) {
    const int e = order.sequence[static_cast<std::size_t>(i)];
    const RequiredPair& r = inst.matching[static_cast<std::size_t>(e)];
    const bool flip = order.orient[static_cast<std::size_t>(e)] != 0;
    seq.from[static_cast<std::size_t>(i)] = flip ? r.head : r.tail;
    seq.to[static_cast<std::size_t>(i)] = flip ? r.tail : r.head;
    seq.prob(i) = inst.prob(e);
  }
  return seq;
}

/// Cost of the closed tour that serves the positions listed in `served`
/// (increasing) and connects consecutive ones directly.
template <typename Scalar, typename Derived>
Scalar tour_cost(const OrientedSequence<Scalar>& seq, const std::vector<int>& served,
                 const Eigen::MatrixBase<Derived>& d) {
  const std::size_t m = served.size();
  Scalar cost(0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto i = static_cast<std::size_t>(served[k]);
    const auto j = static_cast<std::size_t>(served[(k + 1) % m]);
    cost += d(seq.from[i], seq.to[i]) + d(seq.to[i], seq.from[j]);
  }
  return cost;
}

/// Length of the a posteriori tour for one scenario.
template <typename Scalar>
Scalar aposteriori_cost(const AprioriOrder& order, const Scenario& s,
                        const BasicSimplifiedInstance<Scalar>& inst) {
  if (s.size() != inst.num_required()) throw StructuralError("scenario size does not match instance");
  const auto seq = lay_out(order, inst);
  std::vector<int> served;
  for (int i = 0; i < order.size(); ++i) {
    if (s.served[static_cast<std::size_t>(order.sequence[static_cast<std::size_t>(i)])]) served.push_back(i);
  }
  return tour_cost(seq, served, inst.distance);
}

/// Expected a posteriori cost in O(n^2): the service term of every edge, the
/// connection from each served edge to the next served one, and the
/// out-and-back term when an edge is served alone.
template <typename Scalar, typename Derived>
Scalar closed_form_kernel(const OrientedSequence<Scalar>& seq, const Eigen::MatrixBase<Derived>& d) {
  const int n = static_cast<int>(seq.from.size());
  if (n == 0) return Scalar(0);
  const auto& p = seq.prob;

  // prefix(i) = prod_{k<i} (1-p_k), suffix(i) = prod_{k>=i} (1-p_k)
  Vector<Scalar> prefix(n + 1), suffix(n + 1);
  prefix(0) = Scalar(1);
  suffix(n) = Scalar(1);
  for (int i = 0; i < n; ++i) prefix(i + 1) = prefix(i) * (Scalar(1) - p(i));
  for (int i = n - 1; i >= 0; --i) suffix(i) = suffix(i + 1) * (Scalar(1) - p(i));

  Scalar total(0);
  for (int i = 0; i < n; ++i) {
    const Scalar pi = p(i);
    if (pi == Scalar(0)) continue;
    const int bi = seq.to[static_cast<std::size_t>(i)];
    const int ai = seq.from[static_cast<std::size_t>(i)];
    total += pi * d(ai, bi);
    total += pi * prefix(i) * suffix(i + 1) * d(bi, ai);

    Scalar skipped(1);
    for (int t = 1; t < n; ++t) {
      const int j = (i + t) % n;
      const Scalar pj = p(j);
      total += pi * pj * skipped * d(bi, seq.from[static_cast<std::size_t>(j)]);
      skipped *= Scalar(1) - pj;
      if (skipped == Scalar(0)) break;
    }
  }
  return total;
}

template <typename Scalar>
Scalar closed_form_value(const AprioriOrder& order, const BasicSimplifiedInstance<Scalar>& inst) {
  return closed_form_kernel(lay_out(order, inst), inst.distance);
}

/// Ground truth: sum over all 2^n scenarios of Pr(s) * cost(s).
template <typename Scalar>
Scalar enumeration_value(const AprioriOrder& order, const BasicSimplifiedInstance<Scalar>& inst,
                         int guard = kEnumerationGuard) {
  const int n = inst.num_required();
  if (n > guard) {
    throw GuardError("enumeration refused: n = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard),
                     static_cast<std::size_t>(guard));
  }
  const auto seq = lay_out(order, inst);
  std::vector<int> served;
  served.reserve(static_cast<std::size_t>(n));
  Scalar total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Scalar pr(1);
    served.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        pr *= seq.prob(i);
        served.push_back(i);
      } else {
        pr *= Scalar(1) - seq.prob(i);
      }
    }
    if (pr == Scalar(0)) continue;
    total += pr * tour_cost(seq, served, inst.distance);
  }
  return total;
}

ExpectedCost expected_cost_closed_form(const AprioriOrder& order, const SimplifiedInstance& inst);

/// Throws GuardError when n exceeds `guard`.
ExpectedCost expected_cost_enumeration(const AprioriOrder& order, const SimplifiedInstance& inst,
                                       int guard = kEnumerationGuard);

inline constexpr std::uint64_t kMonteCarloBatch = 1024;

/// Sample mean of the a posteriori cost. Samples are drawn in batches of
/// kMonteCarloBatch, batch b using stream b of `seed`; batches are combined
/// in index order, so the result does not depend on `workers`.
ExpectedCost expected_cost_monte_carlo(const AprioriOrder& order, const SimplifiedInstance& inst,
                                       std::uint64_t samples, std::uint64_t seed,
                                       unsigned workers = 1);

/// Direct original-form cost: walk `tour` from the depot, serve the required
/// edges flagged in `s` over their own length, move between them along
/// shortest paths (`shortest`) and return to the depot.
double aposteriori_cost_original(const EulerianTour& tour, const Scenario& s,
                                 const OriginalInstance& inst, const Eigen::MatrixXd& shortest);

/// Exact expectation of aposteriori_cost_original over all 2^n scenarios.
double expected_cost_original_direct(const EulerianTour& tour, const OriginalInstance& inst,
                                     int guard = kEnumerationGuard);

struct EvalOptions {
  Method method = Method::kClosedForm;
  std::optional<double> epsilon;  // default: transforms::default_epsilon
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

/// Original-form expected cost, evaluated as the simplified instance's cost of
/// the induced order. Exceeds the direct value by exactly 2 * epsilon (the
/// depot edge's service and its pendant connection).
ExpectedCost expected_cost_original(const EulerianTour& tour, const OriginalInstance& inst,
                                    const EvalOptions& options = {});

}  // namespace setp

#endif  // SETP_EVAL_HPP
