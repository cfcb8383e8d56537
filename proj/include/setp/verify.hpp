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

#ifndef SETP_VERIFY_HPP
#define SETP_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace setp {

/// One property check. `margin` is tolerance minus observed error, so it is
/// nonnegative exactly when the check passes.
struct CheckResult {
  std::string name;
  bool pass = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::string detail;

  double margin() const { return tolerance - error; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t passed_count() const;
};

/// Closed form against 2^n enumeration on `seeds` random instances of size
/// `size` (even seeds non-metric, odd seeds metric), tolerance 1e-9 relative.
SuiteReport verify_oracle(int size, int seeds);

/// Direct original-form evaluation against the simplified evaluation of the
/// induced order, for every Eulerian tour of `seeds` random original
/// instances with at most `max_edges` edges (depot edges included).
/// Tolerance n * epsilon + 1e-9.
SuiteReport verify_equivalence(int max_edges, int seeds);

/// TSP gadget: brute-force SETP optimum against brute-force TSP optimum plus
/// m * epsilon for m in 4..max_cities, optimality of the lifted tour, and
/// lift(inject(t)) = t over all undirected tours for m <= min(max_cities, 6).
SuiteReport verify_reduction(int max_cities, int seeds);

/// Searches random Eulerian instances with at most `max_edges` edges for two
/// Eulerian tours whose expected costs differ by more than 1e-3.
SuiteReport verify_eulerian_contrast(int max_edges, int seeds);

/// Dispatch by name: oracle, equivalence, reduction, eulerian-contrast.
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, int size, int seeds);

/// key=value lines, one per check, then a summary line.
std::string format_report(const SuiteReport& report);

}  // namespace setp

#endif  // SETP_VERIFY_HPP
