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

#ifndef SETP_TESTS_FIXTURES_HPP
#define SETP_TESTS_FIXTURES_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "setp/types.hpp"

namespace setp::testing {

/// Triangle 0-1-2 with every edge doubled: e0,e3 = (0,1) length 1,
/// e1,e4 = (1,2) length 2, e2,e5 = (2,0) length 3.
inline Multigraph doubled_triangle() {
  Multigraph g(3);
  for (int copy = 0; copy < 2; ++copy) {
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
  }
  return g;
}

inline Eigen::VectorXd doubled_triangle_lengths() {
  Eigen::VectorXd len(6);
  len << 1, 2, 3, 1, 2, 3;
  return len;
}

inline Multigraph triangle() {
  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr is discarded.
inline CommandResult run(const std::string& command) {
  CommandResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

/// Value of `key=` in line-oriented output, empty if absent.
inline std::string field(const std::string& out, const std::string& key) {
  const std::string needle = key + "=";
  std::size_t pos = 0;
  while (pos < out.size()) {
    const std::size_t end = out.find('\n', pos);
    const std::string line = out.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (line.rfind(needle, 0) == 0) return line.substr(needle.size());
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return {};
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("setp-" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace setp::testing

#endif  // SETP_TESTS_FIXTURES_HPP
