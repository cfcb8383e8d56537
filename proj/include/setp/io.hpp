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

#ifndef SETP_IO_HPP
#define SETP_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "setp/transforms.hpp"
#include "setp/types.hpp"

namespace setp {

/// Malformed document or order spec.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kFormatVersion = "setp/1";

using AnyInstance = std::variant<OriginalInstance, SimplifiedInstance, TspInstance>;

std::string_view kind_name(const AnyInstance& inst);

/// Parses an instance document. Only structure is checked here; invariants
/// such as symmetry or probability range are left to the validators.
AnyInstance parse_instance(std::string_view text);
AnyInstance read_instance_file(const std::filesystem::path& path);

std::string serialize(const OriginalInstance& inst);
std::string serialize(const SimplifiedInstance& inst);
std::string serialize(const TspInstance& tsp);
std::string serialize(const VertexMap& map);
std::string serialize(const AnyInstance& inst);

VertexMap parse_vertex_map(std::string_view text);

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

/// "0+,2-,1+": edge indices in cyclic order, '+' forward, '-' reversed.
std::string format_order(const AprioriOrder& order);

/// Parses an order spec over n required edges. Throws ParseError on bad
/// syntax or when the indices are not a permutation of 0..n-1.
AprioriOrder parse_order(std::string_view spec, int n);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace setp

#endif  // SETP_IO_HPP
