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

#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "setp/core.hpp"
#include "setp/io.hpp"
#include "setp/transforms.hpp"

using namespace setp;

namespace {

bool same_graph(const Multigraph& a, const Multigraph& b) {
  return a.num_vertices() == b.num_vertices() &&
         std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
}

}  // namespace

TEST_CASE("original round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OriginalInstance inst = gen_random_original(5, 9, 1 + static_cast<int>(seed % 9), seed);
    const std::string text = serialize(inst);
    const auto parsed = std::get<OriginalInstance>(parse_instance(text));
    CHECK(same_graph(parsed.graph, inst.graph));
    CHECK(parsed.length == inst.length);
    CHECK(parsed.depot == inst.depot);
    CHECK(parsed.required == inst.required);
    CHECK(parsed.prob == inst.prob);
    CHECK(serialize(parsed) == text);
  }
}

TEST_CASE("simplified and tsp round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimplifiedInstance s = gen_random_simplified(1 + static_cast<int>(seed % 8), seed, seed % 2 == 0);
    const std::string text = serialize(s);
    const auto ps = std::get<SimplifiedInstance>(parse_instance(text));
    CHECK(ps.distance == s.distance);
    CHECK(ps.matching == s.matching);
    CHECK(ps.prob == s.prob);
    CHECK(serialize(ps) == text);
    CHECK(serialize(AnyInstance{ps}) == text);

    const TspInstance t = gen_random_tsp(3 + static_cast<int>(seed % 5), seed);
    const auto pt = std::get<TspInstance>(parse_instance(serialize(t)));
    CHECK(pt.cost == t.cost);
    CHECK(serialize(pt) == serialize(t));
  }
}

TEST_CASE("vertex map round trip") {
  const Reduction from_tsp = tsp_to_setp(gen_random_tsp(5, 2), 1e-6);
  const Reduction from_original = simplify(gen_random_original(4, 7, 3, 2), 1e-6);
  for (const VertexMap& map : {from_tsp.map, from_original.map}) {
    const std::string text = serialize(map);
    const VertexMap parsed = parse_vertex_map(text);
    CHECK(parsed.source == map.source);
    CHECK(parsed.vertex_origin == map.vertex_origin);
    CHECK(parsed.required_origin == map.required_origin);
    CHECK(serialize(parsed) == text);
  }
  CHECK_THROWS_AS(parse_vertex_map(serialize(gen_random_tsp(3, 1))), ParseError);
}

TEST_CASE("documents end with a newline and carry the format tag") {
  const std::string text = serialize(gen_random_tsp(3, 0));
  CHECK(text.back() == '\n');
  CHECK(text.find("\"setp/1\"") != std::string::npos);
  CHECK(kind_name(parse_instance(text)) == "tsp");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"tsp","cities":1,"costs":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/2","kind":"tsp","cities":1,"costs":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/1","kind":"circle"})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/1","kind":"tsp","cities":2})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/1","kind":"tsp","cities":2,"costs":[[0,1],[1]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/1","kind":"tsp","cities":2,"costs":[[0,"x"],[1,0]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/1","kind":"simplified","vertices":2,
      "distances":[[0,1],[1,0]],"matching":[[0]],"probabilities":[0.5]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"setp/1","kind":"original","vertices":2,"depot":0,
      "edges":[{"id":1,"u":0,"v":1,"length":1}],"required":[]})"),
                  ParseError);
}

TEST_CASE("structurally sound but invalid documents parse") {
  // probability out of range is an invariant violation, not a parse error
  const auto any = parse_instance(R"({"format":"setp/1","kind":"simplified","vertices":2,
      "distances":[[0,1],[1,0]],"matching":[[0,1]],"probabilities":[1.5]})");
  const auto& s = std::get<SimplifiedInstance>(any);
  CHECK_FALSE(validate_simplified(s).empty());
}

TEST_CASE("format_real round trips") {
  for (double x : {0.0, 1.0, 0.1, 1e-6, 1.0 / 3.0, 123456.789, 2.5e-300}) {
    CHECK(std::stod(format_real(x)) == x);
  }
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(3.0) == "3");
}

TEST_CASE("order specs") {
  const AprioriOrder order{{0, 2, 1}, {0, 1, 1}};
  CHECK(format_order(order) == "0+,2-,1-");
  CHECK(parse_order("0+,2-,1-", 3) == order);
  CHECK(parse_order(" 0+ , 2- ,1- ", 3) == order);
  CHECK(parse_order(format_order(identity_order(12)), 12) == identity_order(12));

  CHECK_THROWS_AS(parse_order("0+,1+", 3), ParseError);
  CHECK_THROWS_AS(parse_order("0+,1+,1-", 3), ParseError);
  CHECK_THROWS_AS(parse_order("0+,1+,3+", 3), ParseError);
  CHECK_THROWS_AS(parse_order("0,1+,2+", 3), ParseError);
  CHECK_THROWS_AS(parse_order("0+,x+,2+", 3), ParseError);
  CHECK_THROWS_AS(parse_order("", 3), ParseError);
}

TEST_CASE("file helpers") {
  const auto dir = testing::scratch_dir("io");
  const auto path = dir / "inst.json";
  const std::string text = serialize(gen_random_simplified(3, 9, true));
  write_text_file(path, text);
  CHECK(read_text_file(path) == text);
  CHECK(serialize(read_instance_file(path)) == text);
  CHECK_THROWS(read_text_file(dir / "missing.json"));
}
