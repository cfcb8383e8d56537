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

#include "setp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "setp/core.hpp"

namespace setp {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

template <typename T>
T get(const json& doc, const char* key) {
  try {
    return field(doc, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

Eigen::MatrixXd square_matrix(const json& doc, const char* key, int size) {
  const json& rows = field(doc, key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != size) {
    throw ParseError(std::string(key) + ": expected " + std::to_string(size) + " rows");
  }
  Eigen::MatrixXd m(size, size);
  for (int i = 0; i < size; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != size) {
      throw ParseError(std::string(key) + ": row " + std::to_string(i) + " must have " +
                       std::to_string(size) + " entries");
    }
    for (int j = 0; j < size; ++j) {
      m(i, j) = number(row[static_cast<std::size_t>(j)], std::string(key) + "[" + std::to_string(i) + "]");
    }
  }
  return m;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json header(const char* kind) { return json{{"format", kFormatVersion}, {"kind", kind}}; }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

OriginalInstance parse_original(const json& doc) {
  const int vertices = get<int>(doc, "vertices");
  if (vertices < 0) throw ParseError("vertices must be nonnegative");
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) throw ParseError("edges: expected an array");

  const auto count = edges.size();
  std::vector<Edge> by_id(count);
  std::vector<double> lengths(count);
  std::vector<bool> seen(count, false);
  for (const json& e : edges) {
    const int id = integer(field(e, "id"), "edge id");
    if (id < 0 || static_cast<std::size_t>(id) >= count || seen[static_cast<std::size_t>(id)]) {
      throw ParseError("edge ids must be a permutation of 0.." + std::to_string(count - 1));
    }
    seen[static_cast<std::size_t>(id)] = true;
    const std::string where = "edge " + std::to_string(id);
    by_id[static_cast<std::size_t>(id)] = {integer(field(e, "u"), where), integer(field(e, "v"), where)};
    lengths[static_cast<std::size_t>(id)] = number(field(e, "length"), where);
  }

  OriginalInstance inst;
  inst.graph = Multigraph(vertices);
  try {
    for (const Edge& e : by_id) inst.graph.add_edge(e.u, e.v);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  inst.length = Eigen::Map<const Eigen::VectorXd>(lengths.data(), static_cast<Eigen::Index>(count));
  inst.depot = get<int>(doc, "depot");

  const json& required = field(doc, "required");
  if (!required.is_array()) throw ParseError("required: expected an array");
  inst.prob.resize(static_cast<Eigen::Index>(required.size()));
  for (std::size_t k = 0; k < required.size(); ++k) {
    const std::string where = "required[" + std::to_string(k) + "]";
    inst.required.push_back(integer(field(required[k], "edge"), where));
    inst.prob(static_cast<Eigen::Index>(k)) = number(field(required[k], "prob"), where);
  }
  return inst;
}

SimplifiedInstance parse_simplified(const json& doc) {
  const int vertices = get<int>(doc, "vertices");
  if (vertices < 0) throw ParseError("vertices must be nonnegative");
  SimplifiedInstance inst;
  inst.distance = square_matrix(doc, "distances", vertices);
  const json& matching = field(doc, "matching");
  if (!matching.is_array()) throw ParseError("matching: expected an array");
  for (const json& pair : matching) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("matching: entries must be [tail, head]");
    inst.matching.push_back({integer(pair[0], "matching"), integer(pair[1], "matching")});
  }
  const json& prob = field(doc, "probabilities");
  if (!prob.is_array()) throw ParseError("probabilities: expected an array");
  inst.prob.resize(static_cast<Eigen::Index>(prob.size()));
  for (std::size_t k = 0; k < prob.size(); ++k) {
    inst.prob(static_cast<Eigen::Index>(k)) = number(prob[k], "probabilities");
  }
  return inst;
}

TspInstance parse_tsp(const json& doc) {
  const int cities = get<int>(doc, "cities");
  if (cities < 0) throw ParseError("cities must be nonnegative");
  return {square_matrix(doc, "costs", cities)};
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

void check_format(const json& doc) {
  if (get<std::string>(doc, "format") != kFormatVersion) {
    throw ParseError("unsupported format, expected \"" + std::string(kFormatVersion) + "\"");
  }
}

}  // namespace

std::string_view kind_name(const AnyInstance& inst) {
  switch (inst.index()) {
    case 0: return "original";
    case 1: return "simplified";
    default: return "tsp";
  }
}

AnyInstance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  check_format(doc);
  const auto kind = get<std::string>(doc, "kind");
  if (kind == "original") return parse_original(doc);
  if (kind == "simplified") return parse_simplified(doc);
  if (kind == "tsp") return parse_tsp(doc);
  throw ParseError("unknown kind '" + kind + "'");
}

AnyInstance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

std::string serialize(const OriginalInstance& inst) {
  json doc = header("original");
  doc["vertices"] = inst.graph.num_vertices();
  doc["depot"] = inst.depot;
  json edges = json::array();
  for (int id = 0; id < inst.graph.num_edges(); ++id) {
    const Edge& e = inst.graph.edge(id);
    edges.push_back({{"id", id}, {"u", e.u}, {"v", e.v}, {"length", inst.length(id)}});
  }
  doc["edges"] = std::move(edges);
  json required = json::array();
  for (int k = 0; k < inst.num_required(); ++k) {
    required.push_back({{"edge", inst.required[static_cast<std::size_t>(k)]}, {"prob", inst.prob(k)}});
  }
  doc["required"] = std::move(required);
  return dump(doc);
}

std::string serialize(const SimplifiedInstance& inst) {
  json doc = header("simplified");
  doc["vertices"] = inst.num_vertices();
  doc["distances"] = matrix_json(inst.distance);
  json matching = json::array();
  for (const RequiredPair& r : inst.matching) matching.push_back({r.tail, r.head});
  doc["matching"] = std::move(matching);
  doc["probabilities"] = std::vector<double>(inst.prob.data(), inst.prob.data() + inst.prob.size());
  return dump(doc);
}

std::string serialize(const TspInstance& tsp) {
  json doc = header("tsp");
  doc["cities"] = tsp.num_cities();
  doc["costs"] = matrix_json(tsp.cost);
  return dump(doc);
}

std::string serialize(const VertexMap& map) {
  json doc = header("vertex-map");
  doc["source"] = map.source == Source::kTsp ? "tsp" : "original";
  doc["vertex_origin"] = map.vertex_origin;
  doc["required_origin"] = map.required_origin;
  return dump(doc);
}

std::string serialize(const AnyInstance& inst) {
  return std::visit([](const auto& x) { return serialize(x); }, inst);
}

VertexMap parse_vertex_map(std::string_view text) {
  const json doc = parse_document(text);
  check_format(doc);
  if (get<std::string>(doc, "kind") != "vertex-map") throw ParseError("not a vertex map");
  VertexMap map;
  const auto source = get<std::string>(doc, "source");
  if (source == "tsp") {
    map.source = Source::kTsp;
  } else if (source == "original") {
    map.source = Source::kOriginal;
  } else {
    throw ParseError("unknown vertex map source '" + source + "'");
  }
  map.vertex_origin = get<std::vector<int>>(doc, "vertex_origin");
  map.required_origin = get<std::vector<int>>(doc, "required_origin");
  return map;
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_order(const AprioriOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.sequence.size(); ++i) {
    const int e = order.sequence[i];
    if (i > 0) out += ',';
    out += std::to_string(e);
    out += order.orient[static_cast<std::size_t>(e)] ? '-' : '+';
  }
  return out;
}

AprioriOrder parse_order(std::string_view spec, int n) {
  AprioriOrder order;
  order.orient.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
  std::vector<std::uint8_t> orient_at;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    std::string_view item = spec.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.size() < 2 || (item.back() != '+' && item.back() != '-')) {
      throw ParseError("order spec item '" + std::string(item) + "' must look like 3+ or 3-");
    }
    int e = 0;
    const auto digits = item.substr(0, item.size() - 1);
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), e);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
      throw ParseError("order spec item '" + std::string(item) + "' has a bad edge index");
    }
    order.sequence.push_back(e);
    orient_at.push_back(item.back() == '-' ? 1 : 0);
    pos = comma + 1;
  }
  if (order.size() != n) {
    throw ParseError("order spec lists " + std::to_string(order.size()) + " edges, instance has " +
                     std::to_string(n));
  }
  for (std::size_t i = 0; i < order.sequence.size(); ++i) {
    const int e = order.sequence[i];
    if (e < 0 || e >= n) throw ParseError("order spec edge " + std::to_string(e) + " out of range");
    order.orient[static_cast<std::size_t>(e)] = orient_at[i];
  }
  if (!is_valid_order(order, n)) throw ParseError("order spec is not a permutation");
  return order;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace setp
