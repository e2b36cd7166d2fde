#include "miura/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "miura/errors.hpp"

namespace miura {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, std::string_view what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long long as_integer(const Json& j, std::string_view what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

void reject_unknown_keys(const Json& doc, std::initializer_list<std::string_view> known) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      throw ParseError("unexpected key '" + it.key() + "'");
    }
  }
}

std::string branch_key(const SemiGraph& g, BranchRef b) {
  return g.edge(b.edge).id + "." + std::to_string(b.slot);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json graph_to_json(const MarkedSemiGraph& m) {
  const SemiGraph& g = m.graph();
  Json doc = Json::object();
  doc["vertices"] = g.vertices();
  doc["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    Json ends = Json::array();
    for (const auto& end : e.ends) {
      if (end) {
        ends.push_back(g.vertices()[*end]);
      } else {
        ends.push_back(nullptr);
      }
    }
    doc["edges"].push_back(Json{{"id", e.id}, {"ends", std::move(ends)}});
  }
  doc["marking"] = Json::array();
  for (const BranchRef b : m.marking()) doc["marking"].push_back(g.edge(b.edge).id);
  return doc;
}

MarkedSemiGraph graph_from_json(const Json& doc) {
  const Json& vertices = member(doc, "vertices");
  const Json& edges = member(doc, "edges");
  const Json& marking = member(doc, "marking");
  reject_unknown_keys(doc, {"vertices", "edges", "marking"});
  if (!vertices.is_array() || !edges.is_array() || !marking.is_array()) {
    throw ParseError("'vertices', 'edges' and 'marking' must be arrays");
  }

  std::vector<std::string> vertex_ids;
  for (const auto& v : vertices) vertex_ids.push_back(as_string(v, "vertex id"));

  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) {
    EdgeSpec spec;
    spec.id = as_string(member(e, "id"), "edge id");
    reject_unknown_keys(e, {"id", "ends"});
    const Json& ends = member(e, "ends");
    if (!ends.is_array() || ends.size() != 2) throw ParseError("edge '" + spec.id + "' needs exactly two ends");
    for (std::size_t slot = 0; slot < 2; ++slot) {
      if (!ends[slot].is_null()) spec.ends[slot] = as_string(ends[slot], "edge end");
    }
    specs.push_back(std::move(spec));
  }

  std::vector<std::string> marked;
  for (const auto& id : marking) marked.push_back(as_string(id, "marking entry"));

  return {SemiGraph(std::move(vertex_ids), specs), marked};
}

std::string write_graph(const MarkedSemiGraph& m) { return graph_to_json(m).dump(2) + "\n"; }

MarkedSemiGraph read_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

MarkedSemiGraph load_graph(const std::filesystem::path& path) { return read_graph(read_text_file(path)); }

Json numbering_to_json(const MarkedSemiGraph& m, const Numbering& n) {
  const SemiGraph& g = m.graph();
  Json doc = Json::object();
  if (const auto* edge = std::get_if<EdgeNumbering>(&n)) {
    doc["p"] = edge->prime().value();
    doc["kind"] = "balanced";
    Json values = Json::object();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) values[g.edge(e).id] = edge->at(e);
    doc["edge_values"] = std::move(values);
  } else {
    const auto& branch = std::get<BranchNumbering>(n);
    doc["p"] = branch.prime().value();
    doc["kind"] = "strict";
    Json values = Json::object();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      for (std::uint8_t slot = 0; slot < 2; ++slot) values[branch_key(g, {e, slot})] = branch.at({e, slot});
    }
    doc["branch_values"] = std::move(values);
  }
  return doc;
}

Numbering numbering_from_json(const MarkedSemiGraph& m, const Json& doc) {
  const SemiGraph& g = m.graph();
  const long long raw_p = as_integer(member(doc, "p"), "'p'");
  if (raw_p > 1'000'000 || !is_prime(static_cast<int>(raw_p)) || raw_p == 2) {
    throw ParseError("'p' must be an odd prime");
  }
  const Prime p(static_cast<int>(raw_p));
  const std::string kind = as_string(member(doc, "kind"), "'kind'");

  auto read_value = [&](const Json& j, const std::string& key) {
    const long long v = as_integer(j, "value of '" + key + "'");
    if (!p.contains(v)) throw ParseError("value of '" + key + "' outside 0.." + std::to_string(p.value() - 1));
    return static_cast<Value>(v);
  };

  if (kind == "balanced") {
    // "radii" is informational output of the miura command.
    reject_unknown_keys(doc, {"p", "kind", "edge_values", "radii"});
    const Json& values = member(doc, "edge_values");
    if (!values.is_object() || values.size() != g.edge_count()) {
      throw ParseError("'edge_values' must map every edge id to a value");
    }
    std::vector<Value> out(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& id = g.edge(e).id;
      auto it = values.find(id);
      if (it == values.end()) throw ParseError("no value for edge '" + id + "'");
      out[e] = read_value(*it, id);
    }
    return EdgeNumbering(p, std::move(out));
  }
  if (kind == "strict") {
    reject_unknown_keys(doc, {"p", "kind", "branch_values"});
    const Json& values = member(doc, "branch_values");
    if (!values.is_object() || values.size() != g.branch_count()) {
      throw ParseError("'branch_values' must map every branch 'edge.slot' to a value");
    }
    std::vector<Value> out(g.branch_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      for (std::uint8_t slot = 0; slot < 2; ++slot) {
        const std::string key = branch_key(g, {e, slot});
        auto it = values.find(key);
        if (it == values.end()) throw ParseError("no value for branch '" + key + "'");
        out[BranchRef{e, slot}.index()] = read_value(*it, key);
      }
    }
    return BranchNumbering(p, std::move(out));
  }
  throw ParseError("'kind' must be \"strict\" or \"balanced\"");
}

std::string write_numbering(const MarkedSemiGraph& m, const Numbering& n) {
  return numbering_to_json(m, n).dump() + "\n";
}

Numbering read_numbering(const MarkedSemiGraph& m, std::string_view text) {
  return numbering_from_json(m, parse_json(text));
}

Numbering load_numbering(const MarkedSemiGraph& m, const std::filesystem::path& path) {
  return read_numbering(m, read_text_file(path));
}

Json to_json(const ExponentVector& v) { return Json(v.entries); }

Json to_json(const CensusReport& report) {
  Json doc = Json::object();
  doc["total"] = report.total;
  doc["method"] = std::string(to_string(report.method));
  if (report.by_exponent) {
    Json cells = Json::array();
    for (const auto& [key, n] : *report.by_exponent) {
      cells.push_back(Json{{"exponent", to_json(key)}, {"count", n}});
    }
    doc["by_exponent"] = std::move(cells);
  }
  return doc;
}

ExponentVector parse_constraint(Prime p, std::string_view text) {
  ExponentVector out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    long long v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("constraint entry '" + std::string(token) + "' is not an integer");
    }
    out.entries.push_back(residue(p, v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace miura
