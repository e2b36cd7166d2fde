#ifndef MIURA_IO_HPP
#define MIURA_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "miura/search.hpp"
#include "miura/semigraph.hpp"

namespace miura {

using Json = nlohmann::ordered_json;

// Graph files:
//   {"vertices": [...], "edges": [{"id": .., "ends": [v | null, v | null]}, ...],
//    "marking": [leg edge ids]}
// Keys in that order, lists in input order. Malformed documents throw
// ParseError; well-formed documents with dangling references throw
// StructureError.
Json graph_to_json(const MarkedSemiGraph& m);
MarkedSemiGraph graph_from_json(const Json& doc);

// Canonical text: two-space indented JSON with a trailing newline.
std::string write_graph(const MarkedSemiGraph& m);
MarkedSemiGraph read_graph(std::string_view text);
MarkedSemiGraph load_graph(const std::filesystem::path& path);

// Numbering files:
//   balanced: {"p": 11, "kind": "balanced", "edge_values": {"e1": 4, ...}}
//   strict:   {"p": 11, "kind": "strict", "branch_values": {"e1.0": 1, "e1.1": 10, ...}}
// Value keys follow graph order. Branch numberings are always written with
// kind "strict"; whether they are strict is for is_strict() to decide.
Json numbering_to_json(const MarkedSemiGraph& m, const Numbering& n);
Numbering numbering_from_json(const MarkedSemiGraph& m, const Json& doc);

// Canonical text: compact single-line JSON with a trailing newline.
std::string write_numbering(const MarkedSemiGraph& m, const Numbering& n);
Numbering read_numbering(const MarkedSemiGraph& m, std::string_view text);
Numbering load_numbering(const MarkedSemiGraph& m, const std::filesystem::path& path);

Json to_json(const ExponentVector& v);
Json to_json(const CensusReport& report);

// "c1,c2,..." of arbitrary integers, reduced mod p. The empty string is the
// empty vector.
ExponentVector parse_constraint(Prime p, std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace miura

#endif  // MIURA_IO_HPP
