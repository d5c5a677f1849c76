#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "dpcover/bigint.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"
#include "dpcover/search.hpp"

namespace dpcover {

// Graph objects use 1-indexed vertices:
//   {"n": 4, "edges": [[1,2], ...], "signs": {"1-2": -1, ...}}
// "signs" is optional. A JSON string "K2".."K8" names a complete graph.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Signs default to +1 for edges missing from "signs".
SignedGraph signed_graph_from_json(const nlohmann::json& j);
nlohmann::json signed_graph_to_json(const SignedGraph& sg);

// Built-in name ("K4") or path to a graph JSON file.
nlohmann::json load_graph_json(const std::string& name_or_path);
Graph load_graph(const std::string& name_or_path);

// Cover objects: {"m": 3, "perms": {"1-2": [2,1,3], ...}} with 1-indexed
// images and i < j keys. An optional "graph" member is used when `graph`
// is empty.
FullCover cover_from_json(const nlohmann::json& j, const std::optional<Graph>& graph);
nlohmann::json cover_to_json(const FullCover& c, bool include_graph = true);

nlohmann::json read_json_file(const std::string& path);

// Exact integer: a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json bigint_json(BigInt value);

// "i-j" key of an edge, 1-indexed.
std::string edge_key(const Edge& e);

nlohmann::json search_result_json(const SearchSpec& spec, const SearchResult& r,
                                  const std::string& graph_label, double elapsed_ms);

}  // namespace dpcover
