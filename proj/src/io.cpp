#include "dpcover/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <regex>

#include "dpcover/error.hpp"

namespace dpcover {

using nlohmann::json;

namespace {

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer()) throw_invalid(std::string(what) + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 1) throw_invalid(std::string(what) + " must be >= 1 (labels are 1-indexed)");
  return static_cast<std::size_t>(x);
}

Edge parse_edge_key(const std::string& key, std::size_t n) {
  static const std::regex pattern(R"(^(\d+)-(\d+)$)");
  std::smatch match;
  if (!std::regex_match(key, match, pattern)) throw_invalid("malformed edge key '" + key + "'");
  const auto i = std::stoul(match[1].str());
  const auto j = std::stoul(match[2].str());
  if (i < 1 || j < 1 || i > n || j > n) throw_invalid("edge key '" + key + "' out of range");
  if (i >= j) throw_invalid("edge key '" + key + "' must be written i-j with i < j");
  return {static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1)};
}

std::optional<std::size_t> builtin_order(const std::string& name) {
  static const std::regex pattern(R"(^K([2-8])$)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) return std::nullopt;
  return std::stoul(match[1].str());
}

}  // namespace

std::string edge_key(const Edge& e) { return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1); }

Graph graph_from_json(const json& j) {
  if (j.is_string()) {
    const auto n = builtin_order(j.get<std::string>());
    if (!n) throw_invalid("unknown built-in graph '" + j.get<std::string>() + "'");
    return complete_graph(*n);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw_invalid("graph object needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0) {
    throw_invalid("\"n\" must be a non-negative integer");
  }
  const auto n = j["n"].get<std::size_t>();
  if (!j["edges"].is_array()) throw_invalid("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw_invalid("each edge must be a pair [i, j]");
    const std::size_t a = as_index(e[0], "edge endpoint");
    const std::size_t b = as_index(e[1], "edge endpoint");
    if (a > n || b > n) throw_invalid("edge endpoint exceeds n");
    edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
  }
  return Graph(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

SignedGraph signed_graph_from_json(const json& j) {
  Graph g = graph_from_json(j);
  std::vector<int> signs(g.edge_count(), 1);
  if (j.is_object() && j.contains("signs")) {
    if (!j["signs"].is_object()) throw_invalid("\"signs\" must be an object");
    for (const auto& [key, value] : j["signs"].items()) {
      const Edge e = parse_edge_key(key, g.vertex_count());
      const auto idx = g.edge_index(e.u, e.v);
      if (!idx) throw_invalid("sign given for non-edge " + key);
      if (!value.is_number_integer()) throw_invalid("sign of " + key + " must be +1 or -1");
      signs[*idx] = value.get<int>();
    }
  }
  return SignedGraph(std::move(g), std::move(signs));
}

json signed_graph_to_json(const SignedGraph& sg) {
  json j = graph_to_json(sg.graph());
  json signs = json::object();
  for (std::size_t e = 0; e < sg.graph().edge_count(); ++e) {
    signs[edge_key(sg.graph().edge(e))] = sg.sign(e);
  }
  j["signs"] = signs;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_invalid("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw_invalid("'" + path + "' is not valid JSON: " + ex.what());
  }
}

json load_graph_json(const std::string& name_or_path) {
  if (builtin_order(name_or_path)) return json(name_or_path);
  return read_json_file(name_or_path);
}

Graph load_graph(const std::string& name_or_path) {
  return graph_from_json(load_graph_json(name_or_path));
}

FullCover cover_from_json(const json& j, const std::optional<Graph>& graph) {
  if (!j.is_object() || !j.contains("m") || !j.contains("perms")) {
    throw_invalid("cover object needs \"m\" and \"perms\"");
  }
  const std::size_t m = as_index(j["m"], "\"m\"");
  Graph g;
  if (graph) {
    g = *graph;
  } else if (j.contains("graph")) {
    g = graph_from_json(j["graph"]);
  } else {
    throw_invalid("cover has no \"graph\" member and no graph was supplied");
  }
  if (!j["perms"].is_object()) throw_invalid("\"perms\" must be an object");
  std::map<Edge, Permutation> sigma;
  for (const auto& [key, value] : j["perms"].items()) {
    const Edge e = parse_edge_key(key, g.vertex_count());
    if (!value.is_array()) throw_invalid("permutation for " + key + " must be an array");
    if (value.size() != m) {
      throw_invalid("permutation for " + key + " has length " + std::to_string(value.size()) +
                    ", expected m = " + std::to_string(m));
    }
    std::vector<std::uint32_t> images;
    for (const json& x : value) {
      const std::size_t image = as_index(x, "permutation image");
      if (image > m) throw_invalid("permutation image exceeds m in " + key);
      images.push_back(static_cast<std::uint32_t>(image - 1));
    }
    sigma.emplace(e, Permutation(std::move(images)));
  }
  return build_cover(g, m, sigma);
}

json cover_to_json(const FullCover& c, bool include_graph) {
  json perms = json::object();
  for (std::size_t e = 0; e < c.graph().edge_count(); ++e) {
    json images = json::array();
    for (std::uint32_t x : c.sigma(e).images()) images.push_back(x + 1);
    perms[edge_key(c.graph().edge(e))] = images;
  }
  json j = {{"m", c.fold()}, {"perms", perms}};
  if (include_graph) j["graph"] = graph_to_json(c.graph());
  return j;
}

json bigint_json(BigInt value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

json search_result_json(const SearchSpec& spec, const SearchResult& r,
                        const std::string& graph_label, double elapsed_ms) {
  const bool want_max = spec.mode != SearchMode::kMin;
  const bool want_min = spec.mode != SearchMode::kMax;
  json j;
  j["graph"] = graph_label;
  j["m"] = spec.m;
  j["mode"] = std::string(mode_name(spec.mode));
  j["max"] = want_max ? bigint_json(r.max_value) : json(nullptr);
  j["min"] = want_min ? bigint_json(r.min_value) : json(nullptr);
  // Minimum over full covers only; an upper bound on the DP colour function.
  j["min_kind"] = "full-cover minimum";
  j["argmax_cover"] = want_max ? cover_to_json(r.argmax_cover, false) : json(nullptr);
  j["argmin_cover"] = want_min ? cover_to_json(r.argmin_cover, false) : json(nullptr);
  j["evaluated"] = r.evaluated;
  j["space_size"] = r.space_size ? bigint_json(*r.space_size) : json(nullptr);
  j["free_slots"] = r.free_slots;
  j["counter"] = std::string(counter_name(r.counter));
  j["exhaustive"] = r.exhaustive;
  j["normalization"] = spec.normalization == Normalization::kStar ? "star" : "none";
  j["reduction"] = spec.reduction == Reduction::kConjugacy ? "conjugacy" : "none";
  if (!r.histogram.empty()) {
    json hist = json::object();
    for (const auto& [value, freq] : r.histogram) hist[to_string(value)] = freq;
    j["histogram"] = hist;
  }
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace dpcover
