#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "dpcover/constructions.hpp"
#include "dpcover/error.hpp"
#include "dpcover/io.hpp"

using namespace dpcover;
using nlohmann::json;

TEST_CASE("graph JSON is 1-indexed") {
  const Graph g = graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 2], [3, 2]]})"));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(graph_to_json(g) == json::parse(R"({"n": 3, "edges": [[1, 2], [2, 3]]})"));
  CHECK(graph_from_json(json("K4")) == complete_graph(4));
  CHECK(load_graph("K5") == complete_graph(5));

  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1]]})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 1]]})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), Error);
  CHECK_THROWS_AS(graph_from_json(json("K9")), Error);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), Error);
}

TEST_CASE("signed graph JSON") {
  const auto sg = signed_graph_from_json(
      json::parse(R"({"n": 3, "edges": [[1, 2], [2, 3]], "signs": {"2-3": -1}})"));
  CHECK(sg.signs() == std::vector<int>{1, -1});
  CHECK(signed_graph_from_json(signed_graph_to_json(sg)).signs() == sg.signs());
  CHECK_THROWS_AS(signed_graph_from_json(
                      json::parse(R"({"n": 3, "edges": [[1, 2]], "signs": {"2-1": -1}})")),
                  Error);
  CHECK_THROWS_AS(signed_graph_from_json(
                      json::parse(R"({"n": 3, "edges": [[1, 2]], "signs": {"1-2": 2}})")),
                  Error);
}

TEST_CASE("cover JSON round trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = complete_graph(2 + seed % 5);
    const FullCover c = random_cover(g, 1 + seed % 6, seed);
    CHECK(cover_from_json(cover_to_json(c, false), g) == c);
    CHECK(cover_from_json(cover_to_json(c, true), std::nullopt) == c);
  }
  const FullCover odd = odd_k4_cover(5);
  const json j = cover_to_json(odd, false);
  CHECK(j["m"] == 5);
  CHECK(j["perms"]["2-3"] == json::parse("[2, 3, 1, 5, 4]"));
}

TEST_CASE("malformed covers are invalid input") {
  const Graph k2 = complete_graph(2);
  auto fails = [&](const char* text) {
    try {
      cover_from_json(json::parse(text), k2);
    } catch (const Error& e) {
      return e.code() == ErrorCode::kInvalidInput;
    }
    return false;
  };
  CHECK(fails(R"({"m": 3, "perms": {"1-2": [1, 1, 3]}})"));
  CHECK(fails(R"({"m": 3, "perms": {"1-2": [1, 2]}})"));
  CHECK(fails(R"({"m": 3, "perms": {}})"));
  CHECK(fails(R"({"m": 3, "perms": {"1-2": [1, 2, 3], "1-3": [1, 2, 3]}})"));
  CHECK(fails(R"({"m": 3, "perms": {"2-1": [1, 2, 3]}})"));
  CHECK(fails(R"({"m": 3, "perms": {"1-2": [0, 1, 2]}})"));
  CHECK(fails(R"({"perms": {"1-2": [1]}})"));
  CHECK_THROWS_AS(cover_from_json(json::parse(R"({"m": 1, "perms": {}})"), std::nullopt), Error);
}

TEST_CASE("files and numbers") {
  const std::string path = "test_io_cover.json";
  {
    std::ofstream out(path);
    out << cover_to_json(even_pairing_cover(3, 2)).dump();
  }
  CHECK(cover_from_json(read_json_file(path), std::nullopt) == even_pairing_cover(3, 2));
  std::remove(path.c_str());
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_json_file(path), Error);
  std::remove(path.c_str());

  CHECK(bigint_json(42) == json(42));
  CHECK(bigint_json(-5) == json(-5));
  const BigInt big = static_cast<BigInt>(1) << 80;
  CHECK(bigint_json(big) == json("1208925819614629174706176"));
  CHECK(edge_key(Edge{0, 3}) == "1-4");
}
