#include "doctest.h"

#include <random>

#include "dpcover/constructions.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/error.hpp"
#include "dpcover/formulas.hpp"

using namespace dpcover;

namespace {

// Oracle: unpruned scan over [m]^n checking every edge.
BigInt naive_count(const FullCover& c) {
  const std::size_t n = c.graph().vertex_count();
  const std::size_t m = c.fold();
  std::vector<std::uint32_t> x(n, 0);
  BigInt total = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < c.graph().edge_count() && ok; ++e) {
      const Edge& ed = c.graph().edge(e);
      if (c.sigma(e)(x[ed.u]) == x[ed.v]) ok = false;
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < n && ++x[i] == m) x[i++] = 0;
    if (i == n) break;
  }
  return total;
}

// Oracle: proper colourings of g with m colours by plain enumeration.
BigInt naive_chromatic(const Graph& g, std::size_t m) {
  return naive_count(canonical_cover(g, m));
}

// Oracle: signed colourings by plain enumeration.
BigInt naive_signed(const SignedGraph& sg, const std::vector<int>& colors) {
  const std::size_t n = sg.graph().vertex_count();
  std::vector<std::size_t> x(n, 0);
  BigInt total = 0;
  if (colors.empty()) return n == 0 ? 1 : 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < sg.graph().edge_count() && ok; ++e) {
      const Edge& ed = sg.graph().edge(e);
      if (colors[x[ed.u]] == sg.sign(e) * colors[x[ed.v]]) ok = false;
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < n && ++x[i] == colors.size()) x[i++] = 0;
    if (i == n) break;
  }
  return total;
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng() % 3 != 0) edges.push_back({i, j});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("count_brute examples") {
  CHECK(count_brute(canonical_cover(complete_graph(3), 3)).value == 6);
  CHECK(count_brute(even_pairing_cover(4, 4)).value == 60);
  CHECK(count_brute(canonical_cover(complete_graph(2), 1)).value == 0);
  CHECK(count_brute(canonical_cover(complete_graph(1), 4)).value == 4);

  Limits tight;
  tight.enumeration_budget = 100;
  CHECK_THROWS_AS(count_brute(canonical_cover(complete_graph(4), 4), tight), Error);
  try {
    count_brute(canonical_cover(complete_graph(4), 4), tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kResourceLimit);
  }
}

TEST_CASE("count_brute matches the unpruned oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = random_graph(n, rng);
    const std::size_t m = 1 + rng() % 4;
    const FullCover c = random_cover(g, m, rng());
    CHECK(count_brute(c).value == naive_count(c));
  }
}

TEST_CASE("inclusion-exclusion examples and limits") {
  CHECK(count_ie(canonical_cover(complete_graph(4), 5)).value == 120);
  CHECK(count_ie(even_pairing_cover(4, 6)).value == 462);
  CHECK(count_ie(odd_k4_cover(5)).value == 182);
  CHECK(count_ie(canonical_cover(Graph(3, {}), 3)).value == 27);

  Limits small;
  small.subset_limit = 5;
  try {
    count_ie(canonical_cover(complete_graph(4), 3), small);
    FAIL("expected resource-limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kResourceLimit);
  }
}

TEST_CASE("inclusion-exclusion equals brute force on random graphs and covers") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = random_graph(n, rng);
    const std::size_t m = 1 + rng() % 5;
    const FullCover c = random_cover(g, m, rng());
    CHECK(count_ie(c).value == count_brute(c).value);
  }
}

TEST_CASE("inclusion-exclusion equals brute force on every normalized K4 cover, m <= 3") {
  const Graph k4 = complete_graph(4);
  const InclusionExclusionCounter ie(k4);
  for (std::size_t m : {2U, 3U}) {
    const std::uint64_t r = factorial(m);
    for (std::uint64_t a = 0; a < r; ++a)
      for (std::uint64_t b = 0; b < r; ++b)
        for (std::uint64_t d = 0; d < r; ++d) {
          FullCover c = canonical_cover(k4, m);
          c.set_sigma(3, Permutation::unrank(m, a));
          c.set_sigma(4, Permutation::unrank(m, b));
          c.set_sigma(5, Permutation::unrank(m, d));
          CHECK(ie.count(c) == count_brute(c).value);
        }
  }
}

TEST_CASE("K4 identity examples") {
  const Graph k4 = complete_graph(4);
  const auto cat = catalog_subgraphs(k4);
  CHECK(count_k4_identity(cycle_stats(canonical_cover(k4, 4), cat), 4).value == 24);

  CycleStats even;
  even.t = {0, 0, 0, 0};
  even.q = {6, 6, 6};
  even.mi = std::vector<std::size_t>(6, 0);
  even.z = {0};
  CHECK(count_k4_identity(even, 6).value == 462);

  CycleStats odd = even;
  odd.q = {5, 2, 5};
  CHECK(count_k4_identity(odd, 5).value == 182);

  CycleStats wrong = even;
  wrong.q = {6, 6};
  CHECK_THROWS_AS(count_k4_identity(wrong, 6), Error);
}

TEST_CASE("K4 identity equals brute force on random covers") {
  const Graph k4 = complete_graph(4);
  const auto cat = catalog_subgraphs(k4);
  const CycleStatsEvaluator eval(cat);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const std::size_t m = 1 + seed % 8;
    const FullCover c = random_cover(k4, m, seed);
    CHECK(count_k4_identity(eval.evaluate(c), m).value == count_brute(c).value);
  }
}

TEST_CASE("Whitney expansion examples and falling factorials") {
  CHECK(chromatic_whitney(complete_graph(3), 3).value == 6);
  CHECK(chromatic_whitney(complete_graph(4), 4).value == 24);
  CHECK(chromatic_whitney(complete_graph(5), 7).value == 2520);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 0; m <= 12; ++m)
      CHECK(chromatic_whitney(complete_graph(n), m).value ==
            falling_factorial(static_cast<int>(n), static_cast<std::int64_t>(m)));
}

TEST_CASE("canonical covers count proper colourings") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = random_graph(n, rng);
    const std::size_t m = 1 + rng() % 5;
    const BigInt p = chromatic_whitney(g, m).value;
    CHECK(p == naive_chromatic(g, m));
    CHECK(count_ie(canonical_cover(g, m)).value == p);
  }
}

TEST_CASE("symmetric colour sets") {
  CHECK(ColorSetSpec(5).colors() == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK(ColorSetSpec(4).colors() == std::vector<int>{-2, -1, 1, 2});
  CHECK(ColorSetSpec(1).colors() == std::vector<int>{0});
  CHECK_THROWS_AS(ColorSetSpec(0), Error);
}

TEST_CASE("signed colouring examples") {
  CHECK(count_signed(all_negative_signing(4), ColorSetSpec(2)).value == 2);
  CHECK(count_signed(all_negative_signing(4), ColorSetSpec(4)).value == 60);
  CHECK(count_signed(all_negative_signing(1), ColorSetSpec(3)).value == 3);
  CHECK(count_signed(all_negative_signing(4), ColorSetSpec(10)).value == 5370);
  CHECK_THROWS_AS(count_signed(all_negative_signing(3), ColorSetSpec(1)), Error);
}

TEST_CASE("signed counts match enumeration and reduce to P(G) for all-positive signs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = random_graph(n, rng);
    std::vector<int> signs;
    for (std::size_t e = 0; e < g.edge_count(); ++e) signs.push_back(rng() % 2 ? 1 : -1);
    const unsigned lambda = 2 + static_cast<unsigned>(rng() % 5);
    const ColorSetSpec spec(lambda);
    CHECK(count_signed(SignedGraph(g, signs), spec).value ==
          naive_signed(SignedGraph(g, signs), spec.colors()));
    const SignedGraph positive(g, std::vector<int>(g.edge_count(), 1));
    CHECK(count_signed(positive, spec).value == chromatic_whitney(g, lambda).value);
  }
}

TEST_CASE("method names") {
  CHECK(method_name(CountMethod::kBrute) == "brute");
  CHECK(method_name(CountMethod::kInclusionExclusion) == "inclusion_exclusion");
}
