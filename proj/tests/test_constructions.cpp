#include "doctest.h"

#include "dpcover/constructions.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/error.hpp"
#include "dpcover/formulas.hpp"

using namespace dpcover;

TEST_CASE("even pairing cover swaps adjacent labels") {
  const FullCover c = even_pairing_cover(4, 4);
  for (const Permutation& p : c.sigmas()) CHECK(p.images() == std::vector<std::uint32_t>{1, 0, 3, 2});
  CHECK(even_pairing_cover(2, 2).graph().edge_count() == 1);
  CHECK_THROWS_AS(even_pairing_cover(4, 3), Error);
  CHECK_THROWS_AS(even_pairing_cover(4, 0), Error);
  CHECK_THROWS_AS(even_pairing_cover(1, 2), Error);
}

TEST_CASE("odd fold permutation") {
  CHECK(odd_fold_permutation(7).images() == std::vector<std::uint32_t>{1, 2, 0, 4, 3, 6, 5});
  CHECK(odd_fold_permutation(5).cycle_type() == std::vector<std::size_t>{3, 2});
  for (std::size_t m = 5; m <= 41; m += 2) {
    const Permutation f = odd_fold_permutation(m);
    CHECK(f.fixed_point_count() == 0);
    // Cube of f fixes exactly the three labels of its 3-cycle.
    CHECK(compose(f, compose(f, f)).fixed_point_count() == 3);
  }
  CHECK_THROWS_AS(odd_fold_permutation(3), Error);
  CHECK_THROWS_AS(odd_fold_permutation(6), Error);
}

TEST_CASE("even pairing count equals dual_k4 for even m") {
  for (std::size_t m = 2; m <= 8; m += 2) CHECK(count_brute(even_pairing_cover(4, m)).value == dual_k4(m));
  const InclusionExclusionCounter ie(complete_graph(4));
  for (std::size_t m = 2; m <= 100; m += 2)
    CHECK(ie.count(even_pairing_cover(4, m)) == dual_k4(static_cast<std::int64_t>(m)));
}

TEST_CASE("odd K4 construction attains dual_k4 for odd m") {
  CHECK(count_brute(odd_k4_cover(5)).value == 182);
  CHECK(count_brute(odd_k4_cover(7)).value == 984);
  const InclusionExclusionCounter ie(complete_graph(4));
  for (std::size_t m = 5; m <= 99; m += 2)
    CHECK(ie.count(odd_k4_cover(m)) == dual_k4(static_cast<std::int64_t>(m)));
  CHECK_THROWS_AS(odd_k4_cover(4), Error);
}

TEST_CASE("odd complete cover statistics") {
  const auto cat4 = catalog_subgraphs(complete_graph(4));
  const CycleStats s = cycle_stats(odd_complete_cover(4, 7), cat4);
  CHECK(s.sum_q() == 18);
  CHECK(s.sum_t() == 0);

  const auto cat5 = catalog_subgraphs(complete_graph(5));
  for (std::size_t m : {5U, 7U, 9U}) {
    const CycleStats s5 = cycle_stats(odd_complete_cover(5, m), cat5);
    CHECK(s5.sum_t() == 0);
    CHECK(s5.sum_q() == 5 * (3 * m - 3));
  }
  const FullCover c = odd_complete_cover(4, 5);
  CHECK(count_ie(c).value == count_brute(c).value);
  CHECK_THROWS_AS(odd_complete_cover(3, 5), Error);
}

TEST_CASE("constructions are triangle-free") {
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto cat = catalog_subgraphs(complete_graph(n));
    for (std::size_t m : {2U, 4U, 6U}) CHECK(is_cover_triangle_free(even_pairing_cover(n, m), cat));
    for (std::size_t m : {5U, 7U}) CHECK(is_cover_triangle_free(odd_complete_cover(n, m), cat));
  }
  const auto cat4 = catalog_subgraphs(complete_graph(4));
  for (std::size_t m : {5U, 7U, 9U}) CHECK(is_cover_triangle_free(odd_k4_cover(m), cat4));
}

TEST_CASE("all-negative signing matches dual_k4 at even lambda") {
  const SignedGraph sg = all_negative_signing(4);
  for (int s : sg.signs()) CHECK(s == -1);
  for (unsigned l = 1; l <= 8; ++l)
    CHECK(count_signed(sg, ColorSetSpec(2 * l)).value == dual_k4(2 * l));
}
