#pragma once

#include <cstddef>

#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"
#include "dpcover/permutation.hpp"

namespace dpcover {

// K_n cover where every edge swaps labels 2k <-> 2k+1 (m even, m >= 2).
FullCover even_pairing_cover(std::size_t n, std::size_t m);

// For odd m >= 5: the 3-cycle 0->1->2->0 together with the transpositions
// (3 4), (5 6), ..., (m-2 m-1). Has no fixed points.
Permutation odd_fold_permutation(std::size_t m);

// K4 cover for odd m >= 5: edges at v1 carry the identity, sigma(v2v3) =
// sigma(v2v4) = f and sigma(v3v4) = f^-1, f = odd_fold_permutation(m).
FullCover odd_k4_cover(std::size_t m);

// K_n cover (n >= 4, odd m >= 5) with f = odd_fold_permutation(m) on every edge.
FullCover odd_complete_cover(std::size_t n, std::size_t m);

// K_n with every edge signed -1.
SignedGraph all_negative_signing(std::size_t n);

}  // namespace dpcover
