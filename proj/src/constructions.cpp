#include "dpcover/constructions.hpp"

#include <string>
#include <vector>

#include "dpcover/error.hpp"

namespace dpcover {

FullCover even_pairing_cover(std::size_t n, std::size_t m) {
  if (n < 2) throw_invalid("even pairing cover needs n >= 2");
  if (m < 2 || m % 2 != 0) throw_invalid("even pairing cover needs even m >= 2, got " + std::to_string(m));
  std::vector<std::uint32_t> images(m);
  for (std::uint32_t x = 0; x < m; ++x) images[x] = x ^ 1U;
  const Graph g = complete_graph(n);
  return FullCover(g, m, std::vector<Permutation>(g.edge_count(), Permutation(images)));
}

Permutation odd_fold_permutation(std::size_t m) {
  if (m < 5 || m % 2 == 0) throw_invalid("odd_fold_permutation needs odd m >= 5, got " + std::to_string(m));
  std::vector<std::uint32_t> images(m);
  images[0] = 1;
  images[1] = 2;
  images[2] = 0;
  for (std::uint32_t x = 3; x + 1 < m; x += 2) {
    images[x] = x + 1;
    images[x + 1] = x;
  }
  return Permutation(std::move(images));
}

FullCover odd_k4_cover(std::size_t m) {
  const Permutation f = odd_fold_permutation(m);
  const Permutation id = Permutation::identity(m);
  // Edge order of K4: 12, 13, 14, 23, 24, 34.
  return FullCover(complete_graph(4), m, {id, id, id, f, f, f.inverse()});
}

FullCover odd_complete_cover(std::size_t n, std::size_t m) {
  if (n < 4) throw_invalid("odd complete cover needs n >= 4");
  const Permutation f = odd_fold_permutation(m);
  const Graph g = complete_graph(n);
  return FullCover(g, m, std::vector<Permutation>(g.edge_count(), f));
}

SignedGraph all_negative_signing(std::size_t n) {
  Graph g = complete_graph(n);
  std::vector<int> signs(g.edge_count(), -1);
  return SignedGraph(std::move(g), std::move(signs));
}

}  // namespace dpcover
