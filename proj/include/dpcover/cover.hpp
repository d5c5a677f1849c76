#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "dpcover/graph.hpp"
#include "dpcover/permutation.hpp"

namespace dpcover {

// Full m-fold cover of a graph. Fibre of v_i is {(v_i, 0..m-1)}; for edge
// e = (u, v) with u < v, (u, x) is matched to (v, sigma(e)(x)).
class FullCover {
 public:
  FullCover(Graph graph, std::size_t m, std::vector<Permutation> sigma);

  const Graph& graph() const { return graph_; }
  std::size_t fold() const { return m_; }
  const std::vector<Permutation>& sigmas() const { return sigma_; }
  const Permutation& sigma(std::size_t edge) const { return sigma_.at(edge); }
  const Permutation& sigma_inverse(std::size_t edge) const { return inverse_.at(edge); }

  void set_sigma(std::size_t edge, const Permutation& p);

  // Label reached from label x when crossing `edge` in the given direction.
  std::uint32_t cross(std::size_t edge, bool forward, std::uint32_t x) const {
    return forward ? sigma_[edge](x) : inverse_[edge](x);
  }

  friend bool operator==(const FullCover& a, const FullCover& b) {
    return a.m_ == b.m_ && a.graph_ == b.graph_ && a.sigma_ == b.sigma_;
  }

 private:
  Graph graph_;
  std::size_t m_ = 0;
  std::vector<Permutation> sigma_;
  std::vector<Permutation> inverse_;
};

// Validating constructor from a map keyed by edge (u < v).
FullCover build_cover(const Graph& g, std::size_t m, const std::map<Edge, Permutation>& sigma_map);

// Every edge carries the identity.
FullCover canonical_cover(const Graph& g, std::size_t m);

// Relabels fibres so every edge at `root` carries the identity. The result
// is isomorphic to `c`, so every coloring count is unchanged.
FullCover star_normalize(const FullCover& c, Vertex root);

// Composite of the matchings along a closed walk, applied in walk order.
Permutation composite_along_walk(const FullCover& c, const ClosedWalk& walk);

// Number of copies of each catalogued subgraph lifted into the cover.
struct CycleStats {
  std::vector<std::size_t> t;   // per triangle
  std::vector<std::size_t> q;   // per 4-cycle
  std::vector<std::size_t> mi;  // per diamond
  std::vector<std::size_t> z;   // per K4

  std::size_t sum_t() const;
  std::size_t sum_q() const;
  std::size_t sum_mi() const;
  std::size_t sum_z() const;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

// Precomputed lift plans for every subgraph in a catalog, reused across
// many covers of the same graph.
class CycleStatsEvaluator {
 public:
  explicit CycleStatsEvaluator(const SubgraphCatalog& cat);

  CycleStats evaluate(const FullCover& c) const;
  void evaluate_into(const FullCover& c, CycleStats& out) const;

 private:
  struct TreeStep {
    std::size_t edge;
    bool forward;
    std::uint8_t from;
    std::uint8_t to;
  };
  struct Check {
    std::size_t edge;
    std::uint8_t tail;  // local index of edge.u
    std::uint8_t head;  // local index of edge.v
  };
  struct LiftPlan {
    std::vector<TreeStep> tree;
    std::vector<Check> checks;
  };

  static LiftPlan make_plan(const Graph& g, std::span<const Vertex> vertices,
                            std::span<const Edge> edges);
  static std::size_t count_lifts(const FullCover& c, const LiftPlan& plan);

  Graph graph_;
  std::vector<LiftPlan> triangles_;
  std::vector<LiftPlan> four_cycles_;
  std::vector<LiftPlan> diamonds_;
  std::vector<LiftPlan> k4s_;
};

// t[i] is the fixed-point count of triangle i's composite; q, mi, z count
// root labels that extend to a copy of the subgraph in its subcover.
CycleStats cycle_stats(const FullCover& c, const SubgraphCatalog& cat);

// For a simple base graph every triangle of H lies over a triangle of G.
bool is_cover_triangle_free(const FullCover& c, const SubgraphCatalog& cat);

// mi[i] <= min(t[j], t[r]) for the two triangles of every diamond.
bool diamond_bounds_hold(const CycleStats& stats, const SubgraphCatalog& cat);

// z[i] <= min over the four triangles of every K4 copy.
bool k4_bounds_hold(const CycleStats& stats, const SubgraphCatalog& cat);

// Uniform random permutation per edge from a seeded mt19937_64 stream.
// The sequence is fixed by (g, m, seed) on every platform.
FullCover random_cover(const Graph& g, std::size_t m, std::uint64_t seed);

}  // namespace dpcover
