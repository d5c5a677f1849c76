#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dpcover {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are kept in
// lexicographic order and that order defines the edge indices.
class Graph {
 public:
  Graph() = default;

  // Accepts edges in any order and orientation; rejects loops, parallel
  // edges and out-of-range endpoints with invalid-input.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  // Indices of edges incident to v, ascending.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incident_.at(v); }

  // The endpoint of edge `index` that is not `from`.
  Vertex other_endpoint(std::size_t index, Vertex from) const;

  bool is_complete() const { return edges_.size() == n_ * (n_ == 0 ? 0 : n_ - 1) / 2; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> index_matrix_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Graph plus a sign in {+1, -1} per edge (indexed like graph.edges()).
class SignedGraph {
 public:
  SignedGraph(Graph graph, std::vector<int> signs);

  const Graph& graph() const { return graph_; }
  const std::vector<int>& signs() const { return signs_; }
  int sign(std::size_t edge) const { return signs_.at(edge); }

 private:
  Graph graph_;
  std::vector<int> signs_;
};

Graph complete_graph(std::size_t n);

struct Triangle {
  std::array<Vertex, 3> vertices;  // ascending
};

struct FourCycle {
  // Cyclic order; lowest vertex first, its smaller cycle-neighbour second.
  std::array<Vertex, 4> vertices;
};

// K4 minus one edge.
struct Diamond {
  std::array<Vertex, 4> vertices;  // ascending
  Edge missing;
  std::array<std::size_t, 2> triangles;  // indices into SubgraphCatalog::triangles
};

struct K4Copy {
  std::array<Vertex, 4> vertices;  // ascending
  std::array<std::size_t, 4> triangles;
};

struct SubgraphCatalog {
  Graph graph;
  std::vector<Triangle> triangles;
  std::vector<FourCycle> four_cycles;
  std::vector<Diamond> diamonds;
  std::vector<K4Copy> k4s;

  std::optional<std::size_t> triangle_index(Vertex a, Vertex b, Vertex c) const;
};

// All triangles, 4-cycles, diamonds and K4 subgraphs (not necessarily
// induced). Ordering: by ascending vertex set, then for 4-cycles the
// orders (a,b,c,d), (a,b,d,c), (a,c,b,d) and for diamonds the missing edge
// in lexicographic order.
SubgraphCatalog catalog_subgraphs(const Graph& g);

struct WalkStep {
  std::size_t edge = 0;
  bool forward = true;  // true: from edge.u to edge.v

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
  friend auto operator<=>(const WalkStep&, const WalkStep&) = default;
};

struct ClosedWalk {
  Vertex start = 0;
  std::vector<WalkStep> steps;

  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
  friend auto operator<=>(const ClosedWalk&, const ClosedWalk&) = default;
};

// Closed walk visiting `cyclic` in order and returning to cyclic[0].
ClosedWalk cycle_walk(const Graph& g, std::span<const Vertex> cyclic);

struct EdgeSubsetStructure {
  // Components of the spanning subgraph (V, A); isolated vertices count.
  std::size_t component_count = 0;
  // Each component's vertices ascending; components ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components;
  // Per component, closed walks based at the component's smallest vertex,
  // one per non-forest edge of A; together they generate the cycle space.
  std::vector<std::vector<ClosedWalk>> fundamental_cycles;
};

EdgeSubsetStructure edge_subset_structure(const Graph& g, std::span<const std::size_t> subset);

// Same, for a subset given as a bit mask over edge indices (edge_count <= 64).
EdgeSubsetStructure edge_subset_structure(const Graph& g, std::uint64_t mask);

}  // namespace dpcover
