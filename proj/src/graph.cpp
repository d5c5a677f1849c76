#include "dpcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dpcover/error.hpp"

namespace dpcover {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  for (Edge& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw_invalid("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + ") with n = " + std::to_string(n_));
    }
    if (e.u == e.v) throw_invalid("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw_invalid("parallel edges are not allowed");
  }
  edges_ = std::move(edges);
  index_matrix_.assign(n_ * n_, -1);
  incident_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    index_matrix_[e.u * n_ + e.v] = static_cast<std::int32_t>(i);
    index_matrix_[e.v * n_ + e.u] = static_cast<std::int32_t>(i);
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
  }
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return std::nullopt;
  const std::int32_t idx = index_matrix_[a * n_ + b];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

Vertex Graph::other_endpoint(std::size_t index, Vertex from) const {
  const Edge& e = edges_.at(index);
  if (e.u == from) return e.v;
  if (e.v == from) return e.u;
  throw_invalid("vertex " + std::to_string(from) + " is not an endpoint of edge " +
                std::to_string(index));
}

SignedGraph::SignedGraph(Graph graph, std::vector<int> signs)
    : graph_(std::move(graph)), signs_(std::move(signs)) {
  if (signs_.size() != graph_.edge_count()) {
    throw_invalid("signed graph needs exactly one sign per edge");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw_invalid("edge signs must be +1 or -1");
  }
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw_invalid("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

std::optional<std::size_t> SubgraphCatalog::triangle_index(Vertex a, Vertex b, Vertex c) const {
  std::array<Vertex, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(triangles.begin(), triangles.end(), key,
                             [](const Triangle& t, const std::array<Vertex, 3>& k) {
                               return t.vertices < k;
                             });
  if (it == triangles.end() || it->vertices != key) return std::nullopt;
  return static_cast<std::size_t>(it - triangles.begin());
}

SubgraphCatalog catalog_subgraphs(const Graph& g) {
  SubgraphCatalog cat;
  cat.graph = g;
  const auto n = static_cast<Vertex>(g.vertex_count());
  auto adj = [&g](Vertex a, Vertex b) { return g.adjacent(a, b); };

  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (adj(a, b) && adj(a, c) && adj(b, c)) cat.triangles.push_back({{a, b, c}});

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> quad{a, b, c, d};
          const std::array<std::array<Vertex, 4>, 3> orders{
              {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& cyc : orders) {
            bool ok = true;
            for (int i = 0; i < 4; ++i) ok = ok && adj(cyc[i], cyc[(i + 1) % 4]);
            if (ok) cat.four_cycles.push_back({cyc});
          }

          int present = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) present += adj(quad[i], quad[j]) ? 1 : 0;
          if (present < 5) continue;
          if (present == 6) {
            K4Copy k4{quad, {}};
            k4.triangles = {*cat.triangle_index(a, b, c), *cat.triangle_index(a, b, d),
                            *cat.triangle_index(a, c, d), *cat.triangle_index(b, c, d)};
            cat.k4s.push_back(k4);
          }
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              // Diamond with quad[i]quad[j] removed; its two triangles share
              // the opposite edge.
              std::array<Vertex, 2> rest{};
              int r = 0;
              for (int k = 0; k < 4; ++k)
                if (k != i && k != j) rest[r++] = quad[k];
              bool ok = true;
              for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y)
                  if (!(x == i && y == j)) ok = ok && adj(quad[x], quad[y]);
              if (!ok) continue;
              Diamond d{quad, {quad[i], quad[j]}, {}};
              d.triangles = {*cat.triangle_index(quad[i], rest[0], rest[1]),
                             *cat.triangle_index(quad[j], rest[0], rest[1])};
              std::sort(d.triangles.begin(), d.triangles.end());
              cat.diamonds.push_back(d);
            }
          }
        }
      }
    }
  }
  return cat;
}

ClosedWalk cycle_walk(const Graph& g, std::span<const Vertex> cyclic) {
  if (cyclic.size() < 2) throw_invalid("a cycle walk needs at least two vertices");
  ClosedWalk walk;
  walk.start = cyclic[0];
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    const Vertex from = cyclic[i];
    const Vertex to = cyclic[(i + 1) % cyclic.size()];
    const auto e = g.edge_index(from, to);
    if (!e) {
      throw_invalid("no edge between " + std::to_string(from) + " and " + std::to_string(to));
    }
    walk.steps.push_back({*e, from < to});
  }
  return walk;
}

namespace {

EdgeSubsetStructure structure_from_flags(const Graph& g, const std::vector<char>& in_subset) {
  const std::size_t n = g.vertex_count();
  EdgeSubsetStructure out;
  std::vector<std::int64_t> component_of(n, -1);
  // parent_step[v]: the step that enters v from its BFS parent.
  std::vector<WalkStep> parent_step(n);
  std::vector<Vertex> parent(n, 0);
  std::vector<char> tree_edge(g.edge_count(), 0);

  for (Vertex root = 0; root < n; ++root) {
    if (component_of[root] >= 0) continue;
    const auto comp = static_cast<std::int64_t>(out.components.size());
    std::vector<Vertex> members{root};
    component_of[root] = comp;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (std::size_t e : g.incident_edges(u)) {
        if (!in_subset[e]) continue;
        const Vertex w = g.other_endpoint(e, u);
        if (component_of[w] >= 0) continue;
        component_of[w] = comp;
        parent[w] = u;
        parent_step[w] = {e, g.edge(e).u == u};
        tree_edge[e] = 1;
        members.push_back(w);
        queue.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  out.component_count = out.components.size();
  out.fundamental_cycles.assign(out.component_count, {});

  auto path_from_root = [&](Vertex v, Vertex root) {
    std::vector<WalkStep> path;
    while (v != root) {
      path.push_back(parent_step[v]);
      v = parent[v];
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!in_subset[e] || tree_edge[e]) continue;
    const Edge& edge = g.edge(e);
    const auto comp = static_cast<std::size_t>(component_of[edge.u]);
    const Vertex root = out.components[comp].front();
    ClosedWalk walk;
    walk.start = root;
    walk.steps = path_from_root(edge.u, root);
    walk.steps.push_back({e, true});
    auto back = path_from_root(edge.v, root);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      walk.steps.push_back({it->edge, !it->forward});
    }
    out.fundamental_cycles[comp].push_back(std::move(walk));
  }
  return out;
}

}  // namespace

EdgeSubsetStructure edge_subset_structure(const Graph& g, std::span<const std::size_t> subset) {
  std::vector<char> flags(g.edge_count(), 0);
  for (std::size_t e : subset) {
    if (e >= g.edge_count()) throw_invalid("edge index out of range: " + std::to_string(e));
    flags[e] = 1;
  }
  return structure_from_flags(g, flags);
}

EdgeSubsetStructure edge_subset_structure(const Graph& g, std::uint64_t mask) {
  if (g.edge_count() < 64 && (mask >> g.edge_count()) != 0) {
    throw_invalid("edge mask has bits beyond the edge count");
  }
  if (g.edge_count() > 64) throw_invalid("edge mask form supports at most 64 edges");
  std::vector<char> flags(g.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) flags[e] = (mask >> e) & 1U;
  return structure_from_flags(g, flags);
}

}  // namespace dpcover
