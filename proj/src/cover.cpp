#include "dpcover/cover.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <random>
#include <string>

#include "dpcover/error.hpp"

namespace dpcover {

FullCover::FullCover(Graph graph, std::size_t m, std::vector<Permutation> sigma)
    : graph_(std::move(graph)), m_(m), sigma_(std::move(sigma)) {
  if (m_ == 0) throw_invalid("fold number must be at least 1");
  if (sigma_.size() != graph_.edge_count()) {
    throw_invalid("cover needs one permutation per edge: got " + std::to_string(sigma_.size()) +
                  ", graph has " + std::to_string(graph_.edge_count()));
  }
  inverse_.reserve(sigma_.size());
  for (std::size_t e = 0; e < sigma_.size(); ++e) {
    if (sigma_[e].size() != m_) {
      throw_invalid("permutation on edge " + std::to_string(e) + " has length " +
                    std::to_string(sigma_[e].size()) + ", expected " + std::to_string(m_));
    }
    inverse_.push_back(sigma_[e].inverse());
  }
}

void FullCover::set_sigma(std::size_t edge, const Permutation& p) {
  if (p.size() != m_) throw_invalid("permutation length does not match fold number");
  sigma_.at(edge) = p;
  inverse_[edge] = p.inverse();
}

FullCover build_cover(const Graph& g, std::size_t m, const std::map<Edge, Permutation>& sigma_map) {
  std::vector<Permutation> sigma;
  sigma.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    auto it = sigma_map.find(e);
    if (it == sigma_map.end()) {
      throw_invalid("missing permutation for edge " + std::to_string(e.u + 1) + "-" +
                    std::to_string(e.v + 1));
    }
    sigma.push_back(it->second);
  }
  if (sigma_map.size() != g.edge_count()) {
    for (const auto& [e, p] : sigma_map) {
      if (!g.edge_index(e.u, e.v) || e.u >= e.v) {
        throw_invalid("permutation given for non-edge " + std::to_string(e.u + 1) + "-" +
                      std::to_string(e.v + 1));
      }
    }
  }
  return FullCover(g, m, std::move(sigma));
}

FullCover canonical_cover(const Graph& g, std::size_t m) {
  return FullCover(g, m, std::vector<Permutation>(g.edge_count(), Permutation::identity(m)));
}

FullCover star_normalize(const FullCover& c, Vertex root) {
  const Graph& g = c.graph();
  if (root >= g.vertex_count()) throw_invalid("root vertex out of range");
  // relabel[v] maps old labels of fibre v to new labels.
  std::vector<Permutation> relabel(g.vertex_count(), Permutation::identity(c.fold()));
  for (std::size_t e : g.incident_edges(root)) {
    const Edge& edge = g.edge(e);
    if (edge.u == root) {
      relabel[edge.v] = c.sigma_inverse(e);
    } else {
      relabel[edge.u] = c.sigma(e);
    }
  }
  std::vector<Permutation> sigma;
  sigma.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    sigma.push_back(
        compose(relabel[edge.v], compose(c.sigma(e), relabel[edge.u].inverse())));
  }
  return FullCover(g, c.fold(), std::move(sigma));
}

Permutation composite_along_walk(const FullCover& c, const ClosedWalk& walk) {
  const Graph& g = c.graph();
  if (walk.steps.empty()) throw_invalid("closed walk has no steps");
  if (walk.start >= g.vertex_count()) throw_invalid("walk start out of range");
  Vertex at = walk.start;
  for (const WalkStep& s : walk.steps) {
    if (s.edge >= g.edge_count()) throw_invalid("walk uses an unknown edge");
    const Edge& e = g.edge(s.edge);
    const Vertex tail = s.forward ? e.u : e.v;
    if (tail != at) throw_invalid("walk is disconnected at edge " + std::to_string(s.edge));
    at = s.forward ? e.v : e.u;
  }
  if (at != walk.start) throw_invalid("walk is not closed");

  std::vector<std::uint32_t> images(c.fold());
  for (std::uint32_t x = 0; x < c.fold(); ++x) {
    std::uint32_t y = x;
    for (const WalkStep& s : walk.steps) y = c.cross(s.edge, s.forward, y);
    images[x] = y;
  }
  return Permutation(std::move(images));
}

std::size_t CycleStats::sum_t() const { return std::accumulate(t.begin(), t.end(), std::size_t{0}); }
std::size_t CycleStats::sum_q() const { return std::accumulate(q.begin(), q.end(), std::size_t{0}); }
std::size_t CycleStats::sum_mi() const {
  return std::accumulate(mi.begin(), mi.end(), std::size_t{0});
}
std::size_t CycleStats::sum_z() const { return std::accumulate(z.begin(), z.end(), std::size_t{0}); }

CycleStatsEvaluator::LiftPlan CycleStatsEvaluator::make_plan(const Graph& g,
                                                             std::span<const Vertex> vertices,
                                                             std::span<const Edge> edges) {
  auto local = [&](Vertex v) {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return static_cast<std::uint8_t>(it - vertices.begin());
  };
  LiftPlan plan;
  std::vector<char> reached(vertices.size(), 0);
  std::vector<char> used(edges.size(), 0);
  reached[0] = 1;
  std::deque<std::uint8_t> queue{0};
  while (!queue.empty()) {
    const std::uint8_t from = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (used[k]) continue;
      const std::uint8_t a = local(edges[k].u);
      const std::uint8_t b = local(edges[k].v);
      std::uint8_t to;
      bool forward;
      if (a == from && !reached[b]) {
        to = b;
        forward = true;
      } else if (b == from && !reached[a]) {
        to = a;
        forward = false;
      } else {
        continue;
      }
      const auto e = g.edge_index(edges[k].u, edges[k].v);
      if (!e) throw_invalid("catalog subgraph uses an edge missing from the cover graph");
      used[k] = 1;
      reached[to] = 1;
      plan.tree.push_back({*e, forward, from, to});
      queue.push_back(to);
    }
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (used[k]) continue;
    const auto e = g.edge_index(edges[k].u, edges[k].v);
    if (!e) throw_invalid("catalog subgraph uses an edge missing from the cover graph");
    plan.checks.push_back({*e, local(edges[k].u), local(edges[k].v)});
  }
  return plan;
}

CycleStatsEvaluator::CycleStatsEvaluator(const SubgraphCatalog& cat) : graph_(cat.graph) {
  const Graph& g = graph_;
  auto ordered = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };

  for (const Triangle& t : cat.triangles) {
    const auto& v = t.vertices;
    std::array<Edge, 3> edges{ordered(v[0], v[1]), ordered(v[1], v[2]), ordered(v[0], v[2])};
    triangles_.push_back(make_plan(g, v, edges));
  }
  for (const FourCycle& q : cat.four_cycles) {
    const auto& v = q.vertices;
    std::array<Edge, 4> edges{};
    for (int i = 0; i < 4; ++i) edges[i] = ordered(v[i], v[(i + 1) % 4]);
    four_cycles_.push_back(make_plan(g, v, edges));
  }
  for (const Diamond& d : cat.diamonds) {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (Edge{d.vertices[i], d.vertices[j]} != d.missing)
          edges.push_back({d.vertices[i], d.vertices[j]});
    diamonds_.push_back(make_plan(g, d.vertices, edges));
  }
  for (const K4Copy& k : cat.k4s) {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({k.vertices[i], k.vertices[j]});
    k4s_.push_back(make_plan(g, k.vertices, edges));
  }
}

std::size_t CycleStatsEvaluator::count_lifts(const FullCover& c, const LiftPlan& plan) {
  std::size_t count = 0;
  std::array<std::uint32_t, 4> label{};
  const auto m = static_cast<std::uint32_t>(c.fold());
  for (std::uint32_t x = 0; x < m; ++x) {
    label[0] = x;
    for (const TreeStep& s : plan.tree) label[s.to] = c.cross(s.edge, s.forward, label[s.from]);
    bool ok = true;
    for (const Check& k : plan.checks) {
      if (c.sigma(k.edge)(label[k.tail]) != label[k.head]) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

void CycleStatsEvaluator::evaluate_into(const FullCover& c, CycleStats& out) const {
  if (!(c.graph() == graph_)) throw_invalid("subgraph catalog was built for a different graph");
  auto fill = [&c](const std::vector<LiftPlan>& plans, std::vector<std::size_t>& dst) {
    dst.resize(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) dst[i] = count_lifts(c, plans[i]);
  };
  fill(triangles_, out.t);
  fill(four_cycles_, out.q);
  fill(diamonds_, out.mi);
  fill(k4s_, out.z);
}

CycleStats CycleStatsEvaluator::evaluate(const FullCover& c) const {
  CycleStats out;
  evaluate_into(c, out);
  return out;
}

CycleStats cycle_stats(const FullCover& c, const SubgraphCatalog& cat) {
  return CycleStatsEvaluator(cat).evaluate(c);
}

bool is_cover_triangle_free(const FullCover& c, const SubgraphCatalog& cat) {
  const CycleStats stats = cycle_stats(c, cat);
  return stats.sum_t() == 0;
}

bool diamond_bounds_hold(const CycleStats& stats, const SubgraphCatalog& cat) {
  for (std::size_t i = 0; i < cat.diamonds.size(); ++i) {
    const auto& tri = cat.diamonds[i].triangles;
    if (stats.mi.at(i) > std::min(stats.t.at(tri[0]), stats.t.at(tri[1]))) return false;
  }
  return true;
}

bool k4_bounds_hold(const CycleStats& stats, const SubgraphCatalog& cat) {
  for (std::size_t i = 0; i < cat.k4s.size(); ++i) {
    for (std::size_t tri : cat.k4s[i].triangles) {
      if (stats.z.at(i) > stats.t.at(tri)) return false;
    }
  }
  return true;
}

namespace {

// Unbiased draw in [0, bound) by rejection; avoids the implementation-defined
// behaviour of std::uniform_int_distribution.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

FullCover random_cover(const Graph& g, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw_invalid("fold number must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<Permutation> sigma;
  sigma.reserve(g.edge_count());
  std::vector<std::uint32_t> images(m);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::iota(images.begin(), images.end(), 0U);
    for (std::size_t i = m - 1; i > 0; --i) {
      std::swap(images[i], images[bounded_draw(rng, i + 1)]);
    }
    sigma.emplace_back(images);
  }
  return FullCover(g, m, std::move(sigma));
}

}  // namespace dpcover
