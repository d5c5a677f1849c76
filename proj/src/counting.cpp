#include "dpcover/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "dpcover/error.hpp"

namespace dpcover {

std::string_view method_name(CountMethod method) {
  switch (method) {
    case CountMethod::kBrute:
      return "brute";
    case CountMethod::kInclusionExclusion:
      return "inclusion_exclusion";
    case CountMethod::kK4Identity:
      return "k4_identity";
    case CountMethod::kWhitney:
      return "whitney";
    case CountMethod::kSigned:
      return "signed";
  }
  return "unknown";
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("DPCOVER_SUBSET_LIMIT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v > 62) {
      throw_invalid(std::string("DPCOVER_SUBSET_LIMIT must be an integer in [1, 62], got '") +
                    env + "'");
    }
    limits.subset_limit = v;
  }
  return limits;
}

ColorSetSpec::ColorSetSpec(unsigned lambda) : lambda_(lambda) {
  if (lambda == 0) throw_invalid("lambda must be positive");
  const int h = static_cast<int>(lambda / 2);
  for (int c = -h; c <= h; ++c) {
    if (c == 0 && lambda % 2 == 0) continue;
    colors_.push_back(c);
  }
}

namespace {

void check_budget(std::size_t base, std::size_t n, std::uint64_t budget, const char* what) {
  BigInt total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<BigInt>(base);
    if (total > static_cast<BigInt>(budget)) {
      throw_resource(std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(n) +
                     " exceeds the enumeration budget of " + std::to_string(budget));
    }
  }
}

void check_subset_limit(const Graph& g, const Limits& limits) {
  if (g.edge_count() > limits.subset_limit || g.edge_count() > 62) {
    throw_resource("graph has " + std::to_string(g.edge_count()) +
                   " edges; 2^t subset sums are limited to t <= " +
                   std::to_string(std::min<std::size_t>(limits.subset_limit, 62)));
  }
}

// Earlier neighbours of each vertex: (neighbour, edge index).
std::vector<std::vector<std::pair<Vertex, std::size_t>>> back_neighbours(const Graph& g) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> back(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    back[edge.v].push_back({edge.u, e});
  }
  return back;
}

struct BruteState {
  const FullCover* cover;
  const std::vector<std::vector<std::pair<Vertex, std::size_t>>>* back;
  std::vector<std::uint32_t> label;
  std::vector<char> forbidden;
  std::size_t m;
  std::size_t n;
};

BigInt brute_from(BruteState& s, std::size_t v) {
  const auto& back = (*s.back)[v];
  // Mark labels at v excluded by already-labelled neighbours.
  std::size_t distinct = 0;
  std::vector<std::uint32_t> marked;
  marked.reserve(back.size());
  for (const auto& [u, e] : back) {
    const std::uint32_t banned = s.cover->sigma(e)(s.label[u]);
    if (!s.forbidden[v * s.m + banned]) {
      s.forbidden[v * s.m + banned] = 1;
      marked.push_back(banned);
      ++distinct;
    }
  }
  BigInt total = 0;
  if (v + 1 == s.n) {
    total = static_cast<BigInt>(s.m - distinct);
  } else {
    for (std::uint32_t x = 0; x < s.m; ++x) {
      if (s.forbidden[v * s.m + x]) continue;
      s.label[v] = x;
      total += brute_from(s, v + 1);
    }
  }
  for (std::uint32_t b : marked) s.forbidden[v * s.m + b] = 0;
  return total;
}

}  // namespace

CountResult count_brute(const FullCover& c, const Limits& limits) {
  const Graph& g = c.graph();
  check_budget(c.fold(), g.vertex_count(), limits.enumeration_budget, "brute-force count");
  if (g.vertex_count() == 0) return {1, CountMethod::kBrute};
  const auto back = back_neighbours(g);
  BruteState state{&c, &back, std::vector<std::uint32_t>(g.vertex_count(), 0),
                   std::vector<char>(g.vertex_count() * c.fold(), 0), c.fold(),
                   g.vertex_count()};
  return {brute_from(state, 0), CountMethod::kBrute};
}

InclusionExclusionCounter::InclusionExclusionCounter(const Graph& g, const Limits& limits)
    : graph_(g) {
  check_subset_limit(g, limits);
  std::map<ClosedWalk, std::uint32_t> walk_index;
  const std::uint64_t subsets = std::uint64_t{1} << g.edge_count();
  subsets_.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const EdgeSubsetStructure s = edge_subset_structure(g, mask);
    SubsetPlan plan{};
    plan.sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
    plan.group_begin = static_cast<std::uint32_t>(groups_.size());
    for (const auto& cycles : s.fundamental_cycles) {
      if (cycles.empty()) {
        ++plan.tree_components;
        continue;
      }
      Group group{static_cast<std::uint32_t>(walk_ids_.size()), 0};
      for (const ClosedWalk& w : cycles) {
        auto [it, inserted] = walk_index.try_emplace(w, static_cast<std::uint32_t>(walks_.size()));
        if (inserted) walks_.push_back(w);
        walk_ids_.push_back(it->second);
      }
      group.end = static_cast<std::uint32_t>(walk_ids_.size());
      groups_.push_back(group);
    }
    plan.group_end = static_cast<std::uint32_t>(groups_.size());
    subsets_.push_back(plan);
  }
}

BigInt InclusionExclusionCounter::count(const FullCover& c) const {
  if (!(c.graph() == graph_)) throw_invalid("cover graph differs from the counter's graph");
  const std::size_t m = c.fold();
  const std::size_t words = (m + 63) / 64;

  // Fixed-point bit set of every distinct walk composite.
  std::vector<std::uint64_t> fixed(walks_.size() * words, 0);
  for (std::size_t w = 0; w < walks_.size(); ++w) {
    const auto& steps = walks_[w].steps;
    std::uint64_t* bits = &fixed[w * words];
    for (std::uint32_t x = 0; x < m; ++x) {
      std::uint32_t y = x;
      for (const WalkStep& s : steps) y = c.cross(s.edge, s.forward, y);
      if (y == x) bits[x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }

  std::vector<BigInt> power(graph_.vertex_count() + 1, 1);
  for (std::size_t k = 1; k < power.size(); ++k) {
    power[k] = checked_mul(power[k - 1], static_cast<BigInt>(m));
  }

  std::vector<std::uint64_t> acc(words);
  BigInt total = 0;
  for (const SubsetPlan& plan : subsets_) {
    BigInt term = power[plan.tree_components];
    for (std::uint32_t gi = plan.group_begin; gi < plan.group_end && term != 0; ++gi) {
      const Group& group = groups_[gi];
      std::copy_n(&fixed[walk_ids_[group.begin] * words], words, acc.begin());
      for (std::uint32_t k = group.begin + 1; k < group.end; ++k) {
        const std::uint64_t* bits = &fixed[walk_ids_[k] * words];
        for (std::size_t i = 0; i < words; ++i) acc[i] &= bits[i];
      }
      std::size_t ones = 0;
      for (std::uint64_t word : acc) ones += static_cast<std::size_t>(std::popcount(word));
      term = checked_mul(term, static_cast<BigInt>(ones));
    }
    total = plan.sign > 0 ? checked_add(total, term) : checked_sub(total, term);
  }
  if (total < 0) throw Error(ErrorCode::kInternal, "inclusion-exclusion produced a negative count");
  return total;
}

CountResult count_ie(const FullCover& c, const Limits& limits) {
  return {InclusionExclusionCounter(c.graph(), limits).count(c), CountMethod::kInclusionExclusion};
}

CountResult count_k4_identity(const CycleStats& stats, std::size_t m) {
  if (stats.t.size() != 4 || stats.q.size() != 3 || stats.mi.size() != 6 || stats.z.size() != 1) {
    throw_invalid("the K4 identity needs statistics of a K4 cover");
  }
  const BigInt mm = static_cast<BigInt>(m);
  const BigInt value = mm * mm * mm * mm - 6 * mm * mm * mm + 15 * mm * mm - 16 * mm +
                       (3 - mm) * static_cast<BigInt>(stats.sum_t()) +
                       static_cast<BigInt>(stats.sum_q()) - static_cast<BigInt>(stats.sum_mi()) +
                       static_cast<BigInt>(stats.sum_z());
  if (value < 0) throw Error(ErrorCode::kInternal, "K4 identity produced a negative count");
  return {value, CountMethod::kK4Identity};
}

CountResult chromatic_whitney(const Graph& g, std::size_t m, const Limits& limits) {
  check_subset_limit(g, limits);
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> power(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) power[k] = checked_mul(power[k - 1], static_cast<BigInt>(m));

  std::vector<Vertex> parent(n);
  auto find = [&parent](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  BigInt total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::size_t components = n;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!((mask >> e) & 1U)) continue;
      const Vertex a = find(g.edge(e).u);
      const Vertex b = find(g.edge(e).v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    total = (std::popcount(mask) % 2 == 0) ? checked_add(total, power[components])
                                           : checked_sub(total, power[components]);
  }
  return {total, CountMethod::kWhitney};
}

namespace {

struct SignedState {
  const SignedGraph* sg;
  const std::vector<std::vector<std::pair<Vertex, std::size_t>>>* back;
  const std::vector<int>* colors;
  std::vector<int> color;
  std::size_t n;
};

BigInt signed_from(SignedState& s, std::size_t v) {
  const auto& back = (*s.back)[v];
  BigInt total = 0;
  if (v + 1 == s.n) {
    std::vector<int> banned;
    for (const auto& [u, e] : back) banned.push_back(s.sg->sign(e) * s.color[u]);
    std::sort(banned.begin(), banned.end());
    banned.erase(std::unique(banned.begin(), banned.end()), banned.end());
    return static_cast<BigInt>(s.colors->size() - banned.size());
  }
  for (int x : *s.colors) {
    bool ok = true;
    for (const auto& [u, e] : back) {
      if (s.sg->sign(e) * s.color[u] == x) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    s.color[v] = x;
    total += signed_from(s, v + 1);
  }
  return total;
}

}  // namespace

CountResult count_signed(const SignedGraph& sg, const ColorSetSpec& spec, const Limits& limits) {
  const Graph& g = sg.graph();
  if (spec.lambda() < 2 && g.edge_count() > 0) {
    throw_invalid("signed colourings need lambda >= 2 on graphs with edges");
  }
  check_budget(spec.lambda(), g.vertex_count(), limits.enumeration_budget, "signed count");
  if (g.vertex_count() == 0) return {1, CountMethod::kSigned};
  const auto back = back_neighbours(g);
  SignedState state{&sg, &back, &spec.colors(), std::vector<int>(g.vertex_count(), 0),
                    g.vertex_count()};
  return {signed_from(state, 0), CountMethod::kSigned};
}

}  // namespace dpcover
