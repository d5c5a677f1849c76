#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dpcover/bigint.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

enum class CountMethod { kBrute, kInclusionExclusion, kK4Identity, kWhitney, kSigned };

std::string_view method_name(CountMethod method);

struct CountResult {
  BigInt value = 0;
  CountMethod method = CountMethod::kBrute;
};

// Guards for the exponential counters.
struct Limits {
  // Largest m^n (or lambda^n) a brute-force counter may enumerate.
  std::uint64_t enumeration_budget = 1'000'000'000;
  // Largest edge count for 2^t subset sums.
  std::size_t subset_limit = 24;

  // Defaults, with subset_limit overridden by DPCOVER_SUBSET_LIMIT if set.
  static Limits from_env();
};

// Symmetric colour set used for signed-graph colourings:
// {-h..-1, 0, 1..h} when lambda = 2h+1, {-h..-1, 1..h} when lambda = 2h.
class ColorSetSpec {
 public:
  explicit ColorSetSpec(unsigned lambda);

  unsigned lambda() const { return lambda_; }
  unsigned half() const { return lambda_ / 2; }
  const std::vector<int>& colors() const { return colors_; }

 private:
  unsigned lambda_;
  std::vector<int> colors_;
};

// Independent transversals by enumeration over [m]^n with pruning.
CountResult count_brute(const FullCover& c, const Limits& limits = {});

// Inclusion-exclusion over edge subsets. Each subset A contributes
// (-1)^|A| times, per component of (V, A), the number of labels at the
// component root fixed by every fundamental-cycle composite.
//
// Construction precomputes the subset structures of one graph so that many
// covers of it can be counted cheaply.
class InclusionExclusionCounter {
 public:
  explicit InclusionExclusionCounter(const Graph& g, const Limits& limits = {});

  BigInt count(const FullCover& c) const;

  std::size_t distinct_walks() const { return walks_.size(); }

 private:
  struct Group {
    std::uint32_t begin;  // range into walk_ids_
    std::uint32_t end;
  };
  struct SubsetPlan {
    std::int8_t sign;
    std::uint8_t tree_components;
    std::uint32_t group_begin;  // range into groups_
    std::uint32_t group_end;
  };

  Graph graph_;
  std::vector<ClosedWalk> walks_;
  std::vector<std::uint32_t> walk_ids_;
  std::vector<Group> groups_;
  std::vector<SubsetPlan> subsets_;
};

CountResult count_ie(const FullCover& c, const Limits& limits = {});

// m^4 - 6m^3 + 15m^2 - 16m + (3-m)·Σt + Σq - Σmi + z, valid for K4 covers.
// Throws invalid-input unless stats has K4's shape (4, 3, 6, 1).
CountResult count_k4_identity(const CycleStats& stats, std::size_t m);

// P(G, m) = Σ_{A ⊆ E} (-1)^|A| m^{k_A}.
CountResult chromatic_whitney(const Graph& g, std::size_t m, const Limits& limits = {});

// Maps f: V -> colors with f(u) != sign(uv)·f(v) on every edge.
CountResult count_signed(const SignedGraph& sg, const ColorSetSpec& spec,
                         const Limits& limits = {});

}  // namespace dpcover
