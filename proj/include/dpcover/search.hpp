#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "dpcover/bigint.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"
#include "dpcover/permutation.hpp"

namespace dpcover {

enum class SearchMode { kMax, kMin, kBoth };
enum class Normalization { kStar, kNone };
enum class Reduction { kNone, kConjugacy };
enum class CounterKind { kBrute, kInclusionExclusion, kK4Identity };

std::string_view mode_name(SearchMode mode);
std::string_view counter_name(CounterKind kind);

// k4_identity for K4, inclusion_exclusion otherwise.
CounterKind default_counter(const Graph& g);

struct SearchSpec {
  Graph graph;
  std::size_t m = 2;
  SearchMode mode = SearchMode::kBoth;
  // Star normalization fixes every edge at `root` to the identity; the
  // remaining edges, in edge order, are the free slots.
  Normalization normalization = Normalization::kStar;
  Vertex root = 0;
  // Conjugacy reduction restricts the first free slot to one permutation per
  // cycle type. Requires star normalization. Preserves extrema only.
  Reduction reduction = Reduction::kNone;
  std::optional<CounterKind> counter;
  std::uint64_t budget = 100'000'000;  // max covers to evaluate
  unsigned threads = 1;                // 0 = hardware concurrency
  std::uint64_t seed = 0;              // sampled mode only
  bool histogram = false;
  Limits limits;
};

struct SearchResult {
  BigInt max_value = 0;
  BigInt min_value = 0;
  FullCover argmax_cover;
  FullCover argmin_cover;
  std::uint64_t argmax_index = 0;
  std::uint64_t argmin_index = 0;
  std::uint64_t evaluated = 0;
  // Size of the enumerated space; empty when it does not fit in 128 bits.
  std::optional<BigInt> space_size;
  std::size_t free_slots = 0;
  CounterKind counter = CounterKind::kBrute;
  bool exhaustive = true;
  // value -> number of covers; filled only when requested and unreduced.
  std::map<BigInt, std::uint64_t> histogram;
};

// Exact extrema over the (normalized, optionally reduced) space of full
// covers. Ties resolve to the smallest mixed-radix cover index, so the
// result does not depend on the thread count. Throws resource-limit when
// the space exceeds spec.budget.
SearchResult search_exhaustive(const SearchSpec& spec);

// Extrema over random_cover(graph, m, seed + k) for k < samples, star
// normalized when requested. Reduction is ignored.
SearchResult search_sampled(const SearchSpec& spec, std::uint64_t samples);

// One permutation per cycle type of S_m: cycles of descending length laid
// over consecutive integers, partitions in reverse lexicographic order.
std::vector<Permutation> conjugacy_representatives(std::size_t m);

// Integer partitions of m, parts descending, reverse lexicographic order.
std::vector<std::vector<std::size_t>> integer_partitions(std::size_t m);

// True iff reduced and unreduced star-normalized searches agree on both
// extrema. Throws resource-limit if the unreduced space exceeds `budget`.
bool verify_reduction_equivalence(const Graph& g, std::size_t m, unsigned threads = 1,
                                  std::uint64_t budget = 100'000'000);

}  // namespace dpcover
