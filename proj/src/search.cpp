#include "dpcover/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "dpcover/error.hpp"

namespace dpcover {

std::string_view mode_name(SearchMode mode) {
  switch (mode) {
    case SearchMode::kMax:
      return "max";
    case SearchMode::kMin:
      return "min";
    case SearchMode::kBoth:
      return "both";
  }
  return "both";
}

std::string_view counter_name(CounterKind kind) {
  switch (kind) {
    case CounterKind::kBrute:
      return "brute";
    case CounterKind::kInclusionExclusion:
      return "inclusion_exclusion";
    case CounterKind::kK4Identity:
      return "k4_identity";
  }
  return "brute";
}

CounterKind default_counter(const Graph& g) {
  return g == complete_graph(4) ? CounterKind::kK4Identity : CounterKind::kInclusionExclusion;
}

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Permutation> conjugacy_representatives(std::size_t m) {
  if (m == 0) throw_invalid("fold number must be at least 1");
  std::vector<Permutation> reps;
  for (const auto& partition : integer_partitions(m)) {
    std::vector<std::uint32_t> images(m);
    std::size_t start = 0;
    for (std::size_t len : partition) {
      for (std::size_t i = 0; i < len; ++i) {
        images[start + i] = static_cast<std::uint32_t>(start + (i + 1) % len);
      }
      start += len;
    }
    reps.emplace_back(std::move(images));
  }
  return reps;
}

namespace {

class Evaluator {
 public:
  Evaluator(CounterKind kind, const Graph& g, const Limits& limits) : kind_(kind), limits_(limits) {
    switch (kind) {
      case CounterKind::kK4Identity:
        if (!(g == complete_graph(4))) throw_invalid("the k4_identity counter only applies to K4");
        stats_.emplace(catalog_subgraphs(g));
        break;
      case CounterKind::kInclusionExclusion:
        ie_.emplace(g, limits);
        break;
      case CounterKind::kBrute:
        break;
    }
  }

  BigInt operator()(const FullCover& c, CycleStats& scratch) const {
    switch (kind_) {
      case CounterKind::kK4Identity:
        stats_->evaluate_into(c, scratch);
        return count_k4_identity(scratch, c.fold()).value;
      case CounterKind::kInclusionExclusion:
        return ie_->count(c);
      case CounterKind::kBrute:
        return count_brute(c, limits_).value;
    }
    return 0;
  }

 private:
  CounterKind kind_;
  Limits limits_;
  std::optional<CycleStatsEvaluator> stats_;
  std::optional<InclusionExclusionCounter> ie_;
};

struct Extremes {
  bool any = false;
  BigInt max = 0;
  BigInt min = 0;
  std::uint64_t argmax = 0;
  std::uint64_t argmin = 0;
  std::map<BigInt, std::uint64_t> histogram;

  void offer(BigInt value, std::uint64_t index) {
    if (!any || value > max || (value == max && index < argmax)) {
      max = value;
      argmax = index;
    }
    if (!any || value < min || (value == min && index < argmin)) {
      min = value;
      argmin = index;
    }
    any = true;
  }

  void merge(const Extremes& other) {
    if (!other.any) return;
    if (!any) {
      *this = other;
      return;
    }
    if (other.max > max || (other.max == max && other.argmax < argmax)) {
      max = other.max;
      argmax = other.argmax;
    }
    if (other.min < min || (other.min == min && other.argmin < argmin)) {
      min = other.min;
      argmin = other.argmin;
    }
    for (const auto& [v, n] : other.histogram) histogram[v] += n;
  }
};

// Runs `work(begin, end, out)` over contiguous chunks of [0, total) on
// `threads` workers and merges the per-chunk extremes.
Extremes run_chunked(std::uint64_t total, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, Extremes&)>& work) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t chunk =
      std::max<std::uint64_t>(4096, (total + threads * 16ULL - 1) / (threads * 16ULL));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));

  std::atomic<std::uint64_t> next{0};
  std::mutex merge_mutex;
  Extremes result;
  std::exception_ptr failure;

  auto worker = [&] {
    Extremes local;
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) break;
        const std::uint64_t begin = c * chunk;
        work(begin, std::min(total, begin + chunk), local);
      }
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
    std::lock_guard lock(merge_mutex);
    result.merge(local);
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

std::vector<std::size_t> free_edges(const SearchSpec& spec) {
  const Graph& g = spec.graph;
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (spec.normalization == Normalization::kStar &&
        (edge.u == spec.root || edge.v == spec.root)) {
      continue;
    }
    out.push_back(e);
  }
  return out;
}

void validate(const SearchSpec& spec) {
  if (spec.m == 0) throw_invalid("fold number must be at least 1");
  if (spec.normalization == Normalization::kStar && spec.root >= spec.graph.vertex_count()) {
    throw_invalid("normalization root out of range");
  }
  if (spec.reduction == Reduction::kConjugacy && spec.normalization != Normalization::kStar) {
    throw_invalid("conjugacy reduction requires star normalization");
  }
}

std::optional<BigInt> power_or_empty(BigInt base, std::size_t exponent) {
  try {
    return checked_pow(base, static_cast<unsigned>(exponent));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Mixed-radix cover space: slot 0 is the most significant digit.
struct CoverSpace {
  std::vector<std::size_t> slots;
  std::vector<std::uint64_t> radix;
  std::vector<Permutation> first_choices;
  std::vector<Permutation> all;

  const Permutation& choice(std::size_t slot, std::uint64_t digit) const {
    return slot == 0 ? first_choices[digit] : all[digit];
  }

  void decode(std::uint64_t index, std::vector<std::uint64_t>& digits) const {
    digits.assign(slots.size(), 0);
    for (std::size_t k = slots.size(); k-- > 0;) {
      digits[k] = index % radix[k];
      index /= radix[k];
    }
  }

  FullCover materialize(const FullCover& base, std::uint64_t index) const {
    FullCover c = base;
    std::vector<std::uint64_t> digits;
    decode(index, digits);
    for (std::size_t k = 0; k < slots.size(); ++k) c.set_sigma(slots[k], choice(k, digits[k]));
    return c;
  }
};

}  // namespace

SearchResult search_exhaustive(const SearchSpec& spec) {
  validate(spec);
  const Graph& g = spec.graph;
  const std::size_t m = spec.m;
  const CounterKind kind = spec.counter.value_or(default_counter(g));

  CoverSpace space;
  space.slots = free_edges(spec);
  const std::size_t q = space.slots.size();
  const BigInt budget = static_cast<BigInt>(spec.budget);

  BigInt total = 1;
  if (q > 0) {
    const auto perms = m <= 20 ? static_cast<BigInt>(factorial(m)) : budget + 1;
    if (perms > budget) throw_resource(std::to_string(m) + "! permutations exceed the search budget");
    std::vector<Permutation> reps;
    std::uint64_t first_radix = static_cast<std::uint64_t>(perms);
    if (spec.reduction == Reduction::kConjugacy) {
      reps = conjugacy_representatives(m);
      first_radix = reps.size();
    }
    total = first_radix;
    for (std::size_t k = 1; k < q; ++k) {
      total *= perms;
      if (total > budget) break;
    }
    if (total > budget) {
      throw_resource("cover space of " + std::to_string(q) + " free slots at m = " +
                     std::to_string(m) + " exceeds the search budget of " +
                     std::to_string(spec.budget));
    }
    space.all.reserve(static_cast<std::size_t>(perms));
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(perms); ++r) {
      space.all.push_back(Permutation::unrank(m, r));
    }
    space.first_choices = spec.reduction == Reduction::kConjugacy ? std::move(reps) : space.all;
    space.radix.assign(q, static_cast<std::uint64_t>(perms));
    space.radix[0] = first_radix;
  }
  if (total > budget) throw_resource("cover space exceeds the search budget");

  const Evaluator evaluate(kind, g, spec.limits);
  const FullCover base = canonical_cover(g, m);
  const bool keep_histogram = spec.histogram && spec.reduction == Reduction::kNone;
  const auto count = static_cast<std::uint64_t>(total);

  Extremes ext = run_chunked(count, spec.threads, [&](std::uint64_t begin, std::uint64_t end,
                                                       Extremes& out) {
    FullCover cover = space.materialize(base, begin);
    std::vector<std::uint64_t> digits;
    space.decode(begin, digits);
    CycleStats scratch;
    for (std::uint64_t index = begin; index < end; ++index) {
      const BigInt value = evaluate(cover, scratch);
      out.offer(value, index);
      if (keep_histogram) ++out.histogram[value];
      // Odometer step: least significant slot first.
      for (std::size_t k = q; k-- > 0;) {
        if (++digits[k] < space.radix[k]) {
          cover.set_sigma(space.slots[k], space.choice(k, digits[k]));
          break;
        }
        digits[k] = 0;
        cover.set_sigma(space.slots[k], space.choice(k, 0));
      }
    }
  });

  return SearchResult{ext.max,
                      ext.min,
                      space.materialize(base, ext.argmax),
                      space.materialize(base, ext.argmin),
                      ext.argmax,
                      ext.argmin,
                      count,
                      total,
                      q,
                      kind,
                      true,
                      std::move(ext.histogram)};
}

SearchResult search_sampled(const SearchSpec& spec, std::uint64_t samples) {
  validate(spec);
  if (samples == 0) throw_invalid("sampled search needs at least one sample");
  const Graph& g = spec.graph;
  const CounterKind kind = spec.counter.value_or(default_counter(g));
  const Evaluator evaluate(kind, g, spec.limits);
  const bool star = spec.normalization == Normalization::kStar;

  auto make = [&](std::uint64_t k) {
    FullCover c = random_cover(g, spec.m, spec.seed + k);
    return star ? star_normalize(c, spec.root) : c;
  };

  Extremes ext = run_chunked(samples, spec.threads, [&](std::uint64_t begin, std::uint64_t end,
                                                         Extremes& out) {
    CycleStats scratch;
    for (std::uint64_t k = begin; k < end; ++k) {
      const BigInt value = evaluate(make(k), scratch);
      out.offer(value, k);
      if (spec.histogram) ++out.histogram[value];
    }
  });

  const std::size_t q = free_edges(spec).size();
  std::optional<BigInt> space_size;
  if (spec.m <= 20) space_size = power_or_empty(static_cast<BigInt>(factorial(spec.m)), q);

  return SearchResult{ext.max,
                      ext.min,
                      make(ext.argmax),
                      make(ext.argmin),
                      ext.argmax,
                      ext.argmin,
                      samples,
                      space_size,
                      q,
                      kind,
                      false,
                      std::move(ext.histogram)};
}

bool verify_reduction_equivalence(const Graph& g, std::size_t m, unsigned threads,
                                  std::uint64_t budget) {
  SearchSpec spec;
  spec.graph = g;
  spec.m = m;
  spec.threads = threads;
  spec.budget = budget;
  spec.reduction = Reduction::kNone;
  const SearchResult full = search_exhaustive(spec);
  spec.reduction = Reduction::kConjugacy;
  const SearchResult reduced = search_exhaustive(spec);
  return full.max_value == reduced.max_value && full.min_value == reduced.min_value;
}

}  // namespace dpcover
