#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "dpcover/error.hpp"
#include "dpcover/search.hpp"

namespace dpcover {

enum class OutputFormat { kJson, kTable, kCsv };

struct CommandOutcome {
  std::string command;
  nlohmann::json params;
  nlohmann::json payload;
  double elapsed_ms = 0;
  bool ok = true;
  // Set when !ok: an ErrorCode name or "verification-failed".
  std::string error_code;
  std::string error_message;
  int exit_code = 0;

  nlohmann::json to_json() const;
};

std::string render(const CommandOutcome& outcome, OutputFormat format);

struct VerifyK4Options {
  int m_max = 5;
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;
};

// m = 2..min(m_max, 5): exhaustive star-normalized search.
// m >= 6: inclusion-exclusion count of the even/odd extremal construction.
// Each value is compared with dual_k4(m).
CommandOutcome cmd_verify_k4(const VerifyK4Options& options);

struct SearchOptions {
  std::string graph = "K4";
  std::size_t m = 2;
  SearchMode mode = SearchMode::kBoth;
  Normalization normalization = Normalization::kStar;
  std::size_t root = 1;  // 1-indexed
  Reduction reduction = Reduction::kNone;
  std::optional<CounterKind> counter;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  bool histogram = false;
};

CommandOutcome cmd_search(const SearchOptions& options);

struct CountOptions {
  std::optional<std::string> cover_file;
  std::optional<std::string> graph;
  // canonical | even-pairing | odd-k4 | odd-complete | random
  std::optional<std::string> construct;
  std::size_t n = 4;
  std::size_t m = 2;
  std::optional<std::uint64_t> seed;
  // default | brute | ie | k4 | all
  std::string counter = "default";
};

CommandOutcome cmd_count(const CountOptions& options);

struct SignedOptions {
  std::size_t n = 4;
  unsigned lambda = 2;
  bool compare_dual = false;
  // Signed graph file; all-negative K_n when absent.
  std::optional<std::string> graph;
};

CommandOutcome cmd_signed(const SignedOptions& options);

struct BoundsOptions {
  int n = 4;
  std::int64_t m = 2;
  bool check_construction = false;
};

CommandOutcome cmd_bounds(const BoundsOptions& options);

struct ConstructOptions {
  std::string kind = "even-pairing";
  std::size_t n = 4;
  std::size_t m = 2;
  std::optional<std::uint64_t> seed;
};

CommandOutcome cmd_construct(const ConstructOptions& options);

// Builds the cover named by a construction kind.
FullCover make_construction(const std::string& kind, std::size_t n, std::size_t m,
                            std::optional<std::uint64_t> seed);

}  // namespace dpcover
