#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dpcover {

// Bijection on {0, ..., m-1}.
class Permutation {
 public:
  Permutation() = default;

  // Throws invalid-input unless `images` is a bijection on {0..size-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t m);

  // Lexicographic rank in [0, m!) and its inverse; m <= 20.
  static Permutation unrank(std::size_t m, std::uint64_t rank);
  std::uint64_t rank() const;

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t fixed_point_count() const;

  // Cycle lengths, descending (an integer partition of size()).
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// outer ∘ inner: apply `inner` first.
Permutation compose(const Permutation& outer, const Permutation& inner);

// m! as a 64-bit value; throws overflow for m > 20.
std::uint64_t factorial(std::size_t m);

}  // namespace dpcover
