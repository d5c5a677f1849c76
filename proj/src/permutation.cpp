#include "dpcover/permutation.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dpcover/error.hpp"

namespace dpcover {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw_invalid("not a bijection on {0.." + std::to_string(images_.size()) + "-1}");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t m) {
  Permutation p;
  p.images_.resize(m);
  for (std::size_t i = 0; i < m; ++i) p.images_[i] = static_cast<std::uint32_t>(i);
  return p;
}

std::uint64_t factorial(std::size_t m) {
  if (m > 20) throw_overflow(std::to_string(m) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

Permutation Permutation::unrank(std::size_t m, std::uint64_t rank) {
  const std::uint64_t total = factorial(m);
  if (rank >= total) throw_invalid("permutation rank out of range");
  std::vector<std::uint32_t> pool(m);
  for (std::size_t i = 0; i < m; ++i) pool[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_.reserve(m);
  std::uint64_t block = total;
  for (std::size_t i = 0; i < m; ++i) {
    block /= (m - i);
    const auto digit = static_cast<std::size_t>(rank / block);
    rank %= block;
    p.images_.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return p;
}

std::uint64_t Permutation::rank() const {
  const std::size_t m = images_.size();
  std::uint64_t block = factorial(m);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < m; ++i) {
    block /= (m - i);
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < m; ++j) smaller_later += images_[j] < images_[i] ? 1 : 0;
    r += smaller_later * block;
  }
  return r;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return inv;
}

bool Permutation::is_identity() const { return fixed_point_count() == images_.size(); }

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i ? 1 : 0;
  return count;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw_invalid("composing permutations of different sizes");
  std::vector<std::uint32_t> images(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    images[i] = outer(inner(static_cast<std::uint32_t>(i)));
  }
  return Permutation(std::move(images));
}

}  // namespace dpcover
