#include "dpcover/bigint.hpp"

#include <algorithm>

namespace dpcover {

std::string to_string(BigInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with the negative magnitude so INT128_MIN does not overflow.
  BigInt v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    const int digit = static_cast<int>(-(v % 10));
    digits.push_back(static_cast<char>('0' + digit));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw_invalid("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw_invalid("malformed integer literal: " + text);
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw_invalid("malformed integer literal: " + text);
    value = checked_add(checked_mul(value, 10), negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

BigInt checked_pow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // Exact at every step: result * (n - k + i) is divisible by i.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

}  // namespace dpcover
