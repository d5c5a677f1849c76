#pragma once

#include <cstdint>
#include <string>

#include "dpcover/error.hpp"

namespace dpcover {

// Exact signed integer used for every count and formula value.
using BigInt = __int128;

std::string to_string(BigInt value);

// Parses an optionally signed decimal string. Throws invalid-input.
BigInt parse_bigint(const std::string& text);

inline BigInt checked_add(BigInt a, BigInt b) {
  BigInt out;
  if (__builtin_add_overflow(a, b, &out)) throw_overflow("128-bit addition overflow");
  return out;
}

inline BigInt checked_sub(BigInt a, BigInt b) {
  BigInt out;
  if (__builtin_sub_overflow(a, b, &out)) throw_overflow("128-bit subtraction overflow");
  return out;
}

inline BigInt checked_mul(BigInt a, BigInt b) {
  BigInt out;
  if (__builtin_mul_overflow(a, b, &out)) throw_overflow("128-bit multiplication overflow");
  return out;
}

BigInt checked_pow(BigInt base, unsigned exponent);

BigInt binomial(unsigned n, unsigned k);

}  // namespace dpcover
