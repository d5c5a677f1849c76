#include "dpcover/formulas.hpp"

#include <string>

#include "dpcover/error.hpp"

namespace dpcover {

namespace {

BigInt quartic_even(BigInt m) {
  const BigInt m2 = checked_mul(m, m);
  const BigInt m3 = checked_mul(m2, m);
  const BigInt m4 = checked_mul(m3, m);
  BigInt value = checked_sub(m4, checked_mul(6, m3));
  value = checked_add(value, checked_mul(15, m2));
  return checked_sub(value, checked_mul(13, m));
}

}  // namespace

BigInt dual_k4(std::int64_t m) {
  if (m < 2) throw_invalid("dual_k4 needs m >= 2, got " + std::to_string(m));
  const BigInt even = quartic_even(m);
  return (m % 2 == 0) ? even : checked_sub(even, 3);
}

BigInt dual_small_complete(int n, std::int64_t m) {
  if (n == 2) {
    if (m < 1) throw_invalid("K2 closed form needs m >= 1");
    return checked_mul(m, m - 1);
  }
  if (n == 3) {
    if (m < 2) throw_invalid("K3 closed form needs m >= 2");
    return checked_add(checked_pow(m - 1, 3), 1);
  }
  throw_invalid("closed forms exist only for K2 and K3, got n = " + std::to_string(n));
}

BigInt complete_main_terms(int n, std::int64_t m) {
  if (n < 4) throw_invalid("main-term formula needs n >= 4, got n = " + std::to_string(n));
  const auto un = static_cast<unsigned>(n);
  const BigInt t = binomial(un, 2);
  const auto ut = static_cast<unsigned>(t);
  const BigInt c3 = checked_sub(checked_sub(binomial(ut, 3), binomial(un, 3)),
                                checked_mul(3, binomial(un, 4)));
  BigInt value = checked_pow(m, un);
  value = checked_sub(value, checked_mul(t, checked_pow(m, un - 1)));
  value = checked_add(value, checked_mul(binomial(ut, 2), checked_pow(m, un - 2)));
  value = checked_sub(value, checked_mul(c3, checked_pow(m, un - 3)));
  return value;
}

BoundPair complete_dual_bounds(int n, std::int64_t m) {
  BoundPair b;
  b.f_value = complete_main_terms(n, m);
  const auto t = static_cast<unsigned>(binomial(static_cast<unsigned>(n), 2));
  if (t + 1 > 120) throw_overflow("2^(t+1) does not fit in 128 bits");
  b.slack = checked_mul(checked_pow(2, t), checked_pow(m, static_cast<unsigned>(n - 4)));
  b.lower = checked_sub(b.f_value, b.slack);
  b.upper = checked_add(b.f_value, b.slack);
  b.threshold = checked_add(checked_pow(2, t + 1), static_cast<BigInt>(t) + n - 6);
  b.applies = static_cast<BigInt>(m) > b.threshold;
  return b;
}

BigInt falling_factorial(int n, std::int64_t m) {
  if (n < 1) throw_invalid("falling factorial needs n >= 1");
  BigInt value = 1;
  for (int i = 0; i < n; ++i) value = checked_mul(value, static_cast<BigInt>(m) - i);
  return value;
}

}  // namespace dpcover
