#pragma once

#include <cstdint>

#include "dpcover/bigint.hpp"

namespace dpcover {

// Maximum number of colourings over full m-fold covers of K4 (m >= 2):
// m^4 - 6m^3 + 15m^2 - 13m, minus 3 more when m is odd.
BigInt dual_k4(std::int64_t m);

// Closed forms for K2 (m >= 1): m(m-1), and K3 (m >= 2): (m-1)^3 + 1.
BigInt dual_small_complete(int n, std::int64_t m);

// Four leading terms of the dual colour function of K_n (n >= 4), t = C(n,2):
// m^n - t m^{n-1} + C(t,2) m^{n-2} - (C(t,3) - C(n,3) - 3C(n,4)) m^{n-3}.
BigInt complete_main_terms(int n, std::int64_t m);

struct BoundPair {
  BigInt lower = 0;     // main_terms - slack
  BigInt upper = 0;     // main_terms + slack
  BigInt f_value = 0;   // complete_main_terms(n, m)
  BigInt slack = 0;     // 2^t m^{n-4}
  BigInt threshold = 0; // bounds are asserted only for m > threshold
  bool applies = false; // m > threshold
};

// Window around complete_main_terms valid once m > 2^{t+1} + t + n - 6.
// Returned for any m so callers can report the threshold themselves.
BoundPair complete_dual_bounds(int n, std::int64_t m);

// P(K_n, m) = m (m-1) ... (m-n+1).
BigInt falling_factorial(int n, std::int64_t m);

}  // namespace dpcover
