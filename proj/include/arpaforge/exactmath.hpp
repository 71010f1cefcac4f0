#pragma once

#include <vector>

#include "arpaforge/rational.hpp"

namespace arpaforge {

/// C(n, r) with the vanishing convention: 0 whenever r < 0 or r > n.
/// Every alternating sum in this library relies on that convention to
/// clip its summation range. Requires n >= 0.
BigInt binom(long n, long r);

BigInt factorial(long n);

/// Sum over i in B of  prod_{a in A} (i - a) / prod_{b in B \ {i}} (i - b).
/// A and B are sets (duplicates rejected); requires |A| < |B|.
/// Evaluates to 1 when |B| = |A| + 1 and to 0 when |B| > |A| + 1.
Rational h_lagrange(const std::vector<long>& A, const std::vector<long>& B);

/// sum_{r >= 0} (-1)^r C(a, r) C(b - r, c - r), for c <= b.
/// Equals C(b - a, c) whenever b >= max(a, c).
BigInt s_sum(long a, long b, long c);

/// sum_{r >= 0} (-1)^r C(a, r) C(b - r, c - r) C(d - r, e - r),
/// for c <= b and e <= d. When b = a - 1 and d >= a > c >= d - e >= 0
/// this equals (-1)^c C(d - a, d - e).
BigInt u_sum(long a, long b, long c, long d, long e);

}  // namespace arpaforge
