#pragma once

#include "contsum/bigint.hpp"

namespace contsum {

// Binomial coefficient extended to every integer pair:
//   k < 0        -> 0
//   n < 0        -> (-1)^k * binom(k - n - 1, k)
//   0 <= n < k   -> 0
//   otherwise    -> classical value, computed by a multiplicative loop whose
//                   division is exact at every step
BigInt binom(long long n, long long k);

// Independent route for cross-checks: the falling factorial
// n(n-1)...(n-k+1) divided by k!.  Requires k >= 0 and throws
// std::logic_error if the division leaves a remainder.
BigInt binom_oracle(long long n, long long k);

// binom(n, i) == binom(n+1, i) - binom(n, i-1), the Pascal step that remains
// valid below the classical triangle.  Requires n < 0 and i >= 1.
bool negative_pascal_holds(long long n, long long i);

}  // namespace contsum
