#pragma once

#include <vector>

#include "contsum/bigint.hpp"

namespace contsum {

// left:  sum over i = 0..l of binom(n-i, i)   * binom(l+i, 2i+1)
// right: sum over i = 0..l of binom(n-i, i-1) * binom(l+i, 2i)
// Both require n, l >= 0 and always agree.
BigInt left_sum(long long n, long long l);
BigInt right_sum(long long n, long long l);

struct IdentityReport {
  long long n = 0;
  long long l = 0;
  BigInt left;
  BigInt right;
  bool equal = false;
};
IdentityReport identity_report(long long n, long long l);

// For l > n >= 0 the first n+1 terms of right-minus-left collapse to a
// single signed binomial: the truncated sum equals (-1)^(n+1) * binom(l, n+1).
bool head_sum_check(long long n, long long l);

// u_{k,n} = (-1)^n * binom(n+k, n+1).  Requires k >= 1; n may be any integer.
BigInt u_kn(long long k, long long n);

// Tail of right-minus-left at l = n+k, summed over i = n+1 .. n+k exactly as
// written; terms with i < 0 vanish through the binomial conventions.
BigInt v_kn(long long k, long long n);

// Same sum with the lower limit clamped to 0; must agree with v_kn.
BigInt v_kn_clamped(long long k, long long n);

enum class VStep { positive_step, zero_boundary, negative_step };

// The three recurrences tying v_{k,n} values together:
//   positive_step: v_{k+1,n+1} == v_{k,n+1} - v_{k+1,n}      (n >= 0)
//   zero_boundary: v_{k+1,0}   == 1 + v_{k,0} - v_{k+1,-1}   (n == 0)
//   negative_step: v_{k+1,n}   == v_{k,n} - v_{k+1,n-1}      (n <= -1)
// All require k >= 1.
bool v_recurrence_holds(VStep kind, long long k, long long n);

// Partial sum of right-minus-left terms over i = a..b at l = n+k.
// Requires n >= 0, k >= 1 and 0 <= a <= b <= n+k.
BigInt partial_sum(long long n, long long k, long long a, long long b);

// The device equating the two sums: the degree-(n+1) coefficients of
// K_n*K_{2l-1} and K_{n-1}*K_{2l} agree and equal (-1)^(l+1) times the
// common sum value; when 2l+1 <= n the products also satisfy
// K_{n-2l-1} = -K_n*K_{2l-1} + K_{n-1}*K_{2l}.  Requires 1 <= l <= n.
bool coeff_extraction_check(long long n, long long l);

struct SubsetRecord {
  std::vector<int> subset;  // sorted indices into 0..l
  BigInt u;
  BigInt v;
};

struct CollisionPair {
  std::vector<int> u_subset;
  std::vector<int> v_subset;
  BigInt value;
};

struct SubsetAnalysis {
  std::vector<SubsetRecord> records;      // by cardinality, then lexicographic
  std::vector<CollisionPair> collisions;  // every (I, J) with u_I == v_J
};

// Restriction of each side to index subsets: u_I and v_I sum the single
// terms u_i = binom(n-i,i)*binom(l+i,2i+1) and v_i = binom(n-i,i-1)*binom(l+i,2i)
// over every nonempty subset I of {0..l}.  Requires n, l >= 0 and
// 2^(l+1) <= cap.
SubsetAnalysis subset_sums(long long n, long long l, long long cap = 4096);

}  // namespace contsum
