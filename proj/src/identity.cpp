#include "contsum/identity.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "contsum/binomial.hpp"
#include "contsum/continuant.hpp"

namespace contsum {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

BigInt sign_pow(long long e) { return (e % 2 != 0) ? BigInt(-1) : BigInt(1); }

// One term of right-minus-left at position i.
BigInt rl_term(long long n, long long l, long long i) {
  return -binom(n - i, i) * binom(l + i, 2 * i + 1) +
         binom(n - i, i - 1) * binom(l + i, 2 * i);
}

}  // namespace

BigInt left_sum(long long n, long long l) {
  require(n >= 0 && l >= 0, "left_sum: n and l must be nonnegative");
  BigInt s = 0;
  for (long long i = 0; i <= l; ++i) s += binom(n - i, i) * binom(l + i, 2 * i + 1);
  return s;
}

BigInt right_sum(long long n, long long l) {
  require(n >= 0 && l >= 0, "right_sum: n and l must be nonnegative");
  BigInt s = 0;
  for (long long i = 0; i <= l; ++i) s += binom(n - i, i - 1) * binom(l + i, 2 * i);
  return s;
}

IdentityReport identity_report(long long n, long long l) {
  IdentityReport r;
  r.n = n;
  r.l = l;
  r.left = left_sum(n, l);
  r.right = right_sum(n, l);
  r.equal = r.left == r.right;
  return r;
}

bool head_sum_check(long long n, long long l) {
  require(n >= 0, "head_sum_check: n must be nonnegative");
  require(l > n, "head_sum_check: l must exceed n");
  BigInt s = 0;
  for (long long i = 0; i <= n; ++i) s += rl_term(n, l, i);
  return s == sign_pow(n + 1) * binom(l, n + 1);
}

BigInt u_kn(long long k, long long n) {
  require(k >= 1, "u_kn: k must be >= 1");
  return sign_pow(n) * binom(n + k, n + 1);
}

BigInt v_kn(long long k, long long n) {
  require(k >= 1, "v_kn: k must be >= 1");
  BigInt s = 0;
  for (long long i = n + 1; i <= n + k; ++i) s += rl_term(n, n + k, i);
  return s;
}

BigInt v_kn_clamped(long long k, long long n) {
  require(k >= 1, "v_kn_clamped: k must be >= 1");
  BigInt s = 0;
  for (long long i = std::max<long long>(0, n + 1); i <= n + k; ++i)
    s += rl_term(n, n + k, i);
  return s;
}

bool v_recurrence_holds(VStep kind, long long k, long long n) {
  require(k >= 1, "v_recurrence_holds: k must be >= 1");
  switch (kind) {
    case VStep::positive_step:
      require(n >= 0, "v_recurrence_holds: positive_step needs n >= 0");
      return v_kn(k + 1, n + 1) == v_kn(k, n + 1) - v_kn(k + 1, n);
    case VStep::zero_boundary:
      require(n == 0, "v_recurrence_holds: zero_boundary fixes n = 0");
      return v_kn(k + 1, 0) == 1 + v_kn(k, 0) - v_kn(k + 1, -1);
    case VStep::negative_step:
      require(n <= -1, "v_recurrence_holds: negative_step needs n <= -1");
      return v_kn(k + 1, n) == v_kn(k, n) - v_kn(k + 1, n - 1);
  }
  throw std::logic_error("v_recurrence_holds: unknown kind");
}

BigInt partial_sum(long long n, long long k, long long a, long long b) {
  require(n >= 0, "partial_sum: n must be nonnegative");
  require(k >= 1, "partial_sum: k must be >= 1");
  require(0 <= a && a <= b && b <= n + k, "partial_sum: need 0 <= a <= b <= n+k");
  BigInt s = 0;
  for (long long i = a; i <= b; ++i) s += rl_term(n, n + k, i);
  return s;
}

bool coeff_extraction_check(long long n, long long l) {
  require(l >= 1 && l <= n, "coeff_extraction_check: need 1 <= l <= n");
  const auto ni = static_cast<int>(n);
  const auto li = static_cast<int>(l);
  const IntPoly kn = continuant_poly(ni);
  const IntPoly knm1 = continuant_poly(ni - 1);
  const IntPoly k2lm1 = continuant_poly(2 * li - 1);
  const IntPoly k2l = continuant_poly(2 * li);
  const int d = ni + 1;
  const BigInt c1 = (kn * k2lm1).coeff(d);
  const BigInt c2 = (knm1 * k2l).coeff(d);
  const BigInt want = sign_pow(l + 1) * left_sum(n, l);
  bool ok = c1 == c2 && c1 == want && want == sign_pow(l + 1) * right_sum(n, l);
  if (2 * l + 1 <= n)
    ok = ok && continuant_poly(ni - 2 * li - 1) == knm1 * k2l - kn * k2lm1;
  return ok;
}

SubsetAnalysis subset_sums(long long n, long long l, long long cap) {
  require(n >= 0 && l >= 0, "subset_sums: n and l must be nonnegative");
  require(cap >= 2, "subset_sums: cap must be >= 2");
  require(l + 1 < 63 && (1LL << (l + 1)) <= cap, "subset_sums: 2^(l+1) exceeds cap");

  const int m = static_cast<int>(l) + 1;
  std::vector<BigInt> u(static_cast<std::size_t>(m));
  std::vector<BigInt> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    u[static_cast<std::size_t>(i)] = binom(n - i, i) * binom(l + i, 2 * i + 1);
    v[static_cast<std::size_t>(i)] = binom(n - i, i - 1) * binom(l + i, 2 * i);
  }

  SubsetAnalysis out;
  const std::uint64_t end = std::uint64_t{1} << m;
  out.records.reserve(end - 1);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    SubsetRecord rec;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        rec.subset.push_back(i);
        rec.u += u[static_cast<std::size_t>(i)];
        rec.v += v[static_cast<std::size_t>(i)];
      }
    out.records.push_back(std::move(rec));
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const SubsetRecord& a, const SubsetRecord& b) {
              if (a.subset.size() != b.subset.size())
                return a.subset.size() < b.subset.size();
              return a.subset < b.subset;
            });

  for (const auto& ri : out.records)
    for (const auto& rj : out.records)
      if (ri.u == rj.v) out.collisions.push_back({ri.subset, rj.subset, ri.u});
  return out;
}

}  // namespace contsum
