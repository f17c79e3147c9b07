#include "contsum/binomial.hpp"

#include <stdexcept>

namespace contsum {

BigInt binom(long long n, long long k) {
  if (k < 0) return 0;
  if (n < 0) {
    BigInt c = binom(k - n - 1, k);
    return (k % 2 != 0) ? BigInt(-c) : c;
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt binom_oracle(long long n, long long k) {
  if (k < 0) throw std::invalid_argument("binom_oracle: k must be nonnegative");
  BigInt num = 1;
  BigInt den = 1;
  for (long long j = 0; j < k; ++j) {
    num *= BigInt(n) - j;
    den *= j + 1;
  }
  BigInt q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0) throw std::logic_error("binom_oracle: division left a remainder");
  return q;
}

bool negative_pascal_holds(long long n, long long i) {
  if (n >= 0) throw std::invalid_argument("negative_pascal_holds: n must be negative");
  if (i < 1) throw std::invalid_argument("negative_pascal_holds: i must be >= 1");
  return binom(n, i) == binom(n + 1, i) - binom(n, i - 1);
}

}  // namespace contsum
