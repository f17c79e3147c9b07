#include "contsum/binomial.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"

using contsum::BigInt;
using contsum::binom;
using contsum::binom_oracle;
using contsum::negative_pascal_holds;

namespace {

// Independent reference for the classical triangle: Pascal DP table.
BigInt pascal_table(int n, int k) {
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c)
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("classical values") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(10, 5) == 252);
  CHECK(binom(1, 1) == 1);
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == pascal_table(n, k));
}

TEST_CASE("zero conventions") {
  CHECK(binom(3, 5) == 0);
  CHECK(binom(0, 1) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-2, -1) == 0);  // k < 0 wins over n < 0
  CHECK(binom(0, -100) == 0);
}

TEST_CASE("negative upper index") {
  for (int k = 0; k <= 6; ++k) CHECK(binom(-1, k) == (k % 2 != 0 ? -1 : 1));
  CHECK(binom(-2, 1) == -2);
  CHECK(binom(-3, 2) == 6);
  CHECK(binom(-2, 3) == -4);
  CHECK(binom(-4, 2) == 10);
}

TEST_CASE("negative upper index sign law") {
  for (long long n = -30; n <= -1; ++n)
    for (long long k = 0; k <= 40; ++k) {
      const BigInt v = binom(n, k);
      CHECK(v != 0);
      CHECK((k % 2 == 0 ? v > 0 : v < 0));
    }
}

TEST_CASE("falling-factorial oracle agrees everywhere") {
  for (long long n = -40; n <= 40; ++n)
    for (long long k = 0; k <= 80; ++k) CHECK(binom(n, k) == binom_oracle(n, k));
}

TEST_CASE("oracle spot values and preconditions") {
  CHECK(binom_oracle(-3, 2) == 6);  // (-3)(-4)/2
  CHECK(binom_oracle(7, 0) == 1);
  CHECK(binom_oracle(-1, 3) == -1);
  CHECK_THROWS_AS(binom_oracle(5, -1), std::invalid_argument);
}

TEST_CASE("pascal step below zero") {
  CHECK(negative_pascal_holds(-1, 1));  // 1*(-1) = 0 - 1
  for (long long n = -25; n <= -1; ++n)
    for (long long i = 1; i <= 40; ++i) CHECK(negative_pascal_holds(n, i));
  CHECK_THROWS_AS(negative_pascal_holds(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(negative_pascal_holds(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(negative_pascal_holds(-1, 0), std::invalid_argument);
}

TEST_CASE("classical pascal step with the signed extension at the corner") {
  for (long long n = 1; n <= 30; ++n)
    for (long long k = 1; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
  CHECK(binom(0, 0) == binom(-1, -1) + binom(-1, 0));
}

TEST_CASE("values grow past 64 bits without wrapping") {
  CHECK(binom(80, 40) == BigInt("107507208733336176461620"));
  CHECK(binom(80, 40) == binom_oracle(80, 40));
}
