#include "contsum/continuant.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "contsum/determinant.hpp"
#include "doctest.h"

using contsum::BigInt;
using contsum::chebyshev_u;
using contsum::cofactor_determinant;
using contsum::continuant_poly;
using contsum::continuant_value;
using contsum::IntPoly;
using contsum::KStrategy;
using contsum::Mat2Int;
using contsum::Mat2Poly;
using contsum::matrix_power;
using contsum::matrix_product;
using contsum::PowStrategy;

namespace {

// Independent reference: textbook sum-over-permutations determinant, small
// int64 matrices only.
std::int64_t leibniz_det(const std::vector<std::vector<std::int64_t>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    std::int64_t prod = inversions % 2 != 0 ? -1 : 1;
    for (int i = 0; i < n; ++i)
      prod *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 1 : total;
}

std::vector<std::vector<std::int64_t>> tridiagonal(const std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = a[i];
    if (i + 1 < n) {
      m[i][i + 1] = 1;
      m[i + 1][i] = 1;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("first few polynomials, frozen") {
  CHECK(continuant_poly(-1) == IntPoly::zero());
  CHECK(continuant_poly(0) == IntPoly::constant(1));
  CHECK(continuant_poly(1) == IntPoly::x());
  CHECK(continuant_poly(2) == IntPoly::from_coeffs({-1, 0, 1}));
  CHECK(continuant_poly(3) == IntPoly::from_coeffs({0, -2, 0, 1}));
  CHECK(continuant_poly(7) == IntPoly::from_coeffs({0, -4, 0, 10, 0, -6, 0, 1}));
  CHECK(continuant_poly(12).degree() == 12);
  CHECK_THROWS_AS(continuant_poly(-2), std::invalid_argument);
}

TEST_CASE("all strategies agree") {
  for (int n = -1; n <= 24; ++n) {
    const IntPoly r = continuant_poly(n, KStrategy::recurrence);
    CHECK(r == continuant_poly(n, KStrategy::matrix_power));
    CHECK(r == continuant_poly(n, KStrategy::closed_form));
    CHECK(r == continuant_poly(n, KStrategy::determinant_oracle));
  }
}

TEST_CASE("determinant route bound") {
  CHECK_THROWS_AS(continuant_poly(65, KStrategy::determinant_oracle), std::invalid_argument);
  CHECK(continuant_poly(64, KStrategy::determinant_oracle).degree() == 64);
}

TEST_CASE("matrix power entries and determinant") {
  for (int n = 1; n <= 16; ++n) {
    const Mat2Poly m = matrix_power(n);
    CHECK(m.a11 == continuant_poly(n));
    CHECK(m.a12 == -continuant_poly(n - 1));
    CHECK(m.a21 == continuant_poly(n - 1));
    CHECK(m.a22 == -continuant_poly(n - 2));
    CHECK(m.det() == IntPoly::constant(1));
    CHECK(m == matrix_power(n, PowStrategy::repeated_multiply));
  }
  CHECK_THROWS_AS(matrix_power(0), std::invalid_argument);
  CHECK_THROWS_AS(matrix_power(-3), std::invalid_argument);
}

TEST_CASE("successive polynomials are coprime through the determinant relation") {
  for (int n = 1; n <= 20; ++n) {
    const IntPoly a = continuant_poly(n - 1);
    CHECK(a * a - continuant_poly(n) * continuant_poly(n - 2) == IntPoly::constant(1));
  }
}

TEST_CASE("general sequence: frozen example") {
  CHECK(continuant_value({1, 2, 3}) == 2);
  const Mat2Int m = matrix_product({1, 2, 3});
  CHECK(m.a11 == 2);
  CHECK(m.a21 == continuant_value({1, 2}));
  CHECK(m.a12 == -continuant_value({2, 3}));
  CHECK(m.a22 == -continuant_value({2}));
  CHECK(m.det() == 1);  // every factor has determinant 1
}

TEST_CASE("general sequence: edge cases") {
  CHECK(continuant_value({}) == 1);
  for (long long a = -5; a <= 5; ++a) CHECK(continuant_value({BigInt(a)}) == a);
  CHECK(continuant_value({4, 7}) == 27);
  CHECK_THROWS_AS(matrix_product({}), std::invalid_argument);
}

TEST_CASE("general sequence agrees with the permutation determinant") {
  std::vector<std::int64_t> seq;
  for (int len = 0; len <= 4; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      seq.clear();
      for (int i : idx) seq.push_back(i - 2);
      std::vector<BigInt> big(seq.begin(), seq.end());
      CHECK(continuant_value(big) == leibniz_det(tridiagonal(seq)));
      int p = len - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == 4) {
        idx[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
    }
  }
}

TEST_CASE("repeated coefficient specializes the polynomial") {
  for (int m = 0; m <= 12; ++m)
    for (long long x = -3; x <= 3; ++x) {
      std::vector<BigInt> rep(static_cast<std::size_t>(m), BigInt(x));
      CHECK(continuant_value(rep) == continuant_poly(m).eval(x));
      if (m >= 1) CHECK(matrix_product(rep) == matrix_power(m).eval_at(x));
    }
}

TEST_CASE("cofactor determinant basics") {
  using Mi = std::vector<std::vector<BigInt>>;
  CHECK(cofactor_determinant(Mi{}) == 1);
  CHECK(cofactor_determinant(Mi{{7}}) == 7);
  CHECK(cofactor_determinant(Mi{{1, 2}, {3, 4}}) == -2);
  CHECK(cofactor_determinant(Mi{{0, 0}, {0, 4}}) == 0);
  CHECK(cofactor_determinant(Mi{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(cofactor_determinant(Mi{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(cofactor_determinant(Mi{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
  CHECK_THROWS_AS(cofactor_determinant(Mi{{1, 2}}), std::invalid_argument);
  const Mi too_big(65, std::vector<BigInt>(65, 1));
  CHECK_THROWS_AS(cofactor_determinant(too_big), std::invalid_argument);
}

TEST_CASE("cofactor determinant against the permutation reference") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + iter % 5;
    std::vector<std::vector<std::int64_t>> raw(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    std::vector<std::vector<BigInt>> big(static_cast<std::size_t>(n),
                                         std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        raw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry(rng);
        big[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            raw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
    CHECK(cofactor_determinant(big) == leibniz_det(raw));
  }
}

TEST_CASE("polynomial-entry determinant reproduces the family") {
  const int n = 6;
  std::vector<std::vector<IntPoly>> t(static_cast<std::size_t>(n),
                                      std::vector<IntPoly>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    t[i][i] = IntPoly::x();
    if (i + 1 < static_cast<std::size_t>(n)) {
      t[i][i + 1] = IntPoly::constant(1);
      t[i + 1][i] = IntPoly::constant(1);
    }
  }
  CHECK(cofactor_determinant(t) == continuant_poly(n));
}

TEST_CASE("second-kind polynomials, frozen") {
  CHECK(chebyshev_u(0) == IntPoly::constant(1));
  CHECK(chebyshev_u(1) == IntPoly::from_coeffs({0, 2}));
  CHECK(chebyshev_u(2) == IntPoly::from_coeffs({-1, 0, 4}));
  CHECK(chebyshev_u(3) == IntPoly::from_coeffs({0, -4, 0, 8}));
  CHECK_THROWS_AS(chebyshev_u(-1), std::invalid_argument);
}

TEST_CASE("second-kind recurrence and the argument-doubling bridge") {
  for (int n = 0; n <= 18; ++n)
    CHECK(chebyshev_u(n + 2) ==
          IntPoly::from_coeffs({0, 2}) * chebyshev_u(n + 1) - chebyshev_u(n));
  for (int n = 0; n <= 20; ++n) CHECK(chebyshev_u(n) == continuant_poly(n).scale_x(2));
}
