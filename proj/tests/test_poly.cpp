#include "contsum/poly.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using contsum::BigInt;
using contsum::IntPoly;

namespace {

// Independent reference: int64 coefficient vectors and a plain convolution.
std::vector<std::int64_t> conv(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

IntPoly lift(const std::vector<std::int64_t>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly::from_coeffs(std::move(v));
}

std::vector<std::int64_t> random_coeffs(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-1, 6);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  const int d = deg(rng);
  std::vector<std::int64_t> c;
  for (int i = 0; i <= d; ++i) c.push_back(coeff(rng));
  return c;
}

}  // namespace

TEST_CASE("zero polynomial has no degree and one representation") {
  CHECK(IntPoly::zero().is_zero());
  CHECK_FALSE(IntPoly::zero().degree().has_value());
  CHECK(IntPoly::constant(0) == IntPoly::zero());
  CHECK(IntPoly::from_coeffs({0, 0, 0}) == IntPoly::zero());
  CHECK(IntPoly::from_coeffs({}) == IntPoly::zero());
  CHECK(IntPoly::zero().coeff(0) == 0);
  CHECK(IntPoly::zero().coeff(7) == 0);
}

TEST_CASE("basic constructors") {
  CHECK(IntPoly::constant(5).degree() == 0);
  CHECK(IntPoly::constant(5).coeff(0) == 5);
  CHECK(IntPoly::x().degree() == 1);
  CHECK(IntPoly::x().coeff(1) == 1);
  CHECK(IntPoly::x().coeff(0) == 0);
  CHECK(IntPoly::from_coeffs({3, 0, 1, 0}).degree() == 2);
}

TEST_CASE("coefficient access past the degree is zero, negative throws") {
  const IntPoly p = IntPoly::from_coeffs({1, 2});
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(2) == 0);
  CHECK(p.coeff(100) == 0);
  CHECK_THROWS_AS(p.coeff(-1), std::invalid_argument);
}

TEST_CASE("arithmetic against frozen values") {
  const IntPoly x = IntPoly::x();
  CHECK(x * x - IntPoly::constant(1) == IntPoly::from_coeffs({-1, 0, 1}));
  CHECK((x + IntPoly::constant(1)) * (x - IntPoly::constant(1)) ==
        IntPoly::from_coeffs({-1, 0, 1}));
  CHECK(x * IntPoly::zero() == IntPoly::zero());
  CHECK(IntPoly::zero() + x == x);
  CHECK(-x == IntPoly::from_coeffs({0, -1}));
  // cancellation collapses the degree
  const IntPoly a = IntPoly::from_coeffs({1, 0, 1});
  const IntPoly b = IntPoly::from_coeffs({0, 0, 1});
  CHECK((a - b).degree() == 0);
  CHECK(a - b == IntPoly::constant(1));
}

TEST_CASE("multiplication matches an independent convolution") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = random_coeffs(rng);
    const auto b = random_coeffs(rng);
    CHECK(lift(a) * lift(b) == lift(conv(a, b)));
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly a = lift(random_coeffs(rng));
    const IntPoly b = lift(random_coeffs(rng));
    const IntPoly c = lift(random_coeffs(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly::zero());
    if (!a.is_zero() && !b.is_zero())
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("evaluation") {
  const IntPoly p = IntPoly::from_coeffs({0, -2, 0, 1});  // X^3 - 2X
  CHECK(p.eval(3) == 21);
  CHECK(p.eval(-2) == -4);
  CHECK(p.eval(0) == 0);
  CHECK(IntPoly::zero().eval(9) == 0);
  CHECK(IntPoly::constant(4).eval(1000) == 4);
}

TEST_CASE("argument scaling") {
  const IntPoly p = IntPoly::from_coeffs({1, 1, 1});
  CHECK(p.scale_x(2) == IntPoly::from_coeffs({1, 2, 4}));
  CHECK(p.scale_x(0) == IntPoly::constant(1));
  CHECK(p.scale_x(-1) == IntPoly::from_coeffs({1, -1, 1}));
  CHECK(IntPoly::zero().scale_x(3) == IntPoly::zero());
}

TEST_CASE("values never overflow") {
  IntPoly p = IntPoly::constant(1);
  const IntPoly big = IntPoly::from_coeffs({BigInt(1) << 62, 1});
  for (int i = 0; i < 4; ++i) p = p * big;
  CHECK(p.coeff(0) == BigInt(1) << 248);
  CHECK(p.degree() == 4);
}

TEST_CASE("printing") {
  CHECK(IntPoly::zero().str() == "0");
  CHECK(IntPoly::constant(-3).str() == "-3");
  CHECK(IntPoly::from_coeffs({0, -2, 0, 1}).str() == "X^3 - 2*X");
  CHECK(IntPoly::from_coeffs({-1, 0, 4}).str() == "4*X^2 - 1");
}
