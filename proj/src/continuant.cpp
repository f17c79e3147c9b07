#include "contsum/continuant.hpp"

#include <stdexcept>
#include <utility>

#include "contsum/binomial.hpp"
#include "contsum/determinant.hpp"

namespace contsum {

Mat2Int Mat2Int::operator*(const Mat2Int& o) const {
  return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
          a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

Mat2Poly Mat2Poly::identity() {
  return {IntPoly::constant(1), IntPoly::zero(), IntPoly::zero(), IntPoly::constant(1)};
}

Mat2Poly Mat2Poly::operator*(const Mat2Poly& o) const {
  return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
          a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

Mat2Int Mat2Poly::eval_at(const BigInt& x) const {
  return {a11.eval(x), a12.eval(x), a21.eval(x), a22.eval(x)};
}

namespace {

IntPoly k_recurrence(int n) {
  IntPoly km2 = IntPoly::zero();
  IntPoly km1 = IntPoly::constant(1);
  if (n == -1) return km2;
  const IntPoly x = IntPoly::x();
  for (int j = 1; j <= n; ++j) {
    IntPoly k = x * km1 - km2;
    km2 = std::move(km1);
    km1 = std::move(k);
  }
  return km1;
}

IntPoly k_closed_form(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  BigInt sign = 1;
  for (long long k = 0; 2 * k <= n; ++k) {
    c[static_cast<std::size_t>(n - 2 * k)] = sign * binom(n - k, k);
    sign = -sign;
  }
  return IntPoly::from_coeffs(std::move(c));
}

IntPoly k_determinant(int n) {
  auto m = static_cast<std::size_t>(n);
  std::vector<std::vector<IntPoly>> t(m, std::vector<IntPoly>(m));
  for (std::size_t i = 0; i < m; ++i) {
    t[i][i] = IntPoly::x();
    if (i + 1 < m) {
      t[i][i + 1] = IntPoly::constant(1);
      t[i + 1][i] = IntPoly::constant(1);
    }
  }
  return cofactor_determinant(t);
}

}  // namespace

IntPoly continuant_poly(int n, KStrategy strategy) {
  if (n < -1) throw std::invalid_argument("continuant_poly: n must be >= -1");
  if (n == -1) return IntPoly::zero();
  switch (strategy) {
    case KStrategy::recurrence:
      return k_recurrence(n);
    case KStrategy::matrix_power:
      return n == 0 ? IntPoly::constant(1) : matrix_power(n).a11;
    case KStrategy::closed_form:
      return k_closed_form(n);
    case KStrategy::determinant_oracle:
      if (n > 64)
        throw std::invalid_argument("continuant_poly: determinant route needs n <= 64");
      return k_determinant(n);
  }
  throw std::logic_error("continuant_poly: unknown strategy");
}

Mat2Poly matrix_power(int n, PowStrategy strategy) {
  if (n < 1) throw std::invalid_argument("matrix_power: n must be >= 1");
  const Mat2Poly base{IntPoly::x(), -IntPoly::constant(1), IntPoly::constant(1),
                      IntPoly::zero()};
  if (strategy == PowStrategy::repeated_multiply) {
    Mat2Poly acc = base;
    for (int i = 1; i < n; ++i) acc = acc * base;
    return acc;
  }
  int top = 0;
  while ((n >> (top + 1)) != 0) ++top;
  Mat2Poly acc = base;
  for (int b = top - 1; b >= 0; --b) {
    acc = acc * acc;
    if ((n >> b) & 1) acc = acc * base;
  }
  return acc;
}

Mat2Int matrix_product(const std::vector<BigInt>& a) {
  if (a.empty()) throw std::invalid_argument("matrix_product: empty sequence");
  auto factor = [](const BigInt& v) { return Mat2Int{v, -1, 1, 0}; };
  Mat2Int acc = factor(a.front());
  for (std::size_t j = 1; j < a.size(); ++j) acc = factor(a[j]) * acc;
  return acc;
}

BigInt continuant_value(const std::vector<BigInt>& a) {
  if (a.empty()) return 1;
  BigInt km2 = 1;
  BigInt km1 = a.front();
  for (std::size_t j = 1; j < a.size(); ++j) {
    BigInt k = a[j] * km1 - km2;
    km2 = std::move(km1);
    km1 = std::move(k);
  }
  if (a.size() <= 64) {
    const std::size_t m = a.size();
    std::vector<std::vector<BigInt>> t(m, std::vector<BigInt>(m, BigInt(0)));
    for (std::size_t i = 0; i < m; ++i) {
      t[i][i] = a[i];
      if (i + 1 < m) {
        t[i][i + 1] = 1;
        t[i + 1][i] = 1;
      }
    }
    if (cofactor_determinant(t) != km1)
      throw std::logic_error("continuant_value: recurrence and determinant disagree");
  }
  return km1;
}

IntPoly chebyshev_u(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: n must be >= 0");
  IntPoly um1 = IntPoly::constant(1);
  if (n == 0) return um1;
  const IntPoly two_x = IntPoly::from_coeffs({0, 2});
  IntPoly u = two_x;
  for (int j = 2; j <= n; ++j) {
    IntPoly next = two_x * u - um1;
    um1 = std::move(u);
    u = std::move(next);
  }
  return u;
}

}  // namespace contsum
