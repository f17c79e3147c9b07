#pragma once

#include <vector>

#include "contsum/bigint.hpp"
#include "contsum/poly.hpp"

namespace contsum {

// Evaluation routes for the same polynomial family; they must all agree.
enum class KStrategy { recurrence, matrix_power, closed_form, determinant_oracle };
enum class PowStrategy { repeated_multiply, square_and_multiply };

struct Mat2Int {
  BigInt a11, a12, a21, a22;

  static Mat2Int identity() { return {1, 0, 0, 1}; }
  Mat2Int operator*(const Mat2Int& o) const;
  BigInt det() const { return a11 * a22 - a12 * a21; }
  bool operator==(const Mat2Int&) const = default;
};

struct Mat2Poly {
  IntPoly a11, a12, a21, a22;

  static Mat2Poly identity();
  Mat2Poly operator*(const Mat2Poly& o) const;
  IntPoly det() const { return a11 * a22 - a12 * a21; }
  Mat2Int eval_at(const BigInt& x) const;
  bool operator==(const Mat2Poly&) const = default;
};

// K_{-1} = 0, K_0 = 1, K_n = X*K_{n-1} - K_{n-2}.  Requires n >= -1; the
// determinant route additionally requires n <= 64.
IntPoly continuant_poly(int n, KStrategy strategy = KStrategy::recurrence);

// [[X,-1],[1,0]]^n for n >= 1; its entries are K_n, -K_{n-1}, K_{n-1},
// -K_{n-2}, and its determinant is 1.
Mat2Poly matrix_power(int n, PowStrategy strategy = PowStrategy::square_and_multiply);

// F(a_m) * F(a_{m-1}) * ... * F(a_1) with F(a) = [[a,-1],[1,0]], factors of
// later coefficients on the left.  a11 is the continuant of the whole
// sequence and a21 the continuant of everything but the last entry.
// The sequence must be nonempty.
Mat2Int matrix_product(const std::vector<BigInt>& a);

// Continuant of an arbitrary integer sequence via the three-term recurrence,
// cross-checked against the tridiagonal determinant (diagonal a_1..a_m, unit
// off-diagonals) whenever the sequence fits the determinant route.
BigInt continuant_value(const std::vector<BigInt>& a);

// U_0 = 1, U_1 = 2X, U_{n+2} = 2X*U_{n+1} - U_n.  Requires n >= 0.
IntPoly chebyshev_u(int n);

}  // namespace contsum
