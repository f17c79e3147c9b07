#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "contsum/bigint.hpp"

namespace contsum {

// Dense univariate polynomial over arbitrary-precision integers.
//
// Coefficients are stored in ascending degree with no trailing zeros, so
// every value has exactly one representation; the zero polynomial is the
// empty vector and has no degree.
class IntPoly {
 public:
  IntPoly() = default;

  static IntPoly zero();
  static IntPoly constant(BigInt c);
  static IntPoly x();
  static IntPoly from_coeffs(std::vector<BigInt> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  BigInt coeff(int d) const;  // d >= 0; zero above the degree
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;
  IntPoly scale_x(const BigInt& c) const;  // p(X) -> p(c*X)

  std::string str() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.str();
}

}  // namespace contsum
