#include "contsum/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace contsum {

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::zero() { return {}; }

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::x() {
  IntPoly p;
  p.coeffs_ = {0, 1};
  return p;
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> coeffs) {
  IntPoly p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

std::optional<int> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

BigInt IntPoly::coeff(int d) const {
  if (d < 0) throw std::invalid_argument("IntPoly::coeff: negative degree");
  if (static_cast<std::size_t>(d) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::scale_x(const BigInt& c) const {
  IntPoly p;
  p.coeffs_.reserve(coeffs_.size());
  BigInt pow = 1;
  for (const auto& a : coeffs_) {
    p.coeffs_.push_back(a * pow);
    pow *= c;
  }
  p.normalize();
  return p;
}

std::string IntPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(coeffs_.size()) - 1; d >= 0; --d) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (d == 0 || mag != 1) os << mag.str();
    if (d > 0) {
      if (mag != 1) os << '*';
      os << 'X';
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.normalize();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  r.normalize();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

}  // namespace contsum
