#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contsum/bigint.hpp"
#include "contsum/poly.hpp"

namespace contsum {

namespace detail {

inline bool det_entry_is_zero(const BigInt& v) { return v == 0; }
inline bool det_entry_is_zero(const IntPoly& p) { return p.is_zero(); }

inline BigInt det_one(const BigInt*) { return 1; }
inline IntPoly det_one(const IntPoly*) { return IntPoly::constant(1); }

template <typename Ring>
class CofactorDet {
 public:
  explicit CofactorDet(const std::vector<std::vector<Ring>>& m)
      : m_(m), n_(m.size()) {
    if (n_ > 64)
      throw std::invalid_argument("cofactor_determinant: dimension above 64");
    row_nz_.assign(n_, 0);
    col_nz_.assign(n_, 0);
    for (std::size_t r = 0; r < n_; ++r) {
      if (m[r].size() != n_)
        throw std::invalid_argument("cofactor_determinant: matrix not square");
      for (std::size_t c = 0; c < n_; ++c)
        if (!det_entry_is_zero(m[r][c])) {
          row_nz_[r] |= bit(c);
          col_nz_[c] |= bit(r);
        }
    }
  }

  Ring run() {
    if (n_ == 0) return det_one(static_cast<const Ring*>(nullptr));
    std::uint64_t full =
        n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
    return det(full, full);
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  Ring det(std::uint64_t rows, std::uint64_t cols) {
    if (std::popcount(rows) == 1) {
      int r = std::countr_zero(rows);
      int c = std::countr_zero(cols);
      return m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int best_count = 65;
    bool best_is_row = true;
    int best = -1;
    for (std::uint64_t s = rows; s != 0; s &= s - 1) {
      int r = std::countr_zero(s);
      int cnt = std::popcount(row_nz_[static_cast<std::size_t>(r)] & cols);
      if (cnt < best_count) {
        best_count = cnt;
        best_is_row = true;
        best = r;
      }
    }
    for (std::uint64_t s = cols; s != 0; s &= s - 1) {
      int c = std::countr_zero(s);
      int cnt = std::popcount(col_nz_[static_cast<std::size_t>(c)] & rows);
      if (cnt < best_count) {
        best_count = cnt;
        best_is_row = false;
        best = c;
      }
    }

    Ring acc{};
    if (best_count > 0) {
      if (best_is_row) {
        auto r = static_cast<std::size_t>(best);
        int ri = std::popcount(rows & (bit(r) - 1));
        for (std::uint64_t s = row_nz_[r] & cols; s != 0; s &= s - 1) {
          auto c = static_cast<std::size_t>(std::countr_zero(s));
          int ci = std::popcount(cols & (bit(c) - 1));
          Ring term = m_[r][c] * det(rows ^ bit(r), cols ^ bit(c));
          if ((ri + ci) % 2 == 0)
            acc = acc + term;
          else
            acc = acc - term;
        }
      } else {
        auto c = static_cast<std::size_t>(best);
        int ci = std::popcount(cols & (bit(c) - 1));
        for (std::uint64_t s = col_nz_[c] & rows; s != 0; s &= s - 1) {
          auto r = static_cast<std::size_t>(std::countr_zero(s));
          int ri = std::popcount(rows & (bit(r) - 1));
          Ring term = m_[r][c] * det(rows ^ bit(r), cols ^ bit(c));
          if ((ri + ci) % 2 == 0)
            acc = acc + term;
          else
            acc = acc - term;
        }
      }
    }
    memo_.emplace(key, acc);
    return acc;
  }

  const std::vector<std::vector<Ring>>& m_;
  std::size_t n_;
  std::vector<std::uint64_t> row_nz_;
  std::vector<std::uint64_t> col_nz_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Ring> memo_;
};

}  // namespace detail

// Determinant by cofactor expansion, always along the remaining row or
// column with the fewest nonzero entries.  Minors are bitmask views of the
// input and shared subproblems are memoized, so band matrices cost
// polynomial work instead of the exponential cost of the naive expansion.
// Division-free; the dimension must be at most 64.
template <typename Ring>
Ring cofactor_determinant(const std::vector<std::vector<Ring>>& m) {
  return detail::CofactorDet<Ring>(m).run();
}

}  // namespace contsum
