#pragma once

namespace contsum {

// Hard ceilings for user-supplied bounds.  CONTSUM_MAX_BOUND, when set to a
// positive integer, replaces the fallback passed in.
long long hard_bound(long long fallback);

inline constexpr long long kTableBoundDefault = 64;
inline constexpr long long kVerifyBoundDefault = 512;
inline constexpr long long kBenchDegreeMax = 512;
inline constexpr long long kDeterminantDimMax = 64;
inline constexpr long long kSubsetCap = 4096;

}  // namespace contsum
