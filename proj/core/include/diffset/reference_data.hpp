#pragma once

#include <cstdint>
#include <span>

namespace diffset::reference {

inline constexpr int kMaxTabulatedN = 36;
inline constexpr int kTabulatedFringeM = 23;

/// Published exhaustive counts #{S of [n] : |S-S| = k}, indexed by k, for
/// 0 <= n <= 36 (length 2n, or 1 when n = 0).
std::span<const std::uint64_t> diff_counts(int n);

/// Published conditioned fringe counts for m = 23, indexed by k = 0..23
/// (denominator 4^22 = 2^44; the k = 23 entry is 0).
std::span<const std::uint64_t> conditioned_fringe_counts_m23();

}  // namespace diffset::reference
