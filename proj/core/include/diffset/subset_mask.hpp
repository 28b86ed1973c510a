#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace diffset {

/// Largest ground-set width a single-word mask can hold.
inline constexpr int kMaxMaskWidth = 64;

/// A subset S of [n] = {0, ..., n-1}; bit i is set iff i is in S.
class SubsetMask {
public:
    SubsetMask() = default;
    /// Throws std::invalid_argument if width is outside [0, 64] or any bit at
    /// position >= width is set.
    SubsetMask(std::uint64_t bits, int width);

    static SubsetMask from_elements(std::span<const int> elements, int width);
    static SubsetMask full(int width);

    std::uint64_t bits() const noexcept { return bits_; }
    int width() const noexcept { return width_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(int i) const noexcept {
        return i >= 0 && i < width_ && ((bits_ >> i) & 1U) != 0;
    }

    /// {n-1-s : s in S}
    SubsetMask reflected() const noexcept;
    std::vector<int> elements() const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

private:
    std::uint64_t bits_ = 0;
    int width_ = 0;
};

inline constexpr std::uint64_t low_mask(int width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

/// Bit d is set iff d is in S-S and d >= 0 (bit 0 iff S is nonempty).
/// Computed as the union of S >> s over s in S.
inline std::uint64_t nonnegative_differences(std::uint64_t bits) noexcept {
    std::uint64_t diffs = 0;
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
        diffs |= bits >> std::countr_zero(rest);
    }
    return diffs;
}

/// |S-S| given the nonnegative-difference mask: 0 for the empty set, else
/// 2 * (#positive differences) + 1.
inline int diffset_size_from_differences(std::uint64_t nonneg_diffs) noexcept {
    if (nonneg_diffs == 0) return 0;
    return 2 * std::popcount(nonneg_diffs & ~std::uint64_t{1}) + 1;
}

int diffset_size(const SubsetMask& mask) noexcept;

bool is_odd_or_zero(long long k) noexcept;

}  // namespace diffset
