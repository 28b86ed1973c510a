#include "diffset/subset_mask.hpp"

#include <stdexcept>
#include <string>

namespace diffset {

SubsetMask::SubsetMask(std::uint64_t bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > kMaxMaskWidth) {
        throw std::invalid_argument("subset width must lie in [0, 64], got " +
                                    std::to_string(width));
    }
    if ((bits & ~low_mask(width)) != 0) {
        throw std::invalid_argument("subset mask has bits at or above its width " +
                                    std::to_string(width));
    }
}

SubsetMask SubsetMask::from_elements(std::span<const int> elements, int width) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        if (e < 0 || e >= width) {
            throw std::invalid_argument("element " + std::to_string(e) +
                                        " outside [0, " + std::to_string(width) + ")");
        }
        bits |= std::uint64_t{1} << e;
    }
    return SubsetMask(bits, width);
}

SubsetMask SubsetMask::full(int width) { return SubsetMask(low_mask(width), width); }

SubsetMask SubsetMask::reflected() const noexcept {
    std::uint64_t out = 0;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
        out |= std::uint64_t{1} << (width_ - 1 - std::countr_zero(rest));
    }
    SubsetMask r;
    r.bits_ = out;
    r.width_ = width_;
    return r;
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest));
    }
    return out;
}

int diffset_size(const SubsetMask& mask) noexcept {
    return diffset_size_from_differences(nonnegative_differences(mask.bits()));
}

bool is_odd_or_zero(long long k) noexcept { return k == 0 || (k % 2) != 0; }

}  // namespace diffset
