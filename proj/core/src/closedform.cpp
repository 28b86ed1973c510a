#include "diffset/closedform.hpp"

#include <stdexcept>
#include <string>

namespace diffset {

namespace {

Integer binomial(long n, unsigned long k) {
    if (n < 0 || static_cast<unsigned long>(n) < k) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
    return out;
}

void require_nonnegative(int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
}

}  // namespace

Integer count_having_3(int n) {
    require_nonnegative(n);
    return binomial(n, 2);
}

Integer count_having_5(int n) {
    require_nonnegative(n);
    return binomial(n / 2, 2) + binomial((n + 1) / 2, 2);
}

Integer count_having_7(int n) {
    require_nonnegative(n);
    Integer four_term_aps = 0;
    for (int i = 0; i <= 2; ++i) four_term_aps += binomial((n + i) / 3, 2);
    return binomial(n, 3) - count_having_5(n) + four_term_aps;
}

HavingFormulaResult having_formula(int n, int k) {
    switch (k) {
        case 3: return {n, k, count_having_3(n)};
        case 5: return {n, k, count_having_5(n)};
        case 7: return {n, k, count_having_7(n)};
        default:
            throw std::invalid_argument("closed forms exist only for |S-S| in {3, 5, 7}, got " +
                                        std::to_string(k));
    }
}

std::vector<int> having_divots(const DiffCountTable& table) {
    std::map<int, std::uint64_t> seq;
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        seq.emplace(static_cast<int>(k), table.counts[k]);
    }
    return find_divots(seq);
}

bool is_conjectured_divot_position(int k) {
    for (int i = 2; i * (i - 1) + 3 <= k; ++i) {
        if (i * (i - 1) + 3 == k) return true;
    }
    return false;
}

}  // namespace diffset
