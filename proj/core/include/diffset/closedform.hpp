#pragma once

#include <map>
#include <vector>

#include "diffset/enumerate.hpp"
#include "diffset/rational.hpp"

namespace diffset {

/// 2^n P(|S-S| = 3) = C(n, 2): exactly the two-element sets.
Integer count_having_3(int n);
/// 2^n P(|S-S| = 5) = C(floor(n/2), 2) + C(floor((n+1)/2), 2): three-term APs.
Integer count_having_5(int n);
/// 2^n P(|S-S| = 7) = C(n, 3) - count_having_5(n) + sum_{i=0..2} C(floor((n+i)/3), 2):
/// non-AP triples plus four-term APs.
Integer count_having_7(int n);

struct HavingFormulaResult {
    int n = 0;
    int k = 0;
    Integer count;
};

/// Dispatches to the formula for k in {3, 5, 7}; std::invalid_argument otherwise.
HavingFormulaResult having_formula(int n, int k);

/// Indices i with value[i] > 0 whose nearest nonzero neighbours on both
/// sides exist and are strictly larger. Zero entries are skipped entirely.
template <typename Value>
std::vector<int> find_divots(const std::map<int, Value>& sequence) {
    std::vector<std::pair<int, const Value*>> nonzero;
    for (const auto& [index, value] : sequence) {
        if (value > Value(0)) nonzero.emplace_back(index, &value);
    }
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < nonzero.size(); ++i) {
        const Value& v = *nonzero[i].second;
        if (*nonzero[i - 1].second > v && *nonzero[i + 1].second > v) {
            out.push_back(nonzero[i].first);
        }
    }
    return out;
}

/// Divots of the having-distribution k -> P^H_n(k) of an exhaustive table.
std::vector<int> having_divots(const DiffCountTable& table);

/// True iff k = i(i-1) + 3 for some i > 1 (the conjectured divot positions).
bool is_conjectured_divot_position(int k);

}  // namespace diffset
