#pragma once

#include <string>
#include <string_view>

#include "diffset/bounds.hpp"
#include "diffset/enumerate.hpp"
#include "diffset/fringe.hpp"

namespace diffset::io {

struct RunMetadata {
    double elapsed_seconds = 0.0;
    unsigned workers = 1;
};

/// `n,k,count`, one row per nonzero count.
std::string dist_csv(const DiffCountTable& table);
std::string dist_csv(const CondDiffCountTable& table);
/// {n, conditioned, elapsed_seconds, workers, total, counts: [[k, count], ...]}
std::string dist_json(const DiffCountTable& table, const RunMetadata& meta);
std::string dist_json(const CondDiffCountTable& table, const RunMetadata& meta);
/// Inverse of dist_csv; std::invalid_argument on a malformed document.
DiffCountTable parse_dist_csv(std::string_view text);

/// `m,conditioned,k,count,denominator_log4`, one row per k in [0, m].
std::string fringe_csv(const FringeCounts& counts);
std::string fringe_json(const FringeCounts& counts, const RunMetadata& meta);
FringeCounts parse_fringe_csv(std::string_view text);

/// `n,trials,seed,generator,missing,count`, one row per nonzero bucket.
std::string sample_csv(const SampleHistogram& histogram);
std::string sample_json(const SampleHistogram& histogram, const RunMetadata& meta);

/// {m, clipped_j, error_bound, g, j, ell, diffs, verdicts, ruler_constant,
/// sum_identity, diagnostics}; each endpoint is {decimal, num, den}.
std::string bounds_json(const BoundsReport& report);
/// `kind,k,lo,hi,lo_num,lo_den,hi_num,hi_den` rows for j, ell and diff.
std::string bounds_csv(const BoundsReport& report);

}  // namespace diffset::io
