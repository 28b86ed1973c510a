#include "diffset/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace diffset::io {

namespace {

using nlohmann::json;

constexpr int kPlaces = 6;

json exact(const Rational& q, Rounding rounding) {
    return json{{"decimal", format_decimal(q, kPlaces, rounding)},
                {"num", q.get_num().get_str()},
                {"den", q.get_den().get_str()}};
}

json interval_row(int k, const Interval& iv) {
    return json::array({k, exact(iv.lo, Rounding::down), exact(iv.hi, Rounding::up)});
}

json interval_pair(const Interval& iv) {
    return json::array({exact(iv.lo, Rounding::down), exact(iv.hi, Rounding::up)});
}

json claim_json(const ClaimResult& c) {
    json comps = json::array();
    for (const auto& cmp : c.comparisons) {
        json o{{"smaller", cmp.smaller},
               {"larger", cmp.larger},
               {"verdict", std::string(to_string(cmp.verdict))},
               {"method", cmp.method}};
        o["difference"] = cmp.difference ? interval_pair(*cmp.difference) : json(nullptr);
        o["separating_m"] = cmp.separating_m ? json(*cmp.separating_m) : json(nullptr);
        if (!cmp.note.empty()) o["note"] = cmp.note;
        comps.push_back(std::move(o));
    }
    json out{{"claim", c.claim},
             {"verdict", std::string(to_string(c.verdict))},
             {"comparisons", std::move(comps)},
             {"note", c.note}};
    if (!c.tail.empty()) out["tail"] = c.tail;
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

template <typename T>
T parse_number(std::string_view field, const char* what) {
    T v{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument(std::string("malformed ") + what + " field '" +
                                    std::string(field) + "'");
    }
    return v;
}

template <typename Table>
std::string table_csv(const Table& table) {
    std::ostringstream os;
    os << "n,k,count\n";
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        if (table.counts[k] != 0) os << table.n << ',' << k << ',' << table.counts[k] << '\n';
    }
    return os.str();
}

template <typename Table>
std::string table_json(const Table& table, bool conditioned, const RunMetadata& meta) {
    json counts = json::array();
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        total += table.counts[k];
        if (table.counts[k] != 0) counts.push_back(json::array({k, table.counts[k]}));
    }
    json out{{"n", table.n},
             {"conditioned", conditioned},
             {"elapsed_seconds", meta.elapsed_seconds},
             {"workers", meta.workers},
             {"total", total},
             {"counts", std::move(counts)}};
    return out.dump(2) + "\n";
}

}  // namespace

std::string dist_csv(const DiffCountTable& table) { return table_csv(table); }
std::string dist_csv(const CondDiffCountTable& table) { return table_csv(table); }

std::string dist_json(const DiffCountTable& table, const RunMetadata& meta) {
    return table_json(table, false, meta);
}
std::string dist_json(const CondDiffCountTable& table, const RunMetadata& meta) {
    return table_json(table, true, meta);
}

DiffCountTable parse_dist_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != "n,k,count") {
        throw std::invalid_argument("distribution CSV must start with header n,k,count");
    }
    if (lines.size() < 2) throw std::invalid_argument("distribution CSV has no rows");
    DiffCountTable table;
    table.n = -1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 3) throw std::invalid_argument("distribution CSV row needs 3 fields");
        const int n = parse_number<int>(f[0], "n");
        const int k = parse_number<int>(f[1], "k");
        const auto count = parse_number<std::uint64_t>(f[2], "count");
        if (table.n < 0) {
            if (n < 0) throw std::invalid_argument("negative n in distribution CSV");
            table.n = n;
            table.counts.assign(n == 0 ? 1 : 2 * static_cast<std::size_t>(n), 0);
        } else if (n != table.n) {
            throw std::invalid_argument("distribution CSV mixes several n");
        }
        if (k < 0 || static_cast<std::size_t>(k) >= table.counts.size()) {
            throw std::invalid_argument("k out of range in distribution CSV");
        }
        table.counts[static_cast<std::size_t>(k)] = count;
    }
    return table;
}

std::string fringe_csv(const FringeCounts& counts) {
    std::ostringstream os;
    os << "m,conditioned,k,count,denominator_log4\n";
    const int log4 = counts.conditioned ? counts.m - 1 : counts.m;
    for (int k = 0; k <= counts.m; ++k) {
        os << counts.m << ',' << (counts.conditioned ? 1 : 0) << ',' << k << ',' << counts.at(k)
           << ',' << log4 << '\n';
    }
    return os.str();
}

std::string fringe_json(const FringeCounts& counts, const RunMetadata& meta) {
    json rows = json::array();
    for (int k = 0; k <= counts.m; ++k) {
        const Rational p = fringe_prob(counts, k).to_rational();
        rows.push_back(json{{"k", k}, {"count", counts.at(k)}, {"probability", exact(p, Rounding::nearest)}});
    }
    json out{{"m", counts.m},
             {"conditioned", counts.conditioned},
             {"denominator_log4", counts.conditioned ? counts.m - 1 : counts.m},
             {"elapsed_seconds", meta.elapsed_seconds},
             {"workers", meta.workers},
             {"counts", std::move(rows)}};
    return out.dump(2) + "\n";
}

FringeCounts parse_fringe_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != "m,conditioned,k,count,denominator_log4") {
        throw std::invalid_argument(
            "fringe CSV must start with header m,conditioned,k,count,denominator_log4");
    }
    FringeCounts out;
    out.m = -1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 5) throw std::invalid_argument("fringe CSV row needs 5 fields");
        const int m = parse_number<int>(f[0], "m");
        const int cond = parse_number<int>(f[1], "conditioned");
        const int k = parse_number<int>(f[2], "k");
        const auto count = parse_number<std::uint64_t>(f[3], "count");
        const int log4 = parse_number<int>(f[4], "denominator_log4");
        if (cond != 0 && cond != 1) throw std::invalid_argument("conditioned must be 0 or 1");
        if (out.m < 0) {
            if (m < 1) throw std::invalid_argument("fringe CSV needs m >= 1");
            out.m = m;
            out.conditioned = cond == 1;
            out.counts.assign(static_cast<std::size_t>(m) + 1, 0);
        } else if (m != out.m || (cond == 1) != out.conditioned) {
            throw std::invalid_argument("fringe CSV mixes several runs");
        }
        if (log4 != (out.conditioned ? m - 1 : m)) {
            throw std::invalid_argument("fringe CSV denominator does not match m");
        }
        if (k < 0 || k > m) throw std::invalid_argument("k out of range in fringe CSV");
        out.counts[static_cast<std::size_t>(k)] = count;
    }
    if (out.m < 0) throw std::invalid_argument("fringe CSV has no rows");
    const std::uint64_t expected = std::uint64_t{1} << out.log2_denominator();
    if (out.total() != expected) {
        throw std::invalid_argument("fringe CSV counts sum to " + std::to_string(out.total()) +
                                    ", expected " + std::to_string(expected));
    }
    return out;
}

std::string sample_csv(const SampleHistogram& h) {
    std::ostringstream os;
    os << "n,trials,seed,generator,missing,count\n";
    for (std::size_t j = 0; j < h.counts.size(); ++j) {
        if (h.counts[j] != 0) {
            os << h.n << ',' << h.trials << ',' << h.seed << ',' << h.generator << ',' << j << ','
               << h.counts[j] << '\n';
        }
    }
    return os.str();
}

std::string sample_json(const SampleHistogram& h, const RunMetadata& meta) {
    json counts = json::array();
    for (std::size_t j = 0; j < h.counts.size(); ++j) {
        if (h.counts[j] != 0) counts.push_back(json::array({j, h.counts[j]}));
    }
    json out{{"n", h.n},
             {"trials", h.trials},
             {"seed", h.seed},
             {"generator", h.generator},
             {"elapsed_seconds", meta.elapsed_seconds},
             {"workers", meta.workers},
             {"argmax_missing", argmax_missing(h)},
             {"counts", std::move(counts)}};
    return out.dump(2) + "\n";
}

std::string bounds_json(const BoundsReport& r) {
    json g = json::array();
    for (const auto& [k, v] : r.g) g.push_back(json::array({k, exact(v, Rounding::nearest)}));
    json j = json::array();
    for (const auto& [k, iv] : r.j) j.push_back(interval_row(k, iv));
    json ell = json::array();
    for (const auto& [k, iv] : r.ell) ell.push_back(interval_row(k, iv.value()));
    json diffs = json::array();
    for (const auto& [k, iv] : r.diffs) diffs.push_back(interval_row(k, iv));

    json gaps = json::array();
    for (const auto& gap : r.sum_identity.mean_gaps) {
        gaps.push_back(json{{"n", gap.n},
                            {"mean", exact(gap.mean, Rounding::nearest)},
                            {"gap", exact(gap.gap, Rounding::nearest)}});
    }
    json out{{"m", r.m},
             {"clipped_j", r.clipped_j},
             {"error_bound", exact(r.error, Rounding::up)},
             {"g", std::move(g)},
             {"j", std::move(j)},
             {"ell", std::move(ell)},
             {"diffs", std::move(diffs)},
             {"verdicts", json{{"l10_chain", claim_json(r.l10_chain)}, {"peak", claim_json(r.peak)}}},
             {"ruler_constant",
              r.ruler_constant ? interval_pair(r.ruler_constant->value()) : json(nullptr)},
             {"sum_identity", json{{"max_k", r.sum_identity.max_k},
                                   {"partial_sum", interval_pair(r.sum_identity.partial_sum)},
                                   {"below_six", r.sum_identity.below_six},
                                   {"mean_gaps", std::move(gaps)}}},
             {"diagnostics", r.diagnostics}};
    return out.dump(2) + "\n";
}

std::string bounds_csv(const BoundsReport& r) {
    std::ostringstream os;
    os << "kind,k,lo,hi,lo_num,lo_den,hi_num,hi_den\n";
    auto row = [&os](const char* kind, int k, const Interval& iv) {
        os << kind << ',' << k << ',' << format_decimal(iv.lo, kPlaces, Rounding::down) << ','
           << format_decimal(iv.hi, kPlaces, Rounding::up) << ',' << iv.lo.get_num().get_str() << ','
           << iv.lo.get_den().get_str() << ',' << iv.hi.get_num().get_str() << ','
           << iv.hi.get_den().get_str() << '\n';
    };
    for (const auto& [k, iv] : r.j) row("j", k, iv);
    for (const auto& [k, iv] : r.ell) row("ell", k, iv.value());
    for (const auto& [k, iv] : r.diffs) row("diff", k, iv);
    if (r.ruler_constant) row("ruler_constant", 0, r.ruler_constant->value());
    return os.str();
}

}  // namespace diffset::io
