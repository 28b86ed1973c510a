#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <diffset/bounds.hpp>
#include <diffset/closedform.hpp>
#include <diffset/enumerate.hpp>
#include <diffset/fringe.hpp>
#include <diffset/io.hpp>
#include <diffset/parallel.hpp>

#include "verify.hpp"

namespace diffset::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    Clock::time_point start_ = Clock::now();
};

ProgressFn progress_printer(const RunConfig& c, std::ostream& err) {
    if (!c.progress) return {};
    return [&err](std::uint64_t done, std::uint64_t total) {
        err << "\rprogress " << done << '/' << total << std::flush;
        if (done == total) err << '\n';
    };
}

EnumerateOptions enumerate_options(const RunConfig& c, std::ostream& err) {
    EnumerateOptions o;
    o.workers = c.workers;
    o.long_run = c.long_run;
    if (c.checkpoint) o.checkpoint = *c.checkpoint;
    o.progress = progress_printer(c, err);
    return o;
}

FringeOptions fringe_options(const RunConfig& c, std::ostream& err) {
    FringeOptions o;
    o.workers = c.workers;
    if (c.checkpoint) o.checkpoint = *c.checkpoint;
    o.progress = progress_printer(c, err);
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string run_dist(const RunConfig& c, std::ostream& err) {
    const Stopwatch clock;
    const auto table = dist_table(c.n, enumerate_options(c, err));
    const io::RunMetadata meta{clock.seconds(), c.workers};
    return c.format == Format::csv ? io::dist_csv(table) : io::dist_json(table, meta);
}

std::string run_cond_dist(const RunConfig& c, std::ostream& err) {
    const Stopwatch clock;
    const auto table = cond_dist_table(c.n, enumerate_options(c, err));
    const io::RunMetadata meta{clock.seconds(), c.workers};
    return c.format == Format::csv ? io::dist_csv(table) : io::dist_json(table, meta);
}

std::string run_fringe(const RunConfig& c, std::ostream& err) {
    const Stopwatch clock;
    const auto counts = fringe_fast(c.m, c.conditioned, fringe_options(c, err));
    const io::RunMetadata meta{clock.seconds(), c.workers};
    return c.format == Format::csv ? io::fringe_csv(counts) : io::fringe_json(counts, meta);
}

std::string run_bounds(const RunConfig& c, std::ostream& err, int& exit_code) {
    FringeCounts counts;
    if (c.counts_path) {
        counts = io::parse_fringe_csv(read_file(*c.counts_path));
    } else if (c.published_counts) {
        counts = published_conditioned_fringe_m23();
    } else {
        counts = fringe_fast(c.m, true, fringe_options(c, err));
    }
    if (!counts.conditioned) throw std::invalid_argument("bounds need conditioned fringe counts");
    if (counts.m != c.m) {
        throw std::invalid_argument("counts are for m = " + std::to_string(counts.m) +
                                    ", not m = " + std::to_string(c.m));
    }
    BoundsOptions bo;
    bo.max_k = c.max_k;
    bo.clip_j = c.clip_j;
    const auto report = build_bounds_report(counts, bo);
    err << "l10 chain: " << to_string(report.l10_chain.verdict)
        << "; peak: " << to_string(report.peak.verdict) << '\n';
    exit_code = report.all_certified() ? kExitOk : kExitInconclusive;
    return c.format == Format::csv ? io::bounds_csv(report) : io::bounds_json(report);
}

std::string run_divots(const RunConfig& c, std::ostream& err) {
    const auto table = dist_table(c.n, enumerate_options(c, err));
    const auto divots = having_divots(table);
    if (c.format == Format::csv) {
        std::ostringstream os;
        os << "n,k,count,conjectured_position\n";
        for (int k : divots) {
            os << c.n << ',' << k << ',' << table.at(k) << ',' << (is_conjectured_divot_position(k) ? 1 : 0)
               << '\n';
        }
        return os.str();
    }
    json rows = json::array();
    for (int k : divots) {
        rows.push_back(json{{"k", k}, {"count", table.at(k)}, {"conjectured_position", is_conjectured_divot_position(k)}});
    }
    return json{{"n", c.n}, {"denominator_log2", c.n}, {"divots", std::move(rows)}}.dump(2) + "\n";
}

std::string run_peak(const RunConfig& c, std::ostream& err) {
    const auto opts = enumerate_options(c, err);
    if (c.scan) {
        std::vector<std::pair<int, std::vector<int>>> rows;
        for (int n = 1; n <= c.n; ++n) rows.emplace_back(n, argmax_missing(dist_table(n, opts)));
        if (c.format == Format::csv) {
            std::ostringstream os;
            os << "n,argmax_missing,tie\n";
            for (const auto& [n, arg] : rows) os << n << ',' << join(arg, ';') << ',' << (arg.size() > 1 ? 1 : 0) << '\n';
            return os.str();
        }
        json list = json::array();
        json ties = json::array();
        for (const auto& [n, arg] : rows) {
            list.push_back(json{{"n", n}, {"argmax_missing", arg}});
            if (arg.size() > 1) ties.push_back(json{{"n", n}, {"argmax_missing", arg}});
        }
        return json{{"max_n", c.n}, {"peaks", std::move(list)}, {"ties", std::move(ties)}}.dump(2) + "\n";
    }
    const auto table = dist_table(c.n, opts);
    const auto arg = argmax_missing(table);
    auto is_max = [&arg](int j) { return std::find(arg.begin(), arg.end(), j) != arg.end(); };
    if (c.format == Format::csv) {
        std::ostringstream os;
        os << "n,missing,count,denominator_log2,argmax\n";
        for (int j = 0; j <= 2 * c.n - 1; ++j) {
            const auto count = table.at(2 * c.n - 1 - j);
            if (count != 0) os << c.n << ',' << j << ',' << count << ',' << c.n << ',' << (is_max(j) ? 1 : 0) << '\n';
        }
        return os.str();
    }
    json dist = json::array();
    for (int j = 0; j <= 2 * c.n - 1; ++j) {
        const auto count = table.at(2 * c.n - 1 - j);
        if (count != 0) dist.push_back(json::array({j, count}));
    }
    return json{{"n", c.n},
                {"denominator_log2", c.n},
                {"argmax_missing", arg},
                {"tie", arg.size() > 1},
                {"distribution", std::move(dist)}}
               .dump(2) +
           "\n";
}

std::string run_rulers(const RunConfig& c, std::ostream& err) {
    const auto opts = enumerate_options(c, err);
    std::vector<std::uint64_t> counts;
    for (int length = 0; length <= c.max_length; ++length) counts.push_back(complete_ruler_count(length, opts));
    if (c.format == Format::csv) {
        std::ostringstream os;
        os << "length,count\n";
        for (std::size_t l = 0; l < counts.size(); ++l) os << l << ',' << counts[l] << '\n';
        return os.str();
    }
    json rows = json::array();
    for (std::size_t l = 0; l < counts.size(); ++l) rows.push_back(json::array({l, counts[l]}));
    return json{{"max_length", c.max_length}, {"rulers", std::move(rows)}}.dump(2) + "\n";
}

std::string run_sample(const RunConfig& c) {
    const Stopwatch clock;
    const auto h = sample_missing(c.n, c.trials, c.seed, c.workers);
    const io::RunMetadata meta{clock.seconds(), c.workers};
    return c.format == Format::csv ? io::sample_csv(h) : io::sample_json(h, meta);
}

std::string run_verify(const RunConfig& c, int& exit_code) {
    const auto results = run_verify_suite(c.workers);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    exit_code = all ? kExitOk : kExitError;
    if (c.format == Format::csv) {
        std::ostringstream os;
        os << "check,passed,detail\n";
        for (const auto& r : results) os << '"' << r.name << "\"," << (r.passed ? 1 : 0) << ",\"" << r.detail << "\"\n";
        return os.str();
    }
    json rows = json::array();
    for (const auto& r : results) rows.push_back(json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return json{{"passed", all}, {"checks", std::move(rows)}}.dump(2) + "\n";
}

bool uses_n(const std::string& s) {
    return s == "dist" || s == "cond-dist" || s == "divots" || s == "peak";
}

}  // namespace

ParseResult parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact distribution of |S-S| for uniformly random subsets S of {0, ..., n-1}", "diffset"};
    app.require_subcommand(1, 1);

    RunConfig c;
    c.workers = default_workers();
    std::string output;
    std::string checkpoint;
    std::string counts_path;
    bool no_clip = false;
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};

    auto common = [&](CLI::App* sub, bool checkpointable) {
        sub->add_option("--format", c.format, "csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("-o,--output", output, "Write to this file instead of stdout");
        sub->add_option("--workers", c.workers, "Worker threads (default: $DIFFSET_WORKERS or all cores)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--long-run", c.long_run, "Allow n >= 31 or m >= 20");
        sub->add_flag("--progress", c.progress, "Report finished chunks on stderr");
        if (checkpointable) sub->add_option("--checkpoint", checkpoint, "Resumable checkpoint file");
    };

    auto* dist = app.add_subcommand("dist", "Counts of |S-S| = k over all S of [n]");
    dist->add_option("--n", c.n)->required()->check(CLI::NonNegativeNumber);
    common(dist, true);

    auto* cond = app.add_subcommand("cond-dist", "Counts of |S-S| = k over S of [n] containing 0 and n-1");
    cond->add_option("--n", c.n)->required()->check(CLI::Range(2, 64));
    common(cond, true);

    auto* fringe = app.add_subcommand("fringe", "Fringe counts for S of [2m]");
    fringe->add_option("--m", c.m)->required()->check(CLI::Range(1, kFringeMaxM));
    fringe->add_flag("--conditioned", c.conditioned, "Require 0 and 2m-1 in S");
    common(fringe, true);

    auto* bounds = app.add_subcommand("bounds", "Certified enclosures of the limiting probabilities");
    bounds->add_option("--m", c.m, "Fringe half-width")->capture_default_str()->check(CLI::Range(1, kFringeMaxM));
    auto* counts_opt = bounds->add_option("--counts", counts_path, "Conditioned fringe counts CSV");
    bounds->add_flag("--published", c.published_counts, "Use the published m = 23 counts")->excludes(counts_opt);
    bounds->add_flag("--no-clip", no_clip, "Do not clip the j enclosures to [0, 1]");
    bounds->add_option("--max-k", c.max_k, "Largest k tabulated")->capture_default_str()->check(CLI::NonNegativeNumber);
    common(bounds, true);

    auto* divots = app.add_subcommand("divots", "Divots of k -> P(|S-S| = k)");
    divots->add_option("--n", c.n)->required()->check(CLI::NonNegativeNumber);
    common(divots, false);

    auto* peak = app.add_subcommand("peak", "Most likely number of missing differences");
    peak->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
    peak->add_flag("--scan", c.scan, "Report the maximizers for every size up to n, flagging ties");
    common(peak, false);

    auto* rulers = app.add_subcommand("rulers", "Complete ruler counts a_0, ..., a_L");
    rulers->add_option("--max-length", c.max_length)->required()->check(CLI::NonNegativeNumber);
    common(rulers, false);

    auto* sample = app.add_subcommand("sample", "Monte Carlo histogram of missing differences");
    sample->add_option("--n", c.n)->required()->check(CLI::Range(1, 65536));
    sample->add_option("--trials", c.trials)->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_option("--seed", c.seed)->capture_default_str();
    common(sample, false);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite over the golden data");
    common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kExitOk : kExitError};
    }

    c.subcommand = app.get_subcommands().front()->get_name();
    if (!output.empty()) c.output = output;
    if (!checkpoint.empty()) c.checkpoint = checkpoint;
    if (!counts_path.empty()) c.counts_path = counts_path;
    c.clip_j = !no_clip;
    return {c, kExitOk};
}

void validate(const RunConfig& c) {
    if (c.workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (uses_n(c.subcommand)) {
        if (c.n < 0) throw std::invalid_argument("n must be nonnegative");
        if (c.n >= kLongRunN && !c.long_run) {
            throw std::invalid_argument("n >= " + std::to_string(kLongRunN) + " needs --long-run");
        }
    }
    if (c.subcommand == "rulers" && c.max_length + 1 >= kLongRunN && !c.long_run) {
        throw std::invalid_argument("max-length >= " + std::to_string(kLongRunN - 1) + " needs --long-run");
    }
    const bool computes_fringe =
        c.subcommand == "fringe" || (c.subcommand == "bounds" && !c.counts_path && !c.published_counts);
    if (computes_fringe) {
        if (c.m < 1 || c.m > kFringeMaxM) throw std::invalid_argument("m must be in [1, 26]");
        if (c.m >= kLongRunM && !c.long_run) {
            throw std::invalid_argument("m >= " + std::to_string(kLongRunM) +
                                        " needs --long-run (or --counts / --published for bounds)");
        }
    }
    if (c.subcommand == "bounds" && c.published_counts && c.m != 23) {
        throw std::invalid_argument("--published holds the m = 23 counts; pass --m 23");
    }
    if (c.subcommand == "sample" && c.trials == 0) throw std::invalid_argument("trials must be positive");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        validate(c);
        std::ofstream file;
        if (c.output) {
            file.open(*c.output, std::ios::binary | std::ios::trunc);
            if (!file) throw std::runtime_error("cannot write " + *c.output);
        }
        int exit_code = kExitOk;
        std::string text;
        if (c.subcommand == "dist") {
            text = run_dist(c, err);
        } else if (c.subcommand == "cond-dist") {
            text = run_cond_dist(c, err);
        } else if (c.subcommand == "fringe") {
            text = run_fringe(c, err);
        } else if (c.subcommand == "bounds") {
            text = run_bounds(c, err, exit_code);
        } else if (c.subcommand == "divots") {
            text = run_divots(c, err);
        } else if (c.subcommand == "peak") {
            text = run_peak(c, err);
        } else if (c.subcommand == "rulers") {
            text = run_rulers(c, err);
        } else if (c.subcommand == "sample") {
            text = run_sample(c);
        } else if (c.subcommand == "verify") {
            text = run_verify(c, exit_code);
        } else {
            throw std::invalid_argument("unknown subcommand '" + c.subcommand + "'");
        }
        std::ostream& sink = c.output ? static_cast<std::ostream&>(file) : out;
        sink << text;
        sink.flush();
        if (!sink) throw std::runtime_error("write failed");
        return exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto parsed = parse(argc, argv, out, err);
    if (!parsed.config) return parsed.exit_code;
    return run(*parsed.config, out, err);
}

}  // namespace diffset::cli
