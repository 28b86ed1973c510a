#include "diffset/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "diffset/rational.hpp"

namespace diffset {

unsigned default_workers() {
    if (const char* env = std::getenv("DIFFSET_WORKERS"); env != nullptr && *env != '\0') {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<std::uint64_t> run_chunked_histogram(const ChunkedHistogramJob& job,
                                                 const ChunkedRunOptions& options) {
    if (options.workers == 0) throw std::invalid_argument("workers must be >= 1");
    std::vector<std::uint64_t> total(job.bins, 0);
    std::vector<char> done(job.chunk_count, 0);

    std::unique_ptr<CheckpointWriter> writer;
    if (options.checkpoint) {
        CheckpointContents resumed;
        writer = std::make_unique<CheckpointWriter>(*options.checkpoint, options.header, resumed);
        for (const auto& [chunk, counts] : resumed.chunks) {
            done[chunk] = 1;
            for (std::size_t b = 0; b < job.bins; ++b) checked_add(total[b], counts[b]);
        }
    }

    std::vector<std::uint64_t> pending;
    for (std::uint64_t c = 0; c < job.chunk_count; ++c) {
        if (!done[c]) pending.push_back(c);
    }
    const std::uint64_t already = job.chunk_count - pending.size();
    const std::uint64_t limit =
        options.chunk_budget == 0 ? pending.size()
                                  : std::min<std::uint64_t>(pending.size(), options.chunk_budget);

    std::atomic<std::uint64_t> next{0};
    std::uint64_t finished = 0;
    std::mutex merge_mutex;
    std::exception_ptr failure;
    std::atomic<bool> stop{false};

    auto worker = [&] {
        std::vector<std::uint64_t> local(job.bins);
        while (!stop.load(std::memory_order_relaxed)) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= limit) break;
            const std::uint64_t chunk = pending[i];
            try {
                std::fill(local.begin(), local.end(), 0);
                job.kernel(chunk, local);
                if (writer) writer->append(chunk, local);
                std::lock_guard lock(merge_mutex);
                for (std::size_t b = 0; b < job.bins; ++b) checked_add(total[b], local[b]);
                ++finished;
                if (options.progress) options.progress(already + finished, job.chunk_count);
            } catch (...) {
                std::lock_guard lock(merge_mutex);
                if (!failure) failure = std::current_exception();
                stop = true;
            }
        }
    };

    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::uint64_t>(options.workers, std::max<std::uint64_t>(limit, 1)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    if (limit < pending.size()) {
        throw RunInterrupted("stopped after " + std::to_string(limit) + " chunks; " +
                             std::to_string(pending.size() - limit) + " remain");
    }
    return total;
}

}  // namespace diffset
