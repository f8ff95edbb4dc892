#pragma once

#include "recforge/modeval.hpp"
#include "recforge/primes.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace recforge {

// Inclusive search range, 2 <= lo <= hi.
struct SearchRange {
    std::uint64_t lo = 2;
    std::uint64_t hi = 2;
};

struct PseudoprimeReport {
    std::string label;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> hits;  // ascending composite n with a(n) == e_1 (mod n)
    std::uint64_t composites_tested = 0;
    std::uint64_t primes_skipped = 0;
    std::uint64_t elapsed_ms = 0;
};

struct HuntOptions {
    unsigned workers = 1;
    std::uint64_t chunk_size = 1ull << 16;
    // Borrowed primality table covering range.hi; built on demand when null.
    const PrimeTable* table = nullptr;
    std::uint64_t sieve_budget_bytes = PrimeTable::kDefaultBudgetBytes;
    // Resumable scans: the file holds one line, the last fully scanned n.
    std::string checkpoint_path;
    // Called after each chunk completes (serialized): (chunks_done, chunks_total).
    std::function<void(std::uint64_t, std::uint64_t)> on_chunk_done;
};

namespace detail {

inline std::optional<std::uint64_t> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::uint64_t v = 0;
    if (!(in >> v)) return std::nullopt;
    return v;
}

inline void write_checkpoint(const std::string& path, std::uint64_t upper) {
    std::ofstream out(path, std::ios::trunc);
    out << upper << "\n";
}

}  // namespace detail

// Scans every composite n in the range with the congruence test. Chunked and
// embarrassingly parallel; hits are merged in chunk order after the workers
// finish, so the report is identical for any worker count.
inline PseudoprimeReport find_pseudoprimes(const TestSpec& spec, SearchRange range,
                                           const HuntOptions& opts = {}) {
    if (range.lo < 2 || range.lo > range.hi)
        throw std::invalid_argument("find_pseudoprimes: need 2 <= lo <= hi");
    if (range.hi >= kModulusLimit)
        throw std::invalid_argument("find_pseudoprimes: hi must be < 2^63");
    const auto t0 = std::chrono::steady_clock::now();

    std::uint64_t lo = range.lo;
    if (!opts.checkpoint_path.empty()) {
        if (auto done = detail::read_checkpoint(opts.checkpoint_path); done && *done >= lo)
            lo = *done + 1;
    }

    PseudoprimeReport report;
    report.label = spec.label;
    report.lo = lo;
    report.hi = range.hi;
    if (lo > range.hi) return report;  // checkpoint says everything is done

    std::unique_ptr<PrimeTable> owned;
    const PrimeTable* table = opts.table;
    if (table == nullptr || table->limit() < range.hi) {
        owned = std::make_unique<PrimeTable>(range.hi, opts.sieve_budget_bytes);
        table = owned.get();
    }

    const std::uint64_t chunk = opts.chunk_size ? opts.chunk_size : 1ull << 16;
    const std::uint64_t total_chunks = (range.hi - lo) / chunk + 1;

    struct ChunkResult {
        std::vector<std::uint64_t> hits;
        std::uint64_t composites = 0;
        std::uint64_t primes = 0;
        bool done = false;
    };
    std::vector<ChunkResult> results(total_chunks);
    std::atomic<std::uint64_t> next{0};
    std::mutex frontier_mutex;
    std::uint64_t frontier = 0;  // chunks [0, frontier) all done
    std::uint64_t chunks_done = 0;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= total_chunks) return;
            const std::uint64_t a = lo + c * chunk;
            const std::uint64_t b = std::min(range.hi, a + chunk - 1);
            ChunkResult& res = results[c];
            for (std::uint64_t n = a; n <= b; ++n) {
                if (table->is_prime(n)) {
                    ++res.primes;
                    continue;
                }
                ++res.composites;
                ModContext ctx(spec, n);
                if (ctx.trace(n) == ctx.target()) res.hits.push_back(n);
            }
            std::lock_guard<std::mutex> lock(frontier_mutex);
            res.done = true;
            ++chunks_done;
            bool advanced = false;
            while (frontier < total_chunks && results[frontier].done) {
                ++frontier;
                advanced = true;
            }
            if (advanced && !opts.checkpoint_path.empty())
                detail::write_checkpoint(opts.checkpoint_path,
                                         std::min(range.hi, lo + frontier * chunk - 1));
            if (opts.on_chunk_done) opts.on_chunk_done(chunks_done, total_chunks);
        }
    };

    const unsigned workers =
        std::max<unsigned>(1, std::min<std::uint64_t>(opts.workers ? opts.workers : 1, total_chunks));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const ChunkResult& res : results) {
        report.hits.insert(report.hits.end(), res.hits.begin(), res.hits.end());
        report.composites_tested += res.composites;
        report.primes_skipped += res.primes;
    }
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return report;
}

struct Score {
    std::uint64_t hit_count = 0;
    std::optional<std::uint64_t> smallest;
};

inline Score score(const TestSpec& spec, std::uint64_t bound, const HuntOptions& opts = {}) {
    PseudoprimeReport report = find_pseudoprimes(spec, {2, bound}, opts);
    Score s;
    s.hit_count = report.hits.size();
    if (!report.hits.empty()) s.smallest = report.hits.front();
    return s;
}

// Enumeration box: every e-vector with 1 <= k <= k_max, |e_i| <= c_max and
// e_k != 0, ordered by k then lexicographically.
struct EnumBox {
    std::size_t k_max = 1;
    std::int64_t c_max = 1;
};

inline std::string enum_label(const std::vector<std::int64_t>& e) {
    std::string s = "e(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

template <typename F>
void for_each_spec(const EnumBox& box, F&& fn) {
    if (box.k_max < 1 || box.c_max < 1)
        throw std::invalid_argument("for_each_spec: k_max and c_max must be >= 1");
    std::vector<std::int64_t> e;
    for (std::size_t k = 1; k <= box.k_max; ++k) {
        e.assign(k, -box.c_max);
        for (;;) {
            if (e[k - 1] != 0) {
                std::vector<BigInt> q(k + 1);
                q[0] = 1;
                for (std::size_t i = 1; i <= k; ++i) q[i] = i % 2 == 1 ? BigInt(-e[i - 1]) : BigInt(e[i - 1]);
                fn(spec_from_denominator(IntPoly(std::move(q)), enum_label(e)));
            }
            // next vector, last index least significant
            std::size_t i = k;
            while (i > 0) {
                if (e[i - 1] < box.c_max) {
                    ++e[i - 1];
                    break;
                }
                e[i - 1] = -box.c_max;
                --i;
            }
            if (i == 0) break;
        }
    }
}

inline std::uint64_t spec_count(const EnumBox& box) {
    // per k: (2c+1)^(k-1) * 2c vectors; saturates instead of wrapping
    unsigned __int128 total = 0;
    const unsigned __int128 width = 2 * static_cast<std::uint64_t>(box.c_max) + 1;
    const unsigned __int128 cap = ~std::uint64_t{0};
    unsigned __int128 prefix = 1;
    for (std::size_t k = 1; k <= box.k_max; ++k) {
        total += prefix * (width - 1);
        if (total > cap) return ~std::uint64_t{0};
        if (k < box.k_max) {
            prefix *= width;
            if (prefix > cap) return ~std::uint64_t{0};  // next term would exceed anyway
        }
    }
    return static_cast<std::uint64_t>(total);
}

inline std::vector<TestSpec> enumerate_specs(const EnumBox& box) {
    std::vector<TestSpec> out;
    out.reserve(spec_count(box));
    for_each_spec(box, [&](TestSpec spec) { out.push_back(std::move(spec)); });
    return out;
}

struct LeaderboardEntry {
    std::string label;
    std::vector<BigInt> e;
    std::uint64_t hit_count = 0;
    std::optional<std::uint64_t> smallest;
};

inline constexpr std::uint64_t kRankBoxBudget = 200000;

// Scores every spec in the box to the bound and returns the top entries,
// ordered by fewest hits, then largest smallest-hit, then label.
inline std::vector<LeaderboardEntry> rank_tests(const EnumBox& box, std::uint64_t bound,
                                                std::size_t top, const HuntOptions& opts = {}) {
    if (top < 1) throw std::invalid_argument("rank_tests: top must be >= 1");
    if (spec_count(box) > kRankBoxBudget)
        throw BudgetError("rank_tests: box enumerates " + std::to_string(spec_count(box)) +
                          " specs, over the budget of " + std::to_string(kRankBoxBudget));
    std::unique_ptr<PrimeTable> owned;
    HuntOptions inner = opts;
    if (inner.table == nullptr || inner.table->limit() < bound) {
        owned = std::make_unique<PrimeTable>(bound, opts.sieve_budget_bytes);
        inner.table = owned.get();
    }
    inner.checkpoint_path.clear();
    inner.on_chunk_done = nullptr;

    std::vector<LeaderboardEntry> entries;
    for_each_spec(box, [&](const TestSpec& spec) {
        Score s = score(spec, bound, inner);
        entries.push_back({spec.label, spec.e, s.hit_count, s.smallest});
    });
    std::sort(entries.begin(), entries.end(), [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
        if (a.hit_count != b.hit_count) return a.hit_count < b.hit_count;
        if (a.smallest != b.smallest) return a.smallest > b.smallest;
        return a.label < b.label;
    });
    if (entries.size() > top) entries.resize(top);
    return entries;
}

}  // namespace recforge
