#include "xlmhg/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "xlmhg/errors.hpp"
#include "xlmhg/pvalue.hpp"
#include "xlmhg/statistic.hpp"

namespace xlmhg::sim {
namespace {

constexpr int kMaxRedraws = 10000;

/// Picks `count` distinct indices from `pool` (partial Fisher-Yates, in place).
void choose_into(std::mt19937_64& rng, std::vector<std::int64_t>& pool, std::int64_t count,
                 std::vector<std::uint8_t>& labels) {
    const auto size = static_cast<std::uint64_t>(pool.size());
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(count); ++i) {
        const std::uint64_t j = i + uniform_below(rng, size - i);
        std::swap(pool[i], pool[j]);
        labels[static_cast<std::size_t>(pool[i])] = 1;
    }
}

std::vector<std::int64_t> index_range(std::int64_t begin, std::int64_t end) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(end - begin));
    std::iota(out.begin(), out.end(), begin);
    return out;
}

ReplicateResult score(const ScenarioSpec& spec, std::int64_t replicate) {
    const RankedList list = generate_list(spec, replicate);
    const StatResult stat = compute_statistic(list, spec.params);
    ReplicateResult r;
    r.replicate = replicate;
    r.statistic = stat.statistic;
    r.cutoff = stat.cutoff;
    r.pvalue = stat.statistic > 0.0 ? pvalue_dp(stat.statistic, list.ones(), list.zeros(), spec.params) : 0.0;
    return r;
}

}  // namespace

void validate(const ScenarioSpec& spec) {
    if (spec.N < 1) throw ConfigError("N must be positive");
    if (spec.K < 0 || spec.K > spec.N) throw ConfigError("K must lie in [0, N]");
    if (spec.replicates < 1) throw ConfigError("replicates must be >= 1");
    if (!(spec.alpha > 0.0 && spec.alpha <= 1.0)) throw ConfigError("alpha must lie in (0, 1]");
    if (spec.params.X < 0 || spec.params.L < 0 || spec.params.L > spec.N) {
        throw ConfigError("X must be >= 0 and L must lie in [0, N]");
    }
    if (spec.kind == Scenario::TopOutliers) {
        if (spec.window < 0 || spec.window > spec.N) throw ConfigError("window must lie in [0, N]");
        if (spec.outliers < 0 || spec.outliers > spec.K) throw ConfigError("outliers must lie in [0, K]");
        if (spec.outliers > spec.window) throw ConfigError("outliers do not fit into the top window");
    } else {
        const std::int64_t top = spec.N / 2;
        if (!(spec.fold > 0.0)) throw ConfigError("fold must be positive");
        const double expected_top = spec.fold * static_cast<double>(spec.K) * static_cast<double>(top) /
                                    static_cast<double>(spec.N);
        if (expected_top > static_cast<double>(top) || expected_top > static_cast<double>(spec.K)) {
            throw ConfigError("expected top-half count exceeds the capacity of the top half");
        }
        if (static_cast<double>(spec.K) - expected_top > static_cast<double>(spec.N - top)) {
            throw ConfigError("remaining 1's do not fit into the bottom half");
        }
    }
}

std::mt19937_64 replicate_rng(std::uint64_t seed, std::int64_t replicate) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(replicate)};
    return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw ConfigError("uniform_below: empty range");
    // reject the top partial block so every residue is equally likely
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t binomial(std::mt19937_64& rng, std::int64_t trials, double p) {
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < trials; ++i) count += uniform01(rng) < p ? 1 : 0;
    return count;
}

RankedList generate_list(const ScenarioSpec& spec, std::int64_t replicate) {
    validate(spec);
    auto rng = replicate_rng(spec.seed, replicate);
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(spec.N), 0);

    if (spec.kind == Scenario::TopOutliers) {
        auto window = index_range(0, spec.window);
        choose_into(rng, window, spec.outliers, labels);
        std::vector<std::int64_t> rest;
        rest.reserve(static_cast<std::size_t>(spec.N - spec.outliers));
        for (std::int64_t i = 0; i < spec.N; ++i) {
            if (labels[static_cast<std::size_t>(i)] == 0) rest.push_back(i);
        }
        choose_into(rng, rest, spec.K - spec.outliers, labels);
    } else {
        const std::int64_t top = spec.N / 2;
        const double p_top = spec.fold * static_cast<double>(top) / static_cast<double>(spec.N);
        std::int64_t in_top = binomial(rng, spec.K, p_top);
        int redraws = 0;
        while (in_top > top || spec.K - in_top > spec.N - top) {
            if (++redraws > kMaxRedraws) throw ConfigError("cannot place the 1's within capacity");
            in_top = binomial(rng, spec.K, p_top);
        }
        auto upper = index_range(0, top);
        choose_into(rng, upper, in_top, labels);
        auto lower = index_range(top, spec.N);
        choose_into(rng, lower, spec.K - in_top, labels);
    }
    return RankedList(std::move(labels));
}

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

unsigned default_thread_count() {
    const unsigned hardware = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("XLMHG_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return std::min(hardware, static_cast<unsigned>(value));
    }
    return hardware;
}

SimulationSummary summarize(std::vector<ReplicateResult> results, double alpha) {
    std::sort(results.begin(), results.end(),
              [](const ReplicateResult& a, const ReplicateResult& b) { return a.replicate < b.replicate; });
    SimulationSummary summary;
    std::vector<double> pvalues;
    pvalues.reserve(results.size());
    std::size_t significant = 0;
    for (const auto& r : results) {
        pvalues.push_back(r.pvalue);
        if (r.pvalue <= alpha) ++significant;
    }
    std::sort(pvalues.begin(), pvalues.end());
    if (!results.empty()) {
        summary.fraction_significant = static_cast<double>(significant) / static_cast<double>(results.size());
    }
    summary.pvalue_quantiles = {quantile(pvalues, 0.05), quantile(pvalues, 0.25), quantile(pvalues, 0.50),
                                quantile(pvalues, 0.75), quantile(pvalues, 0.95)};
    summary.replicates = std::move(results);
    return summary;
}

SimulationSummary simulate(const ScenarioSpec& spec, unsigned threads) {
    validate(spec);
    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, spec.replicates));

    std::vector<ReplicateResult> results(static_cast<std::size_t>(spec.replicates));
    if (threads <= 1) {
        for (std::int64_t r = 0; r < spec.replicates; ++r) results[static_cast<std::size_t>(r)] = score(spec, r);
        return summarize(std::move(results), spec.alpha);
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::int64_t r = next++; r < spec.replicates && !failed; r = next++) {
                try {
                    results[static_cast<std::size_t>(r)] = score(spec, r);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
    return summarize(std::move(results), spec.alpha);
}

std::string to_string(Scenario kind) {
    return kind == Scenario::BroadEnrichment ? "scenario1" : "scenario2";
}

Scenario parse_scenario(const std::string& name) {
    if (name == "scenario1" || name == "broad" || name == "1") return Scenario::BroadEnrichment;
    if (name == "scenario2" || name == "outliers" || name == "2") return Scenario::TopOutliers;
    throw ConfigError("unknown scenario '" + name + "' (expected scenario1 or scenario2)");
}

}  // namespace xlmhg::sim
