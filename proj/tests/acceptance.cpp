// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "xlmhg/api.hpp"
#include "xlmhg/hypergeom.hpp"
#include "xlmhg/oracle.hpp"
#include "xlmhg/pvalue.hpp"
#include "xlmhg/simulation.hpp"
#include "xlmhg/statistic.hpp"

using namespace xlmhg;

namespace {

// Tolerances, pinned.
constexpr double kWorkedExampleTol = 0.0005;   // paper reports two significant figures
constexpr double kStatisticRelTol = 1e-12;
constexpr double kPvalueAbsTol = 1e-12;
constexpr double kIdentityRelTol = 1e-10;
constexpr double kNormalizationTol = 1e-12;
constexpr double kEmptyRegionTol = 1e-12;
constexpr double kSandwichRelSlack = 1e-12;
constexpr double kAlpha = 0.01;
constexpr double kPerformanceSeconds = 1.0;

// First reproduction run, seed 1 (see README). The gate is the threshold; the
// pinned value only guards against silent changes to the generator.
constexpr double kScenario1PinnedFraction = 1.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double rel_err(double got, double want) {
    if (want == 0.0) return std::fabs(got);
    return std::fabs(got - want) / std::fabs(want);
}

std::string fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

RankedList from_bits(std::uint32_t bits, int N) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) labels[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
    return RankedList(std::move(labels));
}

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

// ---------------------------------------------------------------------------

Outcome worked_example() {
    const RankedList v({1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0});
    const StatResult stat = compute_statistic(v, {0, 20}, true);
    const double p4 = stat.hg_pvalues[4], p5 = stat.hg_pvalues[5], p6 = stat.hg_pvalues[6];
    const double p = pvalue_dp(stat.statistic, 5, 15, {0, 20});
    const double bound = lipson_bound(stat.statistic, 5);
    Outcome o;
    o.pass = std::fabs(p5 - 0.073) <= kWorkedExampleTol && std::fabs(p4 - 0.032) <= kWorkedExampleTol &&
             std::fabs(p6 - 0.014) <= kWorkedExampleTol && stat.cutoff == 6 && stat.k_at_cutoff == 4 &&
             std::fabs(p - 0.024) <= kWorkedExampleTol && std::fabs(bound - 0.07) <= kWorkedExampleTol &&
             bound >= p;
    o.detail = fmt("p5=%.4f p4=%.4f p6=%.4f n*=%lld k*=%lld p=%.4f bound=%.4f", p5, p4, p6,
                   static_cast<long long>(stat.cutoff), static_cast<long long>(stat.k_at_cutoff), p, bound);
    return o;
}

// ---------------------------------------------------------------------------

struct OracleTally {
    std::uint64_t cases = 0;
    std::uint64_t direct_checks = 0;
    std::uint64_t failures = 0;
    double worst_stat = 0.0;
    double worst_p = 0.0;
    std::string first_failure;
};

std::vector<TestParams> oracle_grid(std::int64_t N, std::int64_t K) {
    std::vector<TestParams> grid;
    for (std::int64_t X : {std::int64_t{0}, std::int64_t{1}, ceil_half(K), K, K + 1}) {
        for (std::int64_t L : {std::int64_t{0}, std::int64_t{1}, ceil_half(N), N}) grid.push_back({X, L});
    }
    return grid;
}

// Null distributions are cached per (N, K, X, L); the cached answer is
// identical to oracle::brute_pvalue, which is also called directly on a sample.
class NullCache {
public:
    const oracle::NullDistribution& get(std::int64_t N, std::int64_t K, const TestParams& params) {
        const auto key = std::make_tuple(N, K, params.X, params.L);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, oracle::NullDistribution(N, K, params)).first;
        return it->second;
    }
    void clear() { cache_.clear(); }

private:
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>, oracle::NullDistribution> cache_;
};

void check_against_oracle(const RankedList& list, NullCache& cache, OracleTally& tally) {
    const std::int64_t N = list.size(), K = list.ones();
    for (const TestParams& params : oracle_grid(N, K)) {
        ++tally.cases;
        const double s_fast = compute_statistic(list, params).statistic;
        const double s_naive = oracle::naive_statistic(list, params);
        const double p_fast = pvalue_dp(s_fast, K, list.zeros(), params);
        const double p_brute = cache.get(N, K, params).pvalue(s_naive);
        const double e_stat = rel_err(s_fast, s_naive);
        const double e_p = std::fabs(p_fast - p_brute);
        tally.worst_stat = std::max(tally.worst_stat, e_stat);
        tally.worst_p = std::max(tally.worst_p, e_p);
        bool ok = e_stat <= kStatisticRelTol && e_p <= kPvalueAbsTol;
        if (tally.cases % 101 == 0) {
            ++tally.direct_checks;
            ok = ok && std::fabs(oracle::brute_pvalue(list, params) - p_brute) <= kPvalueAbsTol;
        }
        if (!ok) {
            if (tally.failures == 0) {
                std::string bits;
                for (auto v : list.labels()) bits += v ? '1' : '0';
                tally.first_failure = fmt(" first failure: v=%s X=%lld L=%lld s=%.17g/%.17g p=%.17g/%.17g",
                                          bits.c_str(), static_cast<long long>(params.X),
                                          static_cast<long long>(params.L), s_fast, s_naive, p_fast, p_brute);
            }
            ++tally.failures;
        }
    }
}

Outcome oracle_equivalence() {
    OracleTally tally;
    NullCache cache;
    std::uint64_t lists = 0;
    for (int N = 1; N <= 12; ++N) {
        for (std::uint32_t bits = 0; bits < (1U << N); ++bits) {
            check_against_oracle(from_bits(bits, N), cache, tally);
            ++lists;
        }
        cache.clear();
    }
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 200; ++rep) {
        check_against_oracle(from_bits(static_cast<std::uint32_t>(rng() & 0x3FFFU), 14), cache, tally);
        ++lists;
    }
    Outcome o;
    o.pass = tally.failures == 0;
    o.detail = fmt("%llu lists, %llu (list, X, L) cases, %llu direct brute-force calls, %llu failures; "
                   "max stat rel err %.2e, max p abs err %.2e",
                   static_cast<unsigned long long>(lists), static_cast<unsigned long long>(tally.cases),
                   static_cast<unsigned long long>(tally.direct_checks),
                   static_cast<unsigned long long>(tally.failures), tally.worst_stat, tally.worst_p) +
               tally.first_failure;
    return o;
}

// ---------------------------------------------------------------------------

Outcome identity_suite() {
    constexpr int kMaxN = 50;
    std::uint64_t checks = 0, failures = 0;
    double worst = 0.0, worst_norm = 0.0;
    auto check = [&](double got, const HGParams& target) {
        const double e = rel_err(got, pmf_direct(target));
        worst = std::max(worst, e);
        ++checks;
        if (!(e < kIdentityRelTol)) ++failures;
    };
    for (int N = 1; N <= kMaxN; ++N) {
        for (int K = 0; K <= N; ++K) {
            for (int n = 0; n <= N; ++n) {
                HGParams p{N, K, n, 0};
                double total = 0.0;
                for (p.k = p.k_min(); p.k <= p.k_max(); ++p.k) {
                    const double f = pmf_direct(p);
                    total += f;
                    if (HGParams t{N, K, n, p.k + 1}; t.valid()) check(step_inc_k(f, p), t);       // 1
                    if (HGParams t{N, K, n + 1, p.k}; t.valid()) check(step_inc_n(f, p), t);       // 2
                    if (HGParams t{N, K, n + 1, p.k + 1}; t.valid()) check(step_inc_kn(f, p), t);  // 3
                    if (p.k == n && n + 1 <= K) check(step_diag(f, p), {N, K, n + 1, n + 1});     // 4
                    if (p.k == K && n + 1 > K && n + 1 <= N) check(step_k_eq_K(f, p), {N, K, n + 1, K});  // 5
                    if (HGParams t{N, K, n, p.k - 1}; t.valid()) check(step_dec_k(f, p), t);       // 6
                }
                worst_norm = std::max(worst_norm, std::fabs(total - 1.0));
            }
        }
    }
    Outcome o;
    o.pass = failures == 0 && worst_norm <= kNormalizationTol;
    o.detail = fmt("%llu identity steps, %llu failures, max rel err %.2e; max |sum f - 1| %.2e",
                   static_cast<unsigned long long>(checks), static_cast<unsigned long long>(failures), worst,
                   worst_norm);
    return o;
}

// ---------------------------------------------------------------------------

Outcome empty_region() {
    std::mt19937_64 rng(100);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 200);
        const std::int64_t K = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(N + 1));
        const PathTable m = count_surviving_paths(RegionMask(K, N - K));
        worst = std::max(worst, std::fabs(m.surviving() - 1.0));
    }
    Outcome o;
    o.pass = worst <= kEmptyRegionTol;
    o.detail = fmt("100 random (K, W) with N <= 200; max |m[K][W] - 1| = %.2e", worst);
    return o;
}

// ---------------------------------------------------------------------------

Outcome sandwich() {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int violations = 0, below_one = 0;
    double min_ratio = 1e300;
    std::string first;
    for (int rep = 0; rep < 1000; ++rep) {
        const int N = 1 + static_cast<int>(rng() % 200);
        // half the lists carry a planted top enrichment of random strength
        const double base = 0.05 + 0.45 * unit(rng);
        const double boost = rep % 2 == 0 ? 1.0 : 1.0 + 4.0 * unit(rng);
        const int top = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(N));
        std::vector<std::uint8_t> labels(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) {
            const double p_one = std::min(1.0, i < top ? base * boost : base);
            labels[static_cast<std::size_t>(i)] = unit(rng) < p_one ? 1 : 0;
        }
        const RankedList list(labels);
        const std::int64_t K = list.ones();
        const TestParams params = TestParams::mhg(list);
        const double s = compute_statistic(list, params).statistic;
        const double p = pvalue_dp(s, K, list.zeros(), params);
        const double upper = lipson_bound(s, K);
        if (s < 1.0) {
            ++below_one;
            min_ratio = std::min(min_ratio, p / s);
        }
        const bool ok = s <= p * (1 + kSandwichRelSlack) && p <= upper * (1 + kSandwichRelSlack);
        if (!ok) {
            if (violations == 0) first = fmt(" first violation: N=%d K=%lld s=%.17g p=%.17g bound=%.17g", N,
                                             static_cast<long long>(K), s, p, upper);
            ++violations;
        }
    }
    Outcome o;
    o.pass = violations == 0;
    o.detail = fmt("1000 lists (N <= 200), %d with s < 1, %d violations, min p/s = %.6g", below_one, violations,
                   min_ratio) +
               first;
    return o;
}

// ---------------------------------------------------------------------------

Outcome scenario2() {
    sim::ScenarioSpec spec;
    spec.kind = sim::Scenario::TopOutliers;
    spec.N = 1000;
    spec.K = 100;
    spec.window = 20;
    spec.outliers = 6;
    spec.replicates = 1000;
    spec.seed = 1;
    spec.alpha = kAlpha;
    spec.params = {0, 1000};
    const double plain = sim::simulate(spec).fraction_significant;
    spec.params = {15, 1000};
    const double xl = sim::simulate(spec).fraction_significant;
    Outcome o;
    o.pass = plain > 0.5 && xl < plain;
    o.detail = fmt("fraction p <= %.2g: X=0 %.3f, X=15 %.3f (seed 1, 1000 replicates)", kAlpha, plain, xl);
    return o;
}

Outcome scenario1() {
    sim::ScenarioSpec spec;
    spec.kind = sim::Scenario::BroadEnrichment;
    spec.N = 10000;
    spec.K = 500;
    spec.fold = 1.5;
    spec.replicates = 200;
    spec.seed = 1;
    spec.alpha = kAlpha;
    spec.params = {0, 10000};
    const sim::SimulationSummary full = sim::simulate(spec);
    spec.params = {0, 2500};
    const sim::SimulationSummary limited = sim::simulate(spec);
    const double f_full = full.fraction_significant;
    const double f_limited = limited.fraction_significant;
    Outcome o;
    o.pass = f_full > 0.9 && f_full == kScenario1PinnedFraction && f_limited < f_full;
    o.detail = fmt("fraction p <= %.2g: L=N %.3f (pinned %.3f, median p %.3g), L=2500 %.3f (median p %.3g); "
                   "seed 1, 200 replicates",
                   kAlpha, f_full, kScenario1PinnedFraction, full.pvalue_quantiles.q50, f_limited,
                   limited.pvalue_quantiles.q50);
    return o;
}

// ---------------------------------------------------------------------------

Outcome performance() {
    using clock = std::chrono::steady_clock;
    // three shapes: null, broad enrichment, tight top enrichment
    std::vector<RankedList> lists;
    sim::ScenarioSpec spec;
    spec.kind = sim::Scenario::BroadEnrichment;
    spec.N = 10000;
    spec.K = 500;
    spec.params = {0, 10000};
    spec.fold = 1.0;
    lists.push_back(sim::generate_list(spec, 0));
    spec.fold = 1.5;
    lists.push_back(sim::generate_list(spec, 0));
    sim::ScenarioSpec top;
    top.N = 10000;
    top.K = 500;
    top.window = 1000;
    top.outliers = 300;
    top.params = {0, 10000};
    lists.push_back(sim::generate_list(top, 0));

    double worst = 0.0;
    std::string detail;
    for (const RankedList& list : lists) {
        const auto start = clock::now();
        const TestReport report = run_test(list, TestParams::mhg(list), 0.05);
        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        worst = std::max(worst, seconds);
        detail += fmt(" [s=%.3g p=%.3g %.3fs]", report.statistic, report.pvalue.value_or(-1.0), seconds);
    }
    Outcome o;
    o.pass = worst < kPerformanceSeconds;
    o.detail = fmt("N=10000, K=500, slowest %.3f s (limit %.1f s);", worst, kPerformanceSeconds) + detail;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked-example", worked_example},
        {"oracle-equivalence", oracle_equivalence},
        {"identity-suite", identity_suite},
        {"empty-region-dp", empty_region},
        {"sandwich", sandwich},
        {"scenario2-outliers", scenario2},
        {"scenario1-broad", scenario1},
        {"performance", performance},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.1fs): %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), seconds,
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
