#ifndef XLMHG_SIMULATION_HPP
#define XLMHG_SIMULATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xlmhg/ranked_list.hpp"

namespace xlmhg::sim {

/// Identity of the generator and seeding scheme; written into every summary.
inline constexpr const char* kRngName = "mt19937_64+seed_seq(seed_lo,seed_hi,replicate)";

enum class Scenario {
    /// Weak enrichment (fold-change) spread over the top half of a long list.
    BroadEnrichment,
    /// A few 1's ("outliers") in a short top window, the rest uniform.
    TopOutliers,
};

struct ScenarioSpec {
    Scenario kind = Scenario::TopOutliers;
    std::int64_t N = 1000;
    std::int64_t K = 100;
    double fold = 1.5;
    std::int64_t outliers = 0;
    std::int64_t window = 20;
    std::int64_t replicates = 1000;
    std::uint64_t seed = 1;
    TestParams params{0, 1000};
    double alpha = 0.01;
};

/// Throws ConfigError on inconsistent settings.
void validate(const ScenarioSpec& spec);

struct ReplicateResult {
    std::int64_t replicate = 0;
    double statistic = 1.0;
    std::int64_t cutoff = 0;
    double pvalue = 1.0;
};

struct Quantiles {
    double q05 = 0, q25 = 0, q50 = 0, q75 = 0, q95 = 0;
};

struct SimulationSummary {
    std::vector<ReplicateResult> replicates;  // ordered by replicate index
    double fraction_significant = 0.0;        // fraction with pvalue <= alpha
    Quantiles pvalue_quantiles;
};

/// The generator for one replicate; depends only on (seed, replicate).
std::mt19937_64 replicate_rng(std::uint64_t seed, std::int64_t replicate);

/// Uniform integer in [0, bound), by rejection on raw 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform double in [0, 1) with 53 random bits.
double uniform01(std::mt19937_64& rng);
/// Binomial(trials, p) as a sum of Bernoulli draws.
std::int64_t binomial(std::mt19937_64& rng, std::int64_t trials, double p);

/// The random list of one replicate. Independent of spec.params.
RankedList generate_list(const ScenarioSpec& spec, std::int64_t replicate);

/// Linear-interpolation quantile of a sorted sample, q in [0, 1].
double quantile(const std::vector<double>& sorted, double q);

/// Hardware concurrency, capped by XLMHG_THREADS when that is set to a positive integer.
unsigned default_thread_count();

/// Runs every replicate (optionally in parallel); results are in replicate order.
SimulationSummary simulate(const ScenarioSpec& spec, unsigned threads = 0);

/// Significant fraction and p-value quantiles of a set of replicate results.
SimulationSummary summarize(std::vector<ReplicateResult> results, double alpha);

std::string to_string(Scenario kind);
/// Accepts "scenario1"/"broad" and "scenario2"/"outliers"; throws ConfigError otherwise.
Scenario parse_scenario(const std::string& name);

}  // namespace xlmhg::sim

#endif  // XLMHG_SIMULATION_HPP
