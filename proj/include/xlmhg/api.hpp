#ifndef XLMHG_API_HPP
#define XLMHG_API_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xlmhg/ranked_list.hpp"

namespace xlmhg {

struct TestOptions {
    /// Skip the exact p-value and report only the K*s bound.
    bool bound_only = false;
    /// Fill TestReport::per_cutoff.
    bool per_cutoff = false;
};

/// One row of per-cutoff output: the data behind a bar plot of p^HG_(n) or e_(n).
struct CutoffRow {
    std::int64_t n = 0;
    std::int64_t k = 0;
    double hg_pvalue = 1.0;
    double fold_enrichment = 0.0;
};

/// Flat record of one XL-mHG test.
struct TestReport {
    std::int64_t N = 0;
    std::int64_t K = 0;
    std::int64_t X = 0;
    std::int64_t L = 0;
    double statistic = 1.0;
    std::int64_t cutoff = 0;
    std::int64_t k_at_cutoff = 0;
    std::optional<double> pvalue;  // absent with bound_only
    double lipson_bound = 0.0;
    std::optional<double> escore;  // absent when psi < statistic or no cutoff qualifies
    std::optional<std::int64_t> escore_cutoff;
    double psi = 0.05;
    bool underflow = false;
    std::vector<CutoffRow> per_cutoff;
};

/**
 * Statistic, exact p-value, Lipson bound and enrichment score in one call.
 *
 * Throws DomainError for invalid X/L or psi outside (0, 1]. A psi below the
 * statistic is not an error here: the score is reported as absent.
 */
TestReport run_test(const RankedList& list, const TestParams& params, double psi, const TestOptions& options = {});

/// Convenience overload for integer label sequences (entries must be 0 or 1).
TestReport run_test(std::span<const int> labels, std::int64_t X, std::int64_t L, double psi,
                    const TestOptions& options = {});

}  // namespace xlmhg

#endif  // XLMHG_API_HPP
