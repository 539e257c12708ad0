#ifndef XLMHG_ENRICHMENT_HPP
#define XLMHG_ENRICHMENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "xlmhg/ranked_list.hpp"

namespace xlmhg {

/// Observed over expected number of 1's above cutoff n: k_(n) / (K n / N).
/// Throws DomainError for n outside [1, N] or K == 0.
double fold_enrichment(const RankedList& list, std::int64_t n);

struct EnrichmentReport {
    double psi = 1.0;
    /// Permitted cutoffs whose tail p-value is <= psi, ascending.
    std::vector<std::int64_t> candidate_cutoffs;
    /// Largest fold enrichment over the candidates; absent when there are none.
    std::optional<double> score;
    std::optional<std::int64_t> score_cutoff;
    /// e_(n) for n = 1..N stored at index n (index 0 unused, 0.0).
    std::vector<double> fold;
};

/**
 * Maximum fold enrichment over the cutoffs n <= L with k_(n) >= X and
 * p^HG_(n) <= psi. Ties go to the smallest n.
 *
 * psi must lie in (0, 1] and be at least the XL-mHG statistic of the list;
 * otherwise DomainError is thrown.
 */
EnrichmentReport enrichment_score(const RankedList& list, const TestParams& params, double psi);

/// Same, reusing already computed statistic and per-cutoff p-values (index n = 0..N).
EnrichmentReport enrichment_score(const RankedList& list, const TestParams& params, double psi,
                                  double statistic, const std::vector<double>& hg_pvalues);

}  // namespace xlmhg

#endif  // XLMHG_ENRICHMENT_HPP
