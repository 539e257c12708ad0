#ifndef XLMHG_STATISTIC_HPP
#define XLMHG_STATISTIC_HPP

#include <cstdint>
#include <vector>

#include "xlmhg/ranked_list.hpp"
#include "xlmhg/scaled_double.hpp"

namespace xlmhg {

/// Relative gap below which two tail p-values count as tied (exact ties are common).
inline constexpr double kTieTolerance = 1e-12;

/// Outcome of the XL-mHG statistic computation.
struct StatResult {
    /// Minimum tail p-value over the permitted cutoffs, or 1.0 if none qualifies.
    double statistic = 1.0;
    /// Smallest cutoff achieving the minimum (ties within kTieTolerance); 0 when statistic == 1.
    std::int64_t cutoff = 0;
    /// k_(cutoff).
    std::int64_t k_at_cutoff = 0;
    /// p^HG_(n) for n = 0..N when requested (entry 0 is 1.0), otherwise empty.
    std::vector<double> hg_pvalues;
    /// The minimum is non-zero but smaller than the least positive normal double.
    bool underflow = false;
};

/**
 * f(k_(n); N, K, n) for n = 0..N in one pass.
 *
 * Uses the "one more 0" recurrence at 0-elements and the "one more 1" recurrence
 * at 1-elements, starting from f(0; N, K, 0) = 1.
 */
std::vector<ScaledDouble> pmf_along_list(const RankedList& list);

/// Same as pmf_along_list, converted to doubles (entries may underflow to 0 for long lists).
std::vector<double> pmf_along_list_double(const RankedList& list);

/**
 * The XL-mHG statistic: min of p^HG_(n) over cutoffs n <= L with k_(n) >= X.
 *
 * Only 1-element cutoffs are evaluated, and a 1-element cutoff directly
 * followed by another 1 is skipped when the next cutoff is still permitted.
 * Neither skip can change the minimum. Runs in O(KN).
 *
 * With X = 0 and L = N this is the plain mHG statistic.
 */
StatResult compute_statistic(const RankedList& list, const TestParams& params, bool keep_hg_pvalues = false);

/// p^HG_(n) for every cutoff n = 0..N, via the PMF pass and upward tail sums.
std::vector<double> all_hg_pvalues(const RankedList& list);

}  // namespace xlmhg

#endif  // XLMHG_STATISTIC_HPP
