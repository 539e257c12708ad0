#include "xlmhg/statistic.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "xlmhg/errors.hpp"
#include "xlmhg/hypergeom.hpp"

namespace xlmhg {

namespace {

// At the bottom of the support the tail is certain; the recurrence sum can land a few ulps short of 1.
ScaledDouble tail_at(const ScaledDouble& f, std::int64_t k, std::int64_t N, std::int64_t K, std::int64_t n) {
    if (k <= std::max<std::int64_t>(0, n - (N - K))) return ScaledDouble(1.0);
    return tail_from_pmf(f, k, N, K, n);
}

}  // namespace

std::vector<ScaledDouble> pmf_along_list(const RankedList& list) {
    const std::int64_t N = list.size();
    const std::int64_t K = list.ones();
    std::vector<ScaledDouble> F(static_cast<std::size_t>(N + 1));
    F[0] = ScaledDouble(1.0);
    std::int64_t k = 0;
    // F[n] describes the first n elements; element n+1 (v_{n+1}) drives the step.
    for (std::int64_t n = 0; n < N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (!list.is_one(n + 1)) {
            F[i + 1] = F[i] * factor_inc_n(N, K, n, k);
        } else {
            F[i + 1] = F[i] * factor_inc_kn(N, K, n, k);
            ++k;
        }
    }
    return F;
}

std::vector<double> pmf_along_list_double(const RankedList& list) {
    const auto scaled = pmf_along_list(list);
    std::vector<double> out;
    out.reserve(scaled.size());
    for (const auto& f : scaled) out.push_back(f.to_double());
    return out;
}

std::vector<double> all_hg_pvalues(const RankedList& list) {
    const std::int64_t N = list.size();
    const std::int64_t K = list.ones();
    const auto F = pmf_along_list(list);
    std::vector<double> out(static_cast<std::size_t>(N + 1), 1.0);
    for (std::int64_t n = 1; n <= N; ++n) {
        const auto tail = tail_at(F[static_cast<std::size_t>(n)], list.ones_above(n), N, K, n);
        out[static_cast<std::size_t>(n)] = std::min(1.0, tail.to_double());
    }
    return out;
}

StatResult compute_statistic(const RankedList& list, const TestParams& params, bool keep_hg_pvalues) {
    const std::int64_t N = list.size();
    const std::int64_t K = list.ones();
    check_params(params, N);

    StatResult result;
    if (keep_hg_pvalues) result.hg_pvalues = all_hg_pvalues(list);
    if (K == 0 || params.L == 0 || params.X > K || list.ones_above(params.L) < params.X) return result;

    const auto F = pmf_along_list(list);
    const ScaledDouble one(1.0);
    ScaledDouble best = one;
    std::vector<std::pair<std::int64_t, ScaledDouble>> evaluated;

    // Cutoff n covers v_1..v_n; the minimum never sits on a 0-element, and a
    // 1-element followed by another 1 is beaten by the next cutoff.
    for (std::int64_t n = 1; n <= params.L; ++n) {
        if (!list.is_one(n)) continue;
        const std::int64_t k = list.ones_above(n);
        if (k < params.X) continue;
        if (n < params.L && list.is_one(n + 1)) continue;
        const auto p = tail_at(F[static_cast<std::size_t>(n)], k, N, K, n);
        evaluated.emplace_back(n, p);
        if (p < best) best = p;
    }

    if (!(best < one)) return result;
    // exact ties go to the smallest cutoff, whatever rounding did to them
    ScaledDouble limit = best;
    limit *= 1.0 + kTieTolerance;
    const auto it = std::find_if(evaluated.begin(), evaluated.end(), [&](const auto& e) { return e.second <= limit; });
    result.statistic = best.to_double();
    result.cutoff = it->first;
    result.k_at_cutoff = list.ones_above(it->first);
    result.underflow = result.statistic < std::numeric_limits<double>::min();
    return result;
}

}  // namespace xlmhg
