#include "xlmhg/enrichment.hpp"

#include <cmath>
#include <string>

#include "xlmhg/errors.hpp"
#include "xlmhg/pvalue.hpp"
#include "xlmhg/statistic.hpp"

namespace xlmhg {

double fold_enrichment(const RankedList& list, std::int64_t n) {
    const std::int64_t N = list.size();
    const std::int64_t K = list.ones();
    if (n < 1 || n > N) throw DomainError("cutoff must lie in [1, N], got " + std::to_string(n));
    if (K == 0) throw DomainError("fold enrichment is undefined for a list without 1's");
    // k / (K n / N) as one rounding of an integer ratio, so equal folds compare equal
    return static_cast<double>(list.ones_above(n) * N) / static_cast<double>(K * n);
}

EnrichmentReport enrichment_score(const RankedList& list, const TestParams& params, double psi) {
    const StatResult stat = compute_statistic(list, params, true);
    return enrichment_score(list, params, psi, stat.statistic, stat.hg_pvalues);
}

EnrichmentReport enrichment_score(const RankedList& list, const TestParams& params, double psi,
                                  double statistic, const std::vector<double>& hg_pvalues) {
    const std::int64_t N = list.size();
    check_params(params, N);
    if (!(psi > 0.0 && psi <= 1.0)) throw DomainError("psi must lie in (0, 1], got " + std::to_string(psi));
    if (psi * (1.0 + kRelativeTolerance) < statistic) {
        throw DomainError("psi (" + std::to_string(psi) + ") is below the statistic (" + std::to_string(statistic) + ")");
    }
    if (hg_pvalues.size() != static_cast<std::size_t>(N + 1)) {
        throw DomainError("expected " + std::to_string(N + 1) + " per-cutoff p-values");
    }

    EnrichmentReport report;
    report.psi = psi;
    report.fold.assign(static_cast<std::size_t>(N + 1), 0.0);
    if (list.ones() == 0) return report;

    const double threshold = psi * (1.0 + kRelativeTolerance);
    for (std::int64_t n = 1; n <= N; ++n) {
        const double e = fold_enrichment(list, n);
        report.fold[static_cast<std::size_t>(n)] = e;
        if (n > params.L || list.ones_above(n) < params.X) continue;
        if (hg_pvalues[static_cast<std::size_t>(n)] > threshold) continue;
        report.candidate_cutoffs.push_back(n);
        if (!report.score || e > *report.score) {
            report.score = e;
            report.score_cutoff = n;
        }
    }
    return report;
}

}  // namespace xlmhg
