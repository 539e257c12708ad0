#include "xlmhg/api.hpp"

#include <string>

#include "xlmhg/enrichment.hpp"
#include "xlmhg/errors.hpp"
#include "xlmhg/pvalue.hpp"
#include "xlmhg/statistic.hpp"

namespace xlmhg {

TestReport run_test(const RankedList& list, const TestParams& params, double psi, const TestOptions& options) {
    const std::int64_t N = list.size();
    check_params(params, N);
    if (!(psi > 0.0 && psi <= 1.0)) throw DomainError("psi must lie in (0, 1], got " + std::to_string(psi));

    const StatResult stat = compute_statistic(list, params, true);

    TestReport report;
    report.N = N;
    report.K = list.ones();
    report.X = params.X;
    report.L = params.L;
    report.statistic = stat.statistic;
    report.cutoff = stat.cutoff;
    report.k_at_cutoff = stat.k_at_cutoff;
    report.lipson_bound = lipson_bound(stat.statistic, report.K);
    report.psi = psi;
    report.underflow = stat.underflow;

    if (!options.bound_only && N > 0) {
        // an underflowed statistic is below any representable p-value
        report.pvalue = stat.statistic > 0.0 ? pvalue_dp(stat.statistic, report.K, list.zeros(), params) : 0.0;
    }

    if (report.K > 0 && psi * (1.0 + kRelativeTolerance) >= stat.statistic) {
        const EnrichmentReport e = enrichment_score(list, params, psi, stat.statistic, stat.hg_pvalues);
        report.escore = e.score;
        report.escore_cutoff = e.score_cutoff;
    }

    if (options.per_cutoff) {
        report.per_cutoff.reserve(static_cast<std::size_t>(N));
        for (std::int64_t n = 1; n <= N; ++n) {
            CutoffRow row;
            row.n = n;
            row.k = list.ones_above(n);
            row.hg_pvalue = stat.hg_pvalues[static_cast<std::size_t>(n)];
            row.fold_enrichment = report.K > 0 ? fold_enrichment(list, n) : 0.0;
            report.per_cutoff.push_back(row);
        }
    }
    return report;
}

TestReport run_test(std::span<const int> labels, std::int64_t X, std::int64_t L, double psi,
                    const TestOptions& options) {
    return run_test(RankedList::from_ints(labels), TestParams{X, L}, psi, options);
}

}  // namespace xlmhg
