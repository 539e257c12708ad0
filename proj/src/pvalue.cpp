#include "xlmhg/pvalue.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xlmhg/errors.hpp"
#include "xlmhg/hypergeom.hpp"
#include "xlmhg/scaled_double.hpp"

namespace xlmhg {

RegionMask::RegionMask(std::int64_t K, std::int64_t W)
    : K_(K), W_(W), cells_(static_cast<std::size_t>((K + 1) * (W + 1)), 0) {}

std::size_t RegionMask::marked_count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

PathTable::PathTable(std::int64_t K, std::int64_t W)
    : K_(K), W_(W), cells_(static_cast<std::size_t>((K + 1) * (W + 1)), 0.0) {}

RegionMask build_region(double s, std::int64_t K, std::int64_t W, const TestParams& params) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("statistic must lie in (0, 1), got " + std::to_string(s));
    if (K < 0 || W < 0) throw DomainError("K and W must be non-negative");
    const std::int64_t N = K + W;
    check_params(params, N);

    RegionMask region(K, W);
    const double threshold = s * (1.0 + kRelativeTolerance);
    const std::int64_t last = std::min(params.L, N);

    // f(k*; N, K, n) at the most enriched configuration k* = min(n, K)
    ScaledDouble start(1.0);
    for (std::int64_t n = 1; n <= last; ++n) {
        std::int64_t k = 0;
        if (n <= K) {
            k = n;
            start *= factor_diag(N, K, n);
        } else {
            k = K;
            start *= factor_k_eq_K(K, n);
        }

        const std::int64_t k_floor = std::max({params.X, n - W, std::int64_t{0}});
        ScaledDouble pmf = start;
        ScaledDouble tail = start;
        while (k >= k_floor && tail <= threshold) {
            region.mark(k, n - k);
            pmf *= factor_dec_k(N, K, n, k);
            tail += pmf;
            --k;
        }
    }
    return region;
}

PathTable count_surviving_paths(const RegionMask& region) {
    const std::int64_t K = region.ones();
    const std::int64_t W = region.zeros();
    const std::int64_t N = K + W;
    PathTable m(K, W);
    if (region.contains(0, 0)) {
        m.absorb(1.0);
    } else {
        m.at(0, 0) = 1.0;
    }

    for (std::int64_t n = 1; n <= N; ++n) {
        const double remaining = static_cast<double>(N - n + 1);
        for (std::int64_t k = std::min(n, K); k >= 0 && n - k <= W; --k) {
            const std::int64_t w = n - k;
            // a path enters (k, w) by placing a 0 after (k, w-1) or a 1 after (k-1, w)
            double value = 0.0;
            if (w > 0) value += m.at(k, w - 1) * static_cast<double>(W - w + 1) / remaining;
            if (k > 0) value += m.at(k - 1, w) * static_cast<double>(K - k + 1) / remaining;
            if (region.contains(k, w)) {
                m.absorb(value);
                value = 0.0;
            }
            m.at(k, w) = value;
        }
    }
    return m;
}

double pvalue_dp(double s, std::int64_t K, std::int64_t W, const TestParams& params) {
    if (std::isnan(s) || s <= 0.0) throw DomainError("statistic must be positive, got " + std::to_string(s));
    if (K < 0 || W < 0 || K + W < 1) throw DomainError("list must contain at least one element");
    check_params(params, K + W);
    if (s >= 1.0) return 1.0;

    const PathTable m = count_surviving_paths(build_region(s, K, W, params));
    // summing what the region absorbs avoids the cancellation in 1 - m[K][W]
    return std::clamp(m.absorbed(), 0.0, 1.0);
}

double lipson_bound(double s, std::int64_t K) {
    if (K == 0) return 1.0;
    return std::min(1.0, static_cast<double>(K) * s);
}

}  // namespace xlmhg
