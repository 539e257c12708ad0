#ifndef XLMHG_HYPERGEOM_HPP
#define XLMHG_HYPERGEOM_HPP

#include <algorithm>
#include <cstdint>

#include "xlmhg/errors.hpp"

/**
 * @file hypergeom.hpp
 *
 * Hypergeometric PMF f(k; N, K, n), its upper tail, and the six recurrence
 * relations used to walk the PMF across neighbouring (k, n) indices.
 *
 * f(k; N, K, n) is the probability of drawing exactly k of the K "1" items in a
 * sample of size n taken without replacement from N items.
 */

namespace xlmhg {

/// Population size N, number of 1's K, sample size n and observed count k.
struct HGParams {
    std::int64_t N = 0;
    std::int64_t K = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;

    [[nodiscard]] std::int64_t W() const { return N - K; }
    /// Smallest k with non-zero probability at this n.
    [[nodiscard]] std::int64_t k_min() const { return std::max<std::int64_t>(0, n - (N - K)); }
    /// Largest k with non-zero probability at this n.
    [[nodiscard]] std::int64_t k_max() const { return std::min(n, K); }
    [[nodiscard]] bool valid() const {
        return 0 <= K && K <= N && 0 <= n && n <= N && k_min() <= k && k <= k_max();
    }
};

/// Throws DomainError unless the parameters satisfy 0<=K<=N, 0<=n<=N, k in its support.
void check_params(const HGParams& p);

/// C(K,k) C(N-K,n-k) / C(N,n), evaluated through log-gamma.
double pmf_direct(const HGParams& p);

/// Pr(count >= k), summed from the smallest term upwards. 1.0 when k <= k_min().
double tail_sf(const HGParams& p);

/// f(k; N,K,n) -> f(k+1; N,K,n).
double step_inc_k(double f, const HGParams& p);
/// f(k; N,K,n) -> f(k; N,K,n+1).
double step_inc_n(double f, const HGParams& p);
/// f(k; N,K,n) -> f(k+1; N,K,n+1).
double step_inc_kn(double f, const HGParams& p);
/// f(n-1; N,K,n-1) -> f(n; N,K,n). `p` describes the source (k = n = m-1) and m <= K.
double step_diag(double f, const HGParams& p);
/// f(K; N,K,n-1) -> f(K; N,K,n). `p` describes the source (k = K, n = m-1) and m > K.
double step_k_eq_K(double f, const HGParams& p);
/// f(k; N,K,n) -> f(k-1; N,K,n).
double step_dec_k(double f, const HGParams& p);

// The factors below are the bare multipliers of the recurrences above, with
// no range checking. The engines call them in their inner loops.

inline double factor_inc_k(std::int64_t N, std::int64_t K, std::int64_t n, std::int64_t k) {
    return (static_cast<double>(n - k) * static_cast<double>(K - k)) /
           (static_cast<double>(k + 1) * static_cast<double>(N - K - n + k + 1));
}

inline double factor_inc_n(std::int64_t N, std::int64_t K, std::int64_t n, std::int64_t k) {
    return (static_cast<double>(n + 1) * static_cast<double>(N - K - n + k)) /
           (static_cast<double>(N - n) * static_cast<double>(n - k + 1));
}

inline double factor_inc_kn(std::int64_t N, std::int64_t K, std::int64_t n, std::int64_t k) {
    return (static_cast<double>(n + 1) * static_cast<double>(K - k)) /
           (static_cast<double>(N - n) * static_cast<double>(k + 1));
}

/// Multiplier taking f(m-1; N,K,m-1) to f(m; N,K,m).
inline double factor_diag(std::int64_t N, std::int64_t K, std::int64_t m) {
    return static_cast<double>(K - m + 1) / static_cast<double>(N - m + 1);
}

/// Multiplier taking f(K; N,K,m-1) to f(K; N,K,m).
inline double factor_k_eq_K(std::int64_t K, std::int64_t m) {
    return static_cast<double>(m) / static_cast<double>(m - K);
}

inline double factor_dec_k(std::int64_t N, std::int64_t K, std::int64_t n, std::int64_t k) {
    return (static_cast<double>(k) * static_cast<double>(N - K - n + k)) /
           (static_cast<double>(n - k + 1) * static_cast<double>(K - k + 1));
}

/**
 * Upper tail Pr(count >= k) given f = f(k; N,K,n), built by stepping k upwards.
 * `Real` is double or ScaledDouble.
 */
template <class Real>
Real tail_from_pmf(Real f, std::int64_t k, std::int64_t N, std::int64_t K, std::int64_t n) {
    Real p = f;
    const std::int64_t top = std::min(n, K);
    while (k < top) {
        f *= factor_inc_k(N, K, n, k);
        p += f;
        ++k;
    }
    return p;
}

/// p^HG_(n) from f(k; N,K,n).
double hgp_from_pmf(double f, std::int64_t k, std::int64_t N, std::int64_t K, std::int64_t n);

}  // namespace xlmhg

#endif  // XLMHG_HYPERGEOM_HPP
