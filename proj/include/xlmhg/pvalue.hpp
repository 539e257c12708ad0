#ifndef XLMHG_PVALUE_HPP
#define XLMHG_PVALUE_HPP

#include <cstdint>
#include <vector>

#include "xlmhg/ranked_list.hpp"

/**
 * @file pvalue.hpp
 *
 * Exact XL-mHG p-values. A list with K ones and W zeros traces a monotone
 * lattice path through the (K+1) x (W+1) grid of configurations (k, w): k ones
 * and w zeros above the cutoff n = k + w. Under the null every path is equally
 * likely, and the p-value is the fraction of paths that touch the rejection
 * region, i.e. the configurations at least as extreme as the observed statistic.
 */

namespace xlmhg {

/// Relative slack used whenever a tail p-value is compared against the statistic.
inline constexpr double kRelativeTolerance = 1e-12;

/// (K+1) x (W+1) membership grid of the rejection region.
class RegionMask {
public:
    RegionMask(std::int64_t K, std::int64_t W);

    [[nodiscard]] std::int64_t ones() const { return K_; }
    [[nodiscard]] std::int64_t zeros() const { return W_; }
    [[nodiscard]] std::size_t cell_count() const { return cells_.size(); }

    [[nodiscard]] bool contains(std::int64_t k, std::int64_t w) const { return cells_[index(k, w)] != 0; }
    void mark(std::int64_t k, std::int64_t w) { cells_[index(k, w)] = 1; }
    [[nodiscard]] std::size_t marked_count() const;

private:
    [[nodiscard]] std::size_t index(std::int64_t k, std::int64_t w) const {
        return static_cast<std::size_t>(k * (W_ + 1) + w);
    }

    std::int64_t K_;
    std::int64_t W_;
    std::vector<std::uint8_t> cells_;
};

/// m[k][w]: fraction of paths that reach (k, w) without touching the region.
class PathTable {
public:
    PathTable(std::int64_t K, std::int64_t W);

    [[nodiscard]] std::int64_t ones() const { return K_; }
    [[nodiscard]] std::int64_t zeros() const { return W_; }
    [[nodiscard]] double at(std::int64_t k, std::int64_t w) const { return cells_[index(k, w)]; }
    double& at(std::int64_t k, std::int64_t w) { return cells_[index(k, w)]; }
    /// m[K][W]: the fraction of all paths that never touch the region.
    [[nodiscard]] double surviving() const { return at(K_, W_); }
    /// Fraction of all paths that touch the region: the mass that flowed into
    /// marked cells. Equals 1 - surviving() but keeps full relative precision
    /// when it is tiny.
    [[nodiscard]] double absorbed() const { return absorbed_; }
    void absorb(double mass) { absorbed_ += mass; }

private:
    [[nodiscard]] std::size_t index(std::int64_t k, std::int64_t w) const {
        return static_cast<std::size_t>(k * (W_ + 1) + w);
    }

    std::int64_t K_;
    std::int64_t W_;
    std::vector<double> cells_;
    double absorbed_ = 0.0;
};

/**
 * Marks every configuration with tail p-value <= s (relative slack
 * kRelativeTolerance), k >= X and k + w <= L.
 *
 * Each anti-diagonal n starts at the most enriched configuration k = min(n, K)
 * and descends in k while the accumulated tail stays within the region. O(KW).
 * Throws DomainError unless 0 < s < 1 and K, W >= 0.
 */
RegionMask build_region(double s, std::int64_t K, std::int64_t W, const TestParams& params);

/// Fills m[k][w] anti-diagonal by anti-diagonal, zeroing every marked cell
/// and accumulating the mass that reaches it.
PathTable count_surviving_paths(const RegionMask& region);

/**
 * Exact p-value of statistic `s` for lists with K ones and W zeros:
 * the mass absorbed by the region (= 1 - m[K][W]), clamped to [0, 1].
 * Returns 1.0 for s >= 1.
 * Throws DomainError for s <= 0, K + W < 1 or invalid params.
 */
double pvalue_dp(double s, std::int64_t K, std::int64_t W, const TestParams& params);

/// min(1, K * s), an upper bound on the plain mHG p-value (1 when K = 0).
double lipson_bound(double s, std::int64_t K);

}  // namespace xlmhg

#endif  // XLMHG_PVALUE_HPP
