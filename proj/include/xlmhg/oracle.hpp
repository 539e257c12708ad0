#ifndef XLMHG_ORACLE_HPP
#define XLMHG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "xlmhg/ranked_list.hpp"

/**
 * @file oracle.hpp
 *
 * Brute-force reference implementations for small lists. Nothing here uses the
 * PMF recurrences: tails come from the log-gamma evaluator and p-values from
 * enumerating every arrangement of the list.
 */

namespace xlmhg::oracle {

/// Largest universe brute_pvalue will enumerate.
inline constexpr std::uint64_t kMaxUniverse = 1'000'000;

/// Exact binomial coefficient; throws SizeError on 64-bit overflow.
std::uint64_t choose(std::int64_t n, std::int64_t k);

/**
 * All binary lists of length N with K ones, in lexicographic order of the
 * (0-based) positions of their ones.
 */
class ListUniverse {
public:
    ListUniverse(std::int64_t N, std::int64_t K);

    [[nodiscard]] std::int64_t length() const { return N_; }
    [[nodiscard]] std::int64_t ones() const { return K_; }
    [[nodiscard]] std::uint64_t size() const { return choose(N_, K_); }

    /// Next list in order; std::nullopt once the universe is exhausted.
    std::optional<RankedList> next();
    void reset();

private:
    std::int64_t N_;
    std::int64_t K_;
    std::vector<std::int64_t> positions_;
    bool started_ = false;
    bool done_ = false;
};

/// Min over permitted cutoffs of tail_sf, computed directly; 1.0 if none permitted.
double naive_statistic(const RankedList& list, const TestParams& params);

/**
 * Fraction of all arrangements of `list` whose naive statistic is <= the
 * observed one (same relative slack as the p-value engine).
 * Throws SizeError when C(N, K) > kMaxUniverse.
 */
double brute_pvalue(const RankedList& list, const TestParams& params);

/// The sorted naive statistics of a whole universe, for answering many p-value queries.
class NullDistribution {
public:
    NullDistribution(std::int64_t N, std::int64_t K, const TestParams& params);

    /// Fraction of the universe with statistic <= s (relative slack applied).
    [[nodiscard]] double pvalue(double s) const;
    [[nodiscard]] std::size_t size() const { return sorted_.size(); }

private:
    std::vector<double> sorted_;
};

/// The configurations (k, w) visited by a list as the cutoff runs over 0..N.
std::vector<std::pair<std::int64_t, std::int64_t>> lattice_path(const RankedList& list);

}  // namespace xlmhg::oracle

#endif  // XLMHG_ORACLE_HPP
