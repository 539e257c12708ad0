#include "xlmhg/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "xlmhg/errors.hpp"
#include "xlmhg/hypergeom.hpp"
#include "xlmhg/pvalue.hpp"

namespace xlmhg::oracle {

std::uint64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        const auto factor = static_cast<std::uint64_t>(n - k + i);
        const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
        const std::uint64_t reduced = result / g;
        const std::uint64_t divisor = static_cast<std::uint64_t>(i) / g;
        if (reduced > UINT64_MAX / factor) throw SizeError("binomial coefficient overflows 64 bits");
        result = reduced * factor / divisor;
    }
    return result;
}

ListUniverse::ListUniverse(std::int64_t N, std::int64_t K) : N_(N), K_(K) {
    if (N < 0 || K < 0 || K > N) throw DomainError("universe requires 0 <= K <= N");
}

void ListUniverse::reset() {
    started_ = false;
    done_ = false;
    positions_.clear();
}

std::optional<RankedList> ListUniverse::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        positions_.resize(static_cast<std::size_t>(K_));
        std::iota(positions_.begin(), positions_.end(), std::int64_t{0});
    } else {
        // advance to the next K-combination of {0..N-1}
        std::int64_t i = K_ - 1;
        while (i >= 0 && positions_[static_cast<std::size_t>(i)] == N_ - K_ + i) --i;
        if (i < 0) {
            done_ = true;
            return std::nullopt;
        }
        ++positions_[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < K_; ++j) {
            positions_[static_cast<std::size_t>(j)] = positions_[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(N_), 0);
    for (const auto p : positions_) labels[static_cast<std::size_t>(p)] = 1;
    return RankedList(std::move(labels));
}

double naive_statistic(const RankedList& list, const TestParams& params) {
    const std::int64_t N = list.size();
    const std::int64_t K = list.ones();
    check_params(params, N);
    double s = 1.0;
    for (std::int64_t n = 1; n <= params.L; ++n) {
        const std::int64_t k = list.ones_above(n);
        if (k < params.X) continue;
        s = std::min(s, tail_sf({N, K, n, k}));
    }
    return s;
}

double brute_pvalue(const RankedList& list, const TestParams& params) {
    const std::int64_t N = list.size();
    const std::int64_t K = list.ones();
    check_params(params, N);
    const std::uint64_t total = choose(N, K);
    if (total > kMaxUniverse) {
        throw SizeError("universe of C(" + std::to_string(N) + ", " + std::to_string(K) + ") lists is too large");
    }
    const double s = naive_statistic(list, params);
    if (s >= 1.0) return 1.0;
    const double threshold = s * (1.0 + kRelativeTolerance);

    ListUniverse universe(N, K);
    std::uint64_t hits = 0;
    while (auto other = universe.next()) {
        if (naive_statistic(*other, params) <= threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

NullDistribution::NullDistribution(std::int64_t N, std::int64_t K, const TestParams& params) {
    if (choose(N, K) > kMaxUniverse) throw SizeError("universe too large for a null distribution");
    ListUniverse universe(N, K);
    sorted_.reserve(universe.size());
    while (auto list = universe.next()) sorted_.push_back(naive_statistic(*list, params));
    std::sort(sorted_.begin(), sorted_.end());
}

double NullDistribution::pvalue(double s) const {
    if (s >= 1.0) return 1.0;
    const double threshold = s * (1.0 + kRelativeTolerance);
    const auto hits = std::upper_bound(sorted_.begin(), sorted_.end(), threshold) - sorted_.begin();
    return static_cast<double>(hits) / static_cast<double>(sorted_.size());
}

std::vector<std::pair<std::int64_t, std::int64_t>> lattice_path(const RankedList& list) {
    std::vector<std::pair<std::int64_t, std::int64_t>> path;
    path.reserve(static_cast<std::size_t>(list.size() + 1));
    for (std::int64_t n = 0; n <= list.size(); ++n) {
        const std::int64_t k = list.ones_above(n);
        path.emplace_back(k, n - k);
    }
    return path;
}

}  // namespace xlmhg::oracle
