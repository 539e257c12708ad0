#ifndef XLMHG_RANKED_LIST_HPP
#define XLMHG_RANKED_LIST_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace xlmhg {

/**
 * A ranked binary list v = (v_1, ..., v_N), topmost element first.
 *
 * Storage is 0-based: labels()[i] holds v_{i+1}. Prefix counts use the
 * cutoff convention directly: ones_above(n) = k_(n), the number of 1's among
 * the first n elements, for n = 0..N.
 */
class RankedList {
public:
    RankedList() : prefix_(1, 0) {}

    /// Throws DomainError if any entry is not 0 or 1.
    explicit RankedList(std::vector<std::uint8_t> labels);

    template <class Int>
    static RankedList from_ints(std::span<const Int> values);

    [[nodiscard]] std::int64_t size() const { return static_cast<std::int64_t>(labels_.size()); }
    [[nodiscard]] std::int64_t ones() const { return prefix_.back(); }
    [[nodiscard]] std::int64_t zeros() const { return size() - ones(); }

    /// k_(n) for 0 <= n <= N.
    [[nodiscard]] std::int64_t ones_above(std::int64_t n) const { return prefix_[static_cast<std::size_t>(n)]; }

    /// v_n with 1-based n, matching the math.
    [[nodiscard]] bool is_one(std::int64_t n) const { return labels_[static_cast<std::size_t>(n - 1)] != 0; }

    [[nodiscard]] std::span<const std::uint8_t> labels() const { return labels_; }

    /// The same list read bottom-to-top; tests for enrichment at the bottom.
    [[nodiscard]] RankedList reversed() const;

    friend bool operator==(const RankedList& a, const RankedList& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::uint8_t> labels_;
    std::vector<std::int64_t> prefix_;
};

template <class Int>
RankedList RankedList::from_ints(std::span<const Int> values) {
    std::vector<std::uint8_t> labels;
    labels.reserve(values.size());
    for (const Int v : values) {
        // out-of-range entries are rejected by the constructor
        labels.push_back(v == 0 ? 0 : (v == 1 ? 1 : 2));
    }
    return RankedList(std::move(labels));
}

/// The X and L parameters: cutoffs need at least X ones above them and n <= L.
struct TestParams {
    std::int64_t X = 0;
    std::int64_t L = 0;

    /// Plain mHG: X = 0, L = N.
    static TestParams mhg(const RankedList& list) { return {0, list.size()}; }
};

/// Throws DomainError unless X >= 0 and 0 <= L <= N.
void check_params(const TestParams& params, std::int64_t N);

}  // namespace xlmhg

#endif  // XLMHG_RANKED_LIST_HPP
