#include "xlmhg/ranked_list.hpp"

#include <algorithm>
#include <string>

#include "xlmhg/errors.hpp"

namespace xlmhg {

RankedList::RankedList(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
    prefix_.reserve(labels_.size() + 1);
    prefix_.push_back(0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] > 1) {
            throw DomainError("ranked list entry " + std::to_string(i + 1) + " is not 0 or 1");
        }
        prefix_.push_back(prefix_.back() + labels_[i]);
    }
}

RankedList RankedList::reversed() const {
    std::vector<std::uint8_t> flipped(labels_.rbegin(), labels_.rend());
    return RankedList(std::move(flipped));
}

void check_params(const TestParams& params, std::int64_t N) {
    if (params.X < 0) throw DomainError("X must be >= 0, got " + std::to_string(params.X));
    if (params.L < 0 || params.L > N) {
        throw DomainError("L must lie in [0, " + std::to_string(N) + "], got " + std::to_string(params.L));
    }
}

}  // namespace xlmhg
