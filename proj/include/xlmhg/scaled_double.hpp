#ifndef XLMHG_SCALED_DOUBLE_HPP
#define XLMHG_SCALED_DOUBLE_HPP

#include <cmath>
#include <compare>
#include <cstdint>

namespace xlmhg {

/**
 * A non-negative real stored as mantissa * 2^exponent.
 *
 * The PMF recurrences multiply long chains of rational factors; for lists with
 * tens of thousands of elements the intermediate values leave the range of a
 * double long before the chain comes back up. Renormalizing by powers of two is
 * exact, so a chain evaluated in this type performs the same roundings as the
 * plain linear-space chain would in infinite exponent range.
 */
class ScaledDouble {
public:
    ScaledDouble() = default;
    explicit ScaledDouble(double value) : mantissa_(value) { normalize(); }

    [[nodiscard]] bool is_zero() const { return mantissa_ == 0.0; }
    [[nodiscard]] double mantissa() const { return mantissa_; }
    [[nodiscard]] std::int64_t exponent() const { return exponent_; }

    /// Value as a plain double; underflows to 0 (or a subnormal) when out of range.
    [[nodiscard]] double to_double() const {
        if (is_zero()) return 0.0;
        if (exponent_ > 2000) return HUGE_VAL;
        if (exponent_ < -2000) return 0.0;
        return std::ldexp(mantissa_, static_cast<int>(exponent_));
    }

    /// Natural logarithm; -inf for zero.
    [[nodiscard]] double log() const {
        if (is_zero()) return -HUGE_VAL;
        return std::log(mantissa_) + static_cast<double>(exponent_) * kLn2;
    }

    ScaledDouble& operator*=(double factor) {
        mantissa_ *= factor;
        normalize();
        return *this;
    }

    ScaledDouble& operator+=(const ScaledDouble& other) {
        if (other.is_zero()) return *this;
        if (is_zero()) {
            *this = other;
            return *this;
        }
        const std::int64_t top = exponent_ > other.exponent_ ? exponent_ : other.exponent_;
        mantissa_ = shifted(mantissa_, exponent_ - top) + shifted(other.mantissa_, other.exponent_ - top);
        exponent_ = top;
        normalize();
        return *this;
    }

    friend ScaledDouble operator*(ScaledDouble lhs, double factor) { return lhs *= factor; }
    friend ScaledDouble operator+(ScaledDouble lhs, const ScaledDouble& rhs) { return lhs += rhs; }

    friend std::partial_ordering operator<=>(const ScaledDouble& a, const ScaledDouble& b) {
        if (a.is_zero() || b.is_zero()) return a.mantissa_ <=> b.mantissa_;
        if (a.exponent_ != b.exponent_) return a.exponent_ <=> b.exponent_;
        return a.mantissa_ <=> b.mantissa_;
    }
    friend bool operator==(const ScaledDouble& a, const ScaledDouble& b) {
        return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
    }

    friend std::partial_ordering operator<=>(const ScaledDouble& a, double b) { return a <=> ScaledDouble(b); }
    friend bool operator==(const ScaledDouble& a, double b) { return a == ScaledDouble(b); }

private:
    static constexpr double kLn2 = 0.69314718055994530942;

    static double shifted(double mantissa, std::int64_t by) {
        if (by < -1100) return 0.0;
        return std::ldexp(mantissa, static_cast<int>(by));
    }

    void normalize() {
        if (mantissa_ == 0.0 || !std::isfinite(mantissa_)) {
            if (mantissa_ == 0.0) exponent_ = 0;
            return;
        }
        int e = 0;
        mantissa_ = std::frexp(mantissa_, &e);
        exponent_ += e;
    }

    double mantissa_ = 0.0;  // 0 or in [0.5, 1)
    std::int64_t exponent_ = 0;
};

}  // namespace xlmhg

#endif  // XLMHG_SCALED_DOUBLE_HPP
