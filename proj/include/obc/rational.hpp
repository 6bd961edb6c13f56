#pragma once

#include <cstdint>
#include <string>

namespace obc {

// Exact rational with a power-of-two denominator. All the code-length
// identities here (Kraft sums, expected lengths, state probabilities) are
// dyadic, so this is enough to evaluate them with zero tolerance.
class DyadicRational {
public:
    constexpr DyadicRational() = default;
    constexpr DyadicRational(std::int64_t num, unsigned denom_log2 = 0)
        : num_(num), exp_(denom_log2) {
        normalize();
    }

    static constexpr DyadicRational zero() { return DyadicRational(0); }
    // 2^(-k)
    static constexpr DyadicRational pow2_inv(unsigned k) { return DyadicRational(1, k); }

    constexpr std::int64_t numerator() const { return num_; }
    // denominator = 2^denominator_log2, always in lowest terms
    constexpr unsigned denominator_log2() const { return exp_; }
    constexpr std::int64_t denominator() const { return std::int64_t(1) << exp_; }

    constexpr DyadicRational operator+(DyadicRational o) const {
        unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
        return DyadicRational(shifted(e) + o.shifted(e), e);
    }
    constexpr DyadicRational operator-(DyadicRational o) const {
        unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
        return DyadicRational(shifted(e) - o.shifted(e), e);
    }
    constexpr DyadicRational operator*(std::int64_t k) const {
        return DyadicRational(num_ * k, exp_);
    }

    constexpr bool operator==(DyadicRational o) const {
        return num_ == o.num_ && exp_ == o.exp_;
    }
    constexpr bool operator!=(DyadicRational o) const { return !(*this == o); }
    constexpr bool operator<(DyadicRational o) const {
        unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
        return shifted(e) < o.shifted(e);
    }
    constexpr bool operator<=(DyadicRational o) const { return *this < o || *this == o; }
    constexpr bool operator>(DyadicRational o) const { return o < *this; }
    constexpr bool operator>=(DyadicRational o) const { return o <= *this; }

    constexpr bool is_integer() const { return exp_ == 0; }

    double to_double() const {
        return double(num_) / double(std::int64_t(1) << exp_);
    }

    std::string to_string() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(denominator());
    }

private:
    constexpr std::int64_t shifted(unsigned e) const {
        return num_ << (e - exp_);
    }
    constexpr void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    std::int64_t num_ = 0;
    unsigned exp_ = 0;
};

} // namespace obc
