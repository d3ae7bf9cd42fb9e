#include "ldpc/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ldpc/errors.hpp"

namespace ldpc {

BigUint::BigUint(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::factorial(std::int64_t k) {
    if (k < 0) throw Error("factorial of negative integer");
    BigUint r(1);
    for (std::int64_t i = 2; i <= k; ++i) r.mul_u32(static_cast<std::uint32_t>(i));
    return r;
}

BigUint BigUint::binomial(std::int64_t k, std::int64_t r) {
    if (r < 0 || r > k) return BigUint(0);
    if (r > k - r) r = k - r;
    BigUint acc(1);
    for (std::int64_t i = 1; i <= r; ++i) {
        acc.mul_u32(static_cast<std::uint32_t>(k - r + i));
        acc.div_u32_exact(static_cast<std::uint32_t>(i));
    }
    return acc;
}

BigUint BigUint::pow(const BigUint& base, int exponent) {
    BigUint r(1);
    for (int i = 0; i < exponent; ++i) r = r * base;
    return r;
}

BigUint& BigUint::mul_u32(std::uint32_t factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const std::uint64_t prod = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
        carry = prod >> 32;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
        carry >>= 32;
    }
    return *this;
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (limbs_.empty() || other.limbs_.empty()) return BigUint();
    BigUint out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            const std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                      out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry != 0) {
            const std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigUint& BigUint::div_u32_exact(std::uint32_t divisor) {
    if (divisor == 0) throw Error("bigint division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0) throw Error("bigint division was not exact");
    trim();
    return *this;
}

BigUint BigUint::shifted_right(std::int64_t bits) const {
    if (bits <= 0) return *this;
    const std::int64_t limb_shift = bits / 32;
    const int bit_shift = static_cast<int>(bits % 32);
    if (limb_shift >= static_cast<std::int64_t>(limbs_.size())) return BigUint();
    BigUint out;
    out.limbs_.assign(limbs_.begin() + limb_shift, limbs_.end());
    if (bit_shift > 0) {
        for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
            std::uint32_t hi = (i + 1 < out.limbs_.size()) ? out.limbs_[i + 1] : 0;
            out.limbs_[i] = (out.limbs_[i] >> bit_shift) |
                            (static_cast<std::uint32_t>(static_cast<std::uint64_t>(hi)
                                                        << (32 - bit_shift)));
        }
    }
    out.trim();
    return out;
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::int64_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    const std::uint32_t top = limbs_.back();
    int top_bits = 32;
    for (int b = 31; b >= 0; --b) {
        if (top & (1u << b)) {
            top_bits = b + 1;
            break;
        }
    }
    return static_cast<std::int64_t>(limbs_.size() - 1) * 32 + top_bits;
}

double BigUint::log_e() const {
    if (is_zero()) throw Error("log of zero");
    const std::int64_t bl = bit_length();
    if (bl <= 63) return std::log(static_cast<double>(to_u64()));
    const std::int64_t drop = bl - 63;
    const BigUint top = shifted_right(drop);
    return std::log(static_cast<double>(top.to_u64())) +
           static_cast<double>(drop) * std::numbers::ln2;
}

std::uint64_t BigUint::to_u64() const {
    if (bit_length() > 64) throw Error("bigint does not fit in 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace ldpc
