#include "ncx/bigint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ncx {

BigUint::BigUint(uint64_t v) {
    if (v != 0) limbs_.push_back(uint32_t(v & 0xFFFFFFFFu));
    if (v >> 32) limbs_.push_back(uint32_t(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
}

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = uint32_t(sum & 0xFFFFFFFFu);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(uint32_t(carry));
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint result;
    if (a.is_zero() || b.is_zero()) return result;
    result.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        const uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = result.limbs_[i + j] + ai * b.limbs_[j] + carry;
            result.limbs_[i + j] = uint32_t(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = result.limbs_[k] + carry;
            result.limbs_[k] = uint32_t(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
            ++k;
        }
    }
    result.trim();
    return result;
}

BigUint& BigUint::mul_small(uint32_t m) {
    if (m == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t cur = uint64_t(limb) * m + carry;
        limb = uint32_t(cur & 0xFFFFFFFFu);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(uint32_t(carry & 0xFFFFFFFFu));
        carry >>= 32;
    }
    return *this;
}

BigUint& BigUint::divexact_small(uint32_t d) {
    if (d == 0) throw std::logic_error("division by zero");
    uint64_t remainder = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (remainder << 32) | limbs_[i];
        limbs_[i] = uint32_t(cur / d);
        remainder = cur % d;
    }
    if (remainder != 0) throw std::logic_error("inexact small division");
    trim();
    return *this;
}

BigUint BigUint::power_of_two(uint64_t exponent) {
    BigUint result;
    result.limbs_.assign(exponent / 32 + 1, 0);
    result.limbs_.back() = uint32_t(1) << (exponent % 32);
    return result;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint scratch = *this;
    std::string digits;
    while (!scratch.is_zero()) {
        uint64_t remainder = 0;
        for (std::size_t i = scratch.limbs_.size(); i-- > 0;) {
            uint64_t cur = (remainder << 32) | scratch.limbs_[i];
            scratch.limbs_[i] = uint32_t(cur / 1000000000u);
            remainder = cur % 1000000000u;
        }
        scratch.trim();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(char('0' + remainder % 10));
            remainder /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace ncx
