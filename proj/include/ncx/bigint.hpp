#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ncx {

// Unsigned big integer, base 2^32 limbs. Just enough arithmetic for the
// counting sequences: addition, multiplication, small exact division,
// comparison, decimal output.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(uint64_t v);

    bool is_zero() const noexcept { return limbs_.empty(); }
    std::size_t bit_length() const noexcept;

    BigUint& operator+=(const BigUint& other);
    friend BigUint operator+(BigUint a, const BigUint& b) {
        a += b;
        return a;
    }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    BigUint& mul_small(uint32_t m);
    // Exact division; logic_error if a remainder is left.
    BigUint& divexact_small(uint32_t d);

    static BigUint power_of_two(uint64_t exponent);

    friend bool operator==(const BigUint&, const BigUint&) = default;
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

    std::string to_decimal() const;

private:
    void trim();
    std::vector<uint32_t> limbs_;  // little-endian, no leading zeros
};

}  // namespace ncx
