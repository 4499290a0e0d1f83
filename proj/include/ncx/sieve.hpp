#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ncx {

// Smallest-prime-factor sieve over [1, limit]; spf(1) == 1.
class SpfSieve {
public:
    explicit SpfSieve(uint64_t limit);

    uint64_t limit() const noexcept { return limit_; }

    // RangeError outside [1, limit].
    uint32_t spf(uint64_t n) const;

    bool is_prime(uint64_t n) const { return n >= 2 && spf(n) == n; }

    // Prime factorization as (prime, multiplicity) pairs, primes ascending.
    std::vector<std::pair<uint32_t, uint32_t>> factorize(uint64_t n) const;

    // Appends every divisor d of n with 2 <= d and d*d <= n, ascending.
    void divisors_up_to_sqrt(uint64_t n, std::vector<uint32_t>& out) const;

private:
    uint64_t limit_;
    std::vector<uint32_t> spf_;
};

}  // namespace ncx
