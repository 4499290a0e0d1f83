#include "ncx/sieve.hpp"

#include <algorithm>

#include "ncx/errors.hpp"

namespace ncx {

SpfSieve::SpfSieve(uint64_t limit) : limit_(limit) {
    if (limit >= (uint64_t(1) << 32))
        throw CapacityError("sieve limit exceeds 32-bit factor storage");
    spf_.assign(limit + 1, 0);
    if (limit >= 1) spf_[1] = 1;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
    }
}

uint32_t SpfSieve::spf(uint64_t n) const {
    if (n < 1 || n > limit_)
        throw RangeError("sieve index " + std::to_string(n) + " outside [1, " +
                         std::to_string(limit_) + "]");
    return spf_[n];
}

std::vector<std::pair<uint32_t, uint32_t>> SpfSieve::factorize(uint64_t n) const {
    std::vector<std::pair<uint32_t, uint32_t>> factors;
    uint64_t m = n;
    if (m < 1 || m > limit_)
        throw RangeError("factorize argument outside sieve range");
    while (m > 1) {
        uint32_t p = spf_[m];
        uint32_t mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        factors.emplace_back(p, mult);
    }
    return factors;
}

void SpfSieve::divisors_up_to_sqrt(uint64_t n, std::vector<uint32_t>& out) const {
    const auto factors = factorize(n);
    const std::size_t start = out.size();
    std::vector<uint64_t> divisors{1};
    for (const auto& [p, mult] : factors) {
        const std::size_t existing = divisors.size();
        uint64_t pk = 1;
        for (uint32_t e = 1; e <= mult; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) {
                uint64_t d = divisors[i] * pk;
                if (d * d <= n) divisors.push_back(d);
            }
        }
    }
    for (uint64_t d : divisors)
        if (d >= 2) out.push_back(static_cast<uint32_t>(d));
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
}

}  // namespace ncx
