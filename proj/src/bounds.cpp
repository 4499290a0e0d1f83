#include "ncx/bounds.hpp"

#include <bit>
#include <cmath>

#include "ncx/errors.hpp"
#include "ncx/table.hpp"

namespace ncx {

unsigned additive_bound(uint64_t n, const SpfSieve& sieve) {
    if (n < 1 || n > sieve.limit())
        throw RangeError("additive_bound argument outside sieve range");
    if (n == 1) return 1;
    const uint64_t p = sieve.spf(n);
    if (p == n) return 1 + additive_bound(n - 1, sieve);
    return additive_bound(p, sieve) + additive_bound(n / p, sieve);
}

AdditiveBoundTable::AdditiveBoundTable(const SpfSieve& sieve) {
    const uint64_t limit = sieve.limit();
    values_.assign(limit + 1, 0);
    if (limit >= 1) values_[1] = 1;
    for (uint64_t n = 2; n <= limit; ++n) {
        const uint64_t p = sieve.spf(n);
        values_[n] = (p == n) ? uint8_t(1 + values_[n - 1])
                              : uint8_t(values_[p] + values_[n / p]);
    }
}

unsigned AdditiveBoundTable::operator[](uint64_t n) const {
    if (n < 1 || n > limit())
        throw RangeError("additive bound table index out of range");
    return values_[n];
}

unsigned binary_bound(uint64_t n) {
    if (n == 0) throw RangeError("binary_bound requires n >= 1");
    if (n == 1) return 1;
    const unsigned k = std::bit_width(n) - 1;
    return 2 * k + unsigned(std::popcount(n)) - 1;
}

unsigned ternary_lower_bound(uint64_t n) {
    if (n == 0) throw RangeError("ternary_lower_bound requires n >= 1");
    if (n == 1) return 1;
    if (n == 2) return 2;
    uint64_t pow3 = 3;
    unsigned a = 1;
    while (pow3 <= n / 3 && pow3 * 3 <= n) {
        pow3 *= 3;
        ++a;
    }
    const uint64_t third = pow3 / 3;
    if (n < pow3 + third) return 3 * a;
    if (n < 2 * pow3) return 3 * a + 1;
    return 3 * a + 2;
}

BoundsReport bounds_report(const ComplexityTable& table, const SpfSieve& sieve,
                           uint64_t n) {
    BoundsReport report;
    report.n = n;
    report.complexity = table.at(n);
    report.lower = ternary_lower_bound(n);
    report.additive = additive_bound(n, sieve);
    report.binary = binary_bound(n);

    const unsigned value = *report.complexity;
    bool ok = report.lower <= value && value <= report.additive;
    // log2(1+n) <= value, exactly: 1+n <= 2^value.
    if (value < 64)
        ok = ok && (n + 1) <= (uint64_t(1) << value);
    // additive <= 3 log2 n, exactly: 2^additive <= n^3 (n >= 2).
    if (n >= 2) {
        const unsigned __int128 cube = (unsigned __int128)n * n * n;
        ok = ok && report.additive < 128 &&
             ((unsigned __int128)1 << report.additive) <= cube;
    }
    report.verified = ok;
    return report;
}

ChernoffTail chernoff_tail_count(unsigned k) {
    if (k < 2) throw RangeError("chernoff_tail_count requires k >= 2");
    if (k >= 62) throw RangeError("chernoff_tail_count block exceeds 64-bit range");
    const double threshold = 2.5 * k + std::sqrt(k * std::log(double(k)));
    ChernoffTail result;
    const uint64_t lo = uint64_t(1) << k;
    const uint64_t hi = uint64_t(1) << (k + 1);
    for (uint64_t n = lo; n < hi; ++n)
        if (double(binary_bound(n)) > threshold) ++result.count;
    result.bound = 2.0 * double(lo) / (double(k) * double(k));
    return result;
}

RatioMax additive_ratio_max(const AdditiveBoundTable& table, uint64_t from,
                            uint64_t to) {
    if (from < 2 || from > to || to > table.limit())
        throw RangeError("additive_ratio_max window out of range");
    RatioMax best;
    for (uint64_t n = from; n <= to; ++n) {
        const double ratio = double(table[n]) / std::log(double(n));
        if (ratio > best.ratio) {
            best.ratio = ratio;
            best.n = n;
        }
    }
    return best;
}

}  // namespace ncx
