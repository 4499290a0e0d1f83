#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncx/sieve.hpp"

namespace ncx {

class ComplexityTable;

// Completely additive upper bound on the complexity: 1 at n = 1,
// 1 + f(p - 1) at a prime p, and f(ab) = f(a) + f(b) on products.
// One-shot recursion over the sieve; use AdditiveBoundTable for scans.
unsigned additive_bound(uint64_t n, const SpfSieve& sieve);

// The additive bound tabulated bottom-up over the sieve range.
class AdditiveBoundTable {
public:
    explicit AdditiveBoundTable(const SpfSieve& sieve);

    uint64_t limit() const noexcept { return values_.size() - 1; }
    unsigned operator[](uint64_t n) const;  // RangeError outside [1, limit]

private:
    std::vector<uint8_t> values_;
};

// Upper bound read off the binary expansion: with 2^k <= n < 2^(k+1) the
// Horner form costs 2k plus one per set bit below the leading one.
// binary_bound(1) == 1 by convention (the k = 0 case degenerates).
unsigned binary_bound(uint64_t n);

// Step lower bound from the ternary scale: 3a, 3a+1, 3a+2 on the intervals
// [3^a, 3^a + 3^(a-1)), [3^a + 3^(a-1), 2*3^a), [2*3^a, 3^(a+1)).
// ternary_lower_bound(1) == 1 by convention; the value 2 at n = 2 is the
// a = 0 instance of the third branch.
unsigned ternary_lower_bound(uint64_t n);

struct BoundsReport {
    uint64_t n = 0;
    unsigned lower = 0;  // ternary step bound
    std::optional<unsigned> complexity;
    unsigned additive = 0;
    unsigned binary = 0;
    bool verified = false;
};

// Bundles the bounds around the exact value and verifies the sandwich:
// lower <= value <= additive, log2(1+n) <= value, additive <= 3 log2 n.
BoundsReport bounds_report(const ComplexityTable& table, const SpfSieve& sieve,
                           uint64_t n);

struct ChernoffTail {
    uint64_t count = 0;  // binary_bound(n) > 5k/2 + sqrt(k ln k) over [2^k, 2^(k+1))
    double bound = 0.0;  // 2 * 2^k / k^2
};

// Tail census behind the almost-all upper bound; k >= 2.
ChernoffTail chernoff_tail_count(unsigned k);

struct RatioMax {
    uint64_t n = 0;
    double ratio = 0.0;
};

// Maximum of additive_bound(n) / ln n over [from, to], 2 <= from.
RatioMax additive_ratio_max(const AdditiveBoundTable& table, uint64_t from,
                            uint64_t to);

}  // namespace ncx
