#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncx/bounds.hpp"
#include "ncx/table.hpp"

namespace ncx {

struct BadFactorization {
    uint64_t m = 0, n = 0;
    unsigned deficit = 0;  // value(m) + value(n) - value(mn), >= 1
};

// Every ordered pair (m, n) with m, n <= max_factor whose product costs
// strictly less than the factors together; lexicographic. Requires
// max_factor^2 <= table range.
std::vector<BadFactorization> bad_factorizations(const ComplexityTable& table,
                                                 uint64_t max_factor);

struct GreatComplexityEntry {
    unsigned k = 0;
    uint64_t n = 0;  // least n of complexity k
};

struct GreatComplexitySequence {
    std::vector<GreatComplexityEntry> entries;
    std::optional<unsigned> truncated_at;  // first class empty in range
};

GreatComplexitySequence great_complexity_sequence(const ComplexityTable& table,
                                                  unsigned k_max);

struct CoincidenceException {
    uint64_t n = 0;
    unsigned complexity = 0;
    unsigned additive = 0;
};

struct CoincidenceStats {
    uint64_t equal_count = 0;
    std::vector<CoincidenceException> exceptions;
};

// Where the additive bound stops being exact.
CoincidenceStats coincidence_stats(const ComplexityTable& table,
                                   const AdditiveBoundTable& additive,
                                   uint64_t upto);

struct PowerCheckRow {
    unsigned exponent = 0;
    unsigned complexity = 0;
    unsigned expected = 0;
};

// Rows (e, value(2^e), 2e) for every 2^e in range, e >= 1.
std::vector<PowerCheckRow> selfridge_check(const ComplexityTable& table);

// Rows (e, value(2^e - 1), 2e - 1) for every 2^e - 1 in range, e >= 2.
std::vector<PowerCheckRow> mersenne_check(const ComplexityTable& table);

struct RatioRecord {
    uint64_t n = 0;
    double ratio = 0.0;  // value(n) / ln n
};

// Maximum of value(n)/ln n over [from, to], 2 <= from.
RatioRecord ratio_extremes(const ComplexityTable& table, uint64_t from,
                           uint64_t to);

struct Figure2Row {
    uint64_t n = 0;
    unsigned complexity = 0;
    double lower = 0.0;    // 3 ln n / ln 3
    double midline = 0.0;  // 5 ln n / (2 ln 2)
    double upper = 0.0;    // 3 ln n / ln 2
};

std::vector<Figure2Row> figure2_data(const ComplexityTable& table,
                                     uint64_t limit);

// Fraction of 2 <= n <= upto below the probabilistic midline
// (5/2) log2 n + sqrt(log2 n * ln log2 n). Reported, never asserted.
double midline_fraction(const ComplexityTable& table, uint64_t upto);

}  // namespace ncx
