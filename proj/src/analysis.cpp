#include "ncx/analysis.hpp"

#include <cmath>

#include "ncx/errors.hpp"

namespace ncx {

std::vector<BadFactorization> bad_factorizations(const ComplexityTable& table,
                                                 uint64_t max_factor) {
    if (max_factor == 0 || max_factor > table.max_n() / max_factor)
        throw RangeError("bad_factorizations needs the full product square in range");
    std::vector<BadFactorization> pairs;
    for (uint64_t m = 1; m <= max_factor; ++m) {
        const unsigned vm = table.at(m);
        for (uint64_t n = 1; n <= max_factor; ++n) {
            const unsigned split = vm + table.at(n);
            const unsigned direct = table.at(m * n);
            if (direct < split)
                pairs.push_back({m, n, split - direct});
        }
    }
    return pairs;
}

GreatComplexitySequence great_complexity_sequence(const ComplexityTable& table,
                                                  unsigned k_max) {
    std::vector<uint64_t> least(k_max + 1, 0);
    for (uint64_t n = 1; n <= table.max_n(); ++n) {
        const unsigned k = table.at(n);
        if (k <= k_max && least[k] == 0) least[k] = n;
    }
    GreatComplexitySequence result;
    for (unsigned k = 1; k <= k_max; ++k) {
        if (least[k] == 0) {
            result.truncated_at = k;
            break;
        }
        result.entries.push_back({k, least[k]});
    }
    return result;
}

CoincidenceStats coincidence_stats(const ComplexityTable& table,
                                   const AdditiveBoundTable& additive,
                                   uint64_t upto) {
    if (upto < 1 || upto > table.max_n() || upto > additive.limit())
        throw RangeError("coincidence_stats range exceeds the tables");
    CoincidenceStats stats;
    for (uint64_t n = 1; n <= upto; ++n) {
        const unsigned value = table.at(n);
        const unsigned bound = additive[n];
        if (value == bound)
            ++stats.equal_count;
        else
            stats.exceptions.push_back({n, value, bound});
    }
    return stats;
}

std::vector<PowerCheckRow> selfridge_check(const ComplexityTable& table) {
    std::vector<PowerCheckRow> rows;
    for (unsigned e = 1; (uint64_t(1) << e) <= table.max_n(); ++e)
        rows.push_back({e, table.at(uint64_t(1) << e), 2 * e});
    return rows;
}

std::vector<PowerCheckRow> mersenne_check(const ComplexityTable& table) {
    std::vector<PowerCheckRow> rows;
    for (unsigned e = 2; (uint64_t(1) << e) - 1 <= table.max_n(); ++e)
        rows.push_back({e, table.at((uint64_t(1) << e) - 1), 2 * e - 1});
    return rows;
}

RatioRecord ratio_extremes(const ComplexityTable& table, uint64_t from,
                           uint64_t to) {
    if (from < 2 || from > to || to > table.max_n())
        throw RangeError("ratio_extremes window out of range");
    RatioRecord best;
    for (uint64_t n = from; n <= to; ++n) {
        const double ratio = double(table.at(n)) / std::log(double(n));
        if (ratio > best.ratio) {
            best.ratio = ratio;
            best.n = n;
        }
    }
    return best;
}

std::vector<Figure2Row> figure2_data(const ComplexityTable& table,
                                     uint64_t limit) {
    if (limit < 1 || limit > table.max_n())
        throw RangeError("figure limit out of range");
    std::vector<Figure2Row> rows;
    rows.reserve(limit);
    const double ln2 = std::log(2.0);
    const double ln3 = std::log(3.0);
    for (uint64_t n = 1; n <= limit; ++n) {
        const double ln_n = std::log(double(n));
        rows.push_back({n, table.at(n), 3.0 * ln_n / ln3,
                        2.5 * ln_n / ln2, 3.0 * ln_n / ln2});
    }
    return rows;
}

double midline_fraction(const ComplexityTable& table, uint64_t upto) {
    if (upto < 2 || upto > table.max_n())
        throw RangeError("midline_fraction range out of table");
    uint64_t below = 0;
    for (uint64_t n = 2; n <= upto; ++n) {
        const double lg = std::log2(double(n));
        const double threshold = 2.5 * lg + std::sqrt(lg * std::log(lg));
        if (double(table.at(n)) <= threshold) ++below;
    }
    return double(below) / double(upto - 1);
}

}  // namespace ncx
