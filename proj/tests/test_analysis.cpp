#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ncx/analysis.hpp"
#include "ncx/errors.hpp"
#include "test_support.hpp"

using namespace ncx;

namespace {

const ComplexityTable& table3600() {
    static const ComplexityTable t = compute_table(3600);
    return t;
}

}  // namespace

TEST_CASE("bad factorizations") {
    const auto pairs = bad_factorizations(table3600(), 60);

    const auto contains = [&](uint64_t m, uint64_t n) {
        return std::any_of(pairs.begin(), pairs.end(),
                           [&](const BadFactorization& p) {
                               return p.m == m && p.n == n;
                           });
    };

    // 1*n is always bad.
    for (uint64_t n = 2; n <= 60; ++n) CHECK(contains(1, n));
    CHECK(contains(1, 2));
    CHECK(contains(2, 23));
    CHECK(contains(23, 2));

    // Entries recompute, and the list is lexicographic.
    for (const auto& p : pairs) {
        CHECK(p.deficit >= 1);
        CHECK(table3600().at(p.m) + table3600().at(p.n) -
                  table3600().at(p.m * p.n) ==
              p.deficit);
    }
    CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                         [](const BadFactorization& a, const BadFactorization& b) {
                             return std::tie(a.m, a.n) < std::tie(b.m, b.n);
                         }));

    CHECK_THROWS_AS(bad_factorizations(table3600(), 61), RangeError);
}

TEST_CASE("bad factor columns at 23, 41, 59 stand out") {
    const auto pairs = bad_factorizations(table3600(), 60);
    std::array<unsigned, 61> column{};
    for (const auto& p : pairs)
        if (p.m >= 2) ++column[p.n];

    // The three conspicuous verticals are the three densest columns and
    // beat the median by a wide margin (53, 50, 38 against a median of 7).
    std::vector<std::pair<unsigned, uint64_t>> ranked;
    for (uint64_t n = 2; n <= 60; ++n) ranked.emplace_back(column[n], n);
    std::sort(ranked.rbegin(), ranked.rend());
    CHECK(ranked[0].second == 23);
    CHECK(ranked[1].second == 59);
    CHECK(ranked[2].second == 41);

    const unsigned median = ranked[ranked.size() / 2].first;
    for (uint64_t n : {uint64_t(23), uint64_t(41), uint64_t(59)})
        CHECK(column[n] > 4 * median);
}

TEST_CASE("numbers of great complexity") {
    const auto seq = great_complexity_sequence(table3600(), 27);
    REQUIRE(seq.entries.size() == 27);
    CHECK_FALSE(seq.truncated_at.has_value());
    for (unsigned k = 1; k <= 27; ++k) {
        CHECK(seq.entries[k - 1].k == k);
        CHECK(seq.entries[k - 1].n == ncx::testing::kGreatComplexity[k - 1]);
    }

    // Minimality, by scan.
    for (const auto& entry : seq.entries) {
        CHECK(table3600().at(entry.n) == entry.k);
        for (uint64_t j = 1; j < entry.n; ++j)
            CHECK(table3600().at(j) != entry.k);
    }

    // A class out of range truncates with a notice.
    const auto truncated = great_complexity_sequence(table3600(), 40);
    CHECK(truncated.truncated_at.has_value());
    CHECK(truncated.entries.size() < 40);
}

TEST_CASE("coincidence with the additive bound") {
    const SpfSieve sieve(1000);
    const AdditiveBoundTable additive(sieve);
    const auto& table = ncx::testing::table_small();

    const CoincidenceStats at1000 = coincidence_stats(table, additive, 1000);
    CHECK(at1000.equal_count == 771);
    CHECK(at1000.exceptions.size() == 1000 - 771);

    const CoincidenceStats at220 = coincidence_stats(table, additive, 220);
    REQUIRE(at220.exceptions.size() == ncx::testing::kAdditiveExceptions.size());
    for (std::size_t i = 0; i < at220.exceptions.size(); ++i) {
        CHECK(at220.exceptions[i].n == ncx::testing::kAdditiveExceptions[i].n);
        CHECK(at220.exceptions[i].complexity ==
              ncx::testing::kAdditiveExceptions[i].complexity);
        CHECK(at220.exceptions[i].additive ==
              ncx::testing::kAdditiveExceptions[i].additive);
    }

    CHECK(coincidence_stats(table, additive, 45).exceptions.empty());

    // The gap is one on all but a handful of values; report the outliers.
    unsigned wide = 0;
    for (const auto& e : at1000.exceptions)
        if (e.additive - e.complexity != 1) ++wide;
    MESSAGE("additive-bound exceptions below 1000 with gap > 1: ", wide);

    // On the exception rows the binary bound covers the additive one,
    // except exactly at 161.
    for (const auto& e : at220.exceptions) {
        if (e.n == 161)
            CHECK(binary_bound(e.n) < e.additive);
        else
            CHECK(binary_bound(e.n) >= e.additive);
    }
}

TEST_CASE("powers of two") {
    const auto rows = selfridge_check(table3600());
    REQUIRE(rows.size() == 11);  // 2^11 = 2048 <= 3600 < 4096
    for (const auto& row : rows) {
        CHECK(row.expected == 2 * row.exponent);
        CHECK(row.complexity == row.expected);
    }

    const auto mersenne = mersenne_check(table3600());
    REQUIRE(mersenne.size() == 10);  // e = 2..11
    for (const auto& row : mersenne) {
        CHECK(row.expected == 2 * row.exponent - 1);
        // The question is whether any value drops below 2e - 1; none does
        // in range. Above it is common (2^3 - 1 = 7 costs 6, not 5).
        CHECK(row.complexity >= row.expected);
    }
    CHECK(mersenne[0].exponent == 2);
    CHECK(mersenne[0].complexity == 3);  // equality at e = 2
    CHECK(mersenne[1].complexity == 6);  // 2^3 - 1 = 7 sits above the line
}

TEST_CASE("ratio window") {
    const auto& table = ncx::testing::table_small();
    const RatioRecord single = ratio_extremes(table, 2, 2);
    CHECK(single.n == 2);
    CHECK(single.ratio == doctest::Approx(2.0 / std::log(2.0)));

    const RatioRecord window = ratio_extremes(table, 2, 2000);
    CHECK(window.ratio <= 3.0 / std::log(2.0));
    CHECK(window.ratio >= 3.0 / std::log(3.0));

    // Against a direct scan.
    double best = 0;
    uint64_t arg = 0;
    for (uint64_t n = 2; n <= 2000; ++n) {
        const double r = double(table.at(n)) / std::log(double(n));
        if (r > best) {
            best = r;
            arg = n;
        }
    }
    CHECK(window.n == arg);
    CHECK(window.ratio == doctest::Approx(best));

    CHECK_THROWS_AS(ratio_extremes(table, 1, 5), RangeError);
    CHECK_THROWS_AS(ratio_extremes(table, 2, table.max_n() + 1), RangeError);
}

TEST_CASE("figure datasets") {
    const auto& table = ncx::testing::table_small();
    const auto rows = figure2_data(table, 2000);
    REQUIRE(rows.size() == 2000);

    CHECK(rows[2].n == 3);
    CHECK(rows[2].complexity == 3);
    CHECK(rows[2].lower == doctest::Approx(3.0));
    CHECK(rows[2].midline == doctest::Approx(3.962406252));
    CHECK(rows[2].upper == doctest::Approx(4.754887502));

    // No point above the upper curve: 2^value <= n^3 exactly.
    for (const auto& row : rows) {
        if (row.n < 2) continue;
        REQUIRE(row.complexity < 64);
        CHECK((uint64_t(1) << row.complexity) <= row.n * row.n * row.n);
    }

    MESSAGE("midline fraction to 2000: ", midline_fraction(table, 2000));
}
