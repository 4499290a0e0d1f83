// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failures.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncx/analysis.hpp"
#include "ncx/boolean.hpp"
#include "ncx/bounds.hpp"
#include "ncx/conjectures.hpp"
#include "ncx/errors.hpp"
#include "ncx/expression.hpp"
#include "ncx/sieve.hpp"
#include "ncx/table.hpp"
#include "test_support.hpp"

using namespace ncx;
namespace golden = ncx::testing;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& label,
            const std::string& note = "") {
    std::printf("%s %2d  %s%s%s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++failures;
}

template <class F>
double timed_ms(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::string ms_note(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f ms", ms);
    return buf;
}

using uint128 = unsigned __int128;

uint128 pow_u128(uint64_t base, unsigned exponent) {
    uint128 r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace

int main() {
    // Shared 200000-entry table; its build time is criterion 13.
    const ComplexityTable* table = nullptr;
    ComplexityTable storage = compute_table(1);
    const double build_ms = timed_ms([&] {
        storage = compute_table(200000, ComputeMode::PrunedExact);
    });
    table = &storage;

    // 1. First twenty values, under a millisecond.
    try {
        bool ok = true;
        ComplexityTable twenty = compute_table(1);
        const double ms = timed_ms([&] { twenty = compute_table(20); });
        for (uint64_t n = 1; n <= 20; ++n)
            ok = ok && twenty.at(n) == golden::kFirstValues[n - 1];
        report(1, ok && ms < 1.0, "first twenty values match", ms_note(ms));
    } catch (const std::exception& e) {
        report(1, false, "first twenty values match", e.what());
    }

    // 2. 4787 has complexity 28 with a checkable witness.
    try {
        bool ok = true;
        std::string note;
        const double ms = timed_ms([&] {
            const ComplexityTable t = compute_table(4787);
            ok = ok && t.at(4787) == 28;
            const Expression witness = reconstruct_optimal(t, 4787);
            ok = ok && witness.weight() == 28 && witness.value() == 4787;
            const Expression reparsed =
                parse(render(witness, RenderStyle::Canonical));
            ok = ok && reparsed.value() == 4787 && reparsed.weight() == 28;
        });
        ok = ok && ms < 1000.0;
        report(2, ok, "4787 costs 28 with a weight-28 witness", ms_note(ms));
    } catch (const std::exception& e) {
        report(2, false, "4787 costs 28 with a weight-28 witness", e.what());
    }

    // 3. Additive-bound exceptions below 220; 771 coincidences below 1000.
    try {
        const SpfSieve sieve(1000);
        const AdditiveBoundTable additive(sieve);
        const CoincidenceStats at220 = coincidence_stats(*table, additive, 220);
        bool ok = at220.exceptions.size() == golden::kAdditiveExceptions.size();
        if (ok) {
            for (std::size_t i = 0; i < at220.exceptions.size(); ++i) {
                const auto& got = at220.exceptions[i];
                const auto& want = golden::kAdditiveExceptions[i];
                ok = ok && got.n == want.n && got.complexity == want.complexity &&
                     got.additive == want.additive;
            }
        }
        const CoincidenceStats at1000 =
            coincidence_stats(*table, additive, 1000);
        ok = ok && at1000.equal_count == 771;
        report(3, ok, "additive-bound exception table and 771 coincidences");
    } catch (const std::exception& e) {
        report(3, false, "additive-bound exception table", e.what());
    }

    // 4. Numbers of great complexity through class 27; classes beyond reported.
    try {
        const auto seq = great_complexity_sequence(*table, 35);
        bool ok = seq.entries.size() >= 27;
        for (unsigned k = 1; ok && k <= 27; ++k)
            ok = seq.entries[k - 1].n == golden::kGreatComplexity[k - 1];
        std::string note = "recomputed 28..35:";
        for (unsigned k = 28; k <= 35 && k <= seq.entries.size(); ++k) {
            note += " " + std::to_string(seq.entries[k - 1].n);
            if (seq.entries[k - 1].n != golden::kGreatComplexityTail[k - 28])
                note += "(!)";
        }
        report(4, ok, "great-complexity sequence through 2879", note);
    } catch (const std::exception& e) {
        report(4, false, "great-complexity sequence through 2879", e.what());
    }

    // 5. Bound sandwich over the full range, exact integer arithmetic.
    try {
        uint64_t violations = 0;
        double ms = 0;
        const SpfSieve sieve(200000);
        const AdditiveBoundTable additive(sieve);
        ms = timed_ms([&] {
            for (uint64_t n = 2; n <= 200000; ++n) {
                const unsigned value = table->at(n);
                const unsigned upper = additive[n];
                const uint128 cube = pow_u128(n, 3);
                // ceil(3 log3 n) <= value  <=>  n^3 <= 3^value
                if (cube > pow_u128(3, value)) ++violations;
                if (value > upper) ++violations;
                // additive <= 3 log2 n  <=>  2^additive <= n^3
                if ((uint128(1) << upper) > cube) ++violations;
                // log2(1+n) <= value  <=>  1+n <= 2^value
                if (uint128(n) + 1 > (uint128(1) << value)) ++violations;
            }
        });
        const bool ok = violations == 0 && ms < 30000.0;
        report(5, ok, "bound sandwich holds to 200000",
               violations ? std::to_string(violations) + " violations"
                          : ms_note(ms));
    } catch (const std::exception& e) {
        report(5, false, "bound sandwich holds to 200000", e.what());
    }

    // 6. Naive and pruned modes agree to 5000.
    try {
        ComplexityTable naive = compute_table(1);
        const double ms = timed_ms(
            [&] { naive = compute_table(5000, ComputeMode::NaiveExact); });
        const ComplexityTable pruned =
            compute_table(5000, ComputeMode::PrunedExact);
        const bool ok = naive == pruned && ms < 60000.0;
        report(6, ok, "naive and pruned tables identical to 5000",
               ms_note(ms));
    } catch (const std::exception& e) {
        report(6, false, "naive and pruned tables identical to 5000", e.what());
    }

    // 7. Powers of two and their neighbours below, plus the 2^27 identity.
    try {
        bool ok = true;
        for (const auto& row : selfridge_check(*table))
            ok = ok && row.complexity == row.expected;
        // No 2^e - 1 in the window costs less than 2e - 1.
        for (const auto& row : mersenne_check(*table))
            ok = ok && row.complexity >= row.expected;
        const Expression full = golden::two_pow_27_expr();
        ok = ok && full.value() == 134217728 && full.weight() == 57;
        const Expression product = golden::two_pow_27_product();
        ok = ok && product.value() == 134217727 && product.weight() == 56;
        report(7, ok, "power-of-two window and the 2^27 identity");
    } catch (const std::exception& e) {
        report(7, false, "power-of-two window and the 2^27 identity", e.what());
    }

    // 8. Extremal values: table maxima and exhaustive enumeration.
    try {
        std::vector<uint64_t> largest(64, 0);
        for (uint64_t n = 1; n <= table->max_n(); ++n) {
            const unsigned k = table->at(n);
            if (k < largest.size() && n > largest[k]) largest[k] = n;
        }
        bool ok = true;
        for (unsigned m = 1; m <= 33; ++m) {
            const uint64_t closed = max_value(m);
            if (closed <= table->max_n()) ok = ok && largest[m] == closed;
        }
        const auto enumerated = golden::attainable_values(12);
        ok = ok && !enumerated.overflowed;
        for (unsigned m = 1; m <= 12; ++m)
            ok = ok && enumerated.max_at(m) == max_value(m);
        report(8, ok, "extremal maxima match the closed form");
    } catch (const std::exception& e) {
        report(8, false, "extremal maxima match the closed form", e.what());
    }

    // 9. Base-3 class tables and the rational sequence prefixes.
    try {
        bool ok =
            class_members_base3(*table, 3) == std::vector<std::string>{"10"};
        ok = ok && class_members_base3(*table, 6) ==
                       std::vector<std::string>{"100", "22", "21"};
        const auto class14 = class_members(*table, 14);
        ok = ok && class14.size() == golden::kClass14.size();
        for (std::size_t i = 0; ok && i < class14.size(); ++i)
            ok = class14[i] == golden::kClass14[i];

        const auto check_prefix = [&](SequenceKind kind, const auto& expected) {
            const auto terms = sequence_prefix(*table, kind, 5);
            if (terms.size() != 5) return false;
            for (std::size_t i = 0; i < 5; ++i) {
                const Rational3 want{expected[i].numerator, expected[i].exp3};
                if (!(terms[i].term == want) || !terms[i].stable) return false;
            }
            return true;
        };
        ok = ok && check_prefix(SequenceKind::A, golden::kSeqA);
        ok = ok && check_prefix(SequenceKind::B, golden::kSeqB);
        ok = ok && check_prefix(SequenceKind::C, golden::kSeqC);
        report(9, ok, "base-3 class tables and sequence prefixes");
    } catch (const std::exception& e) {
        report(9, false, "base-3 class tables and sequence prefixes", e.what());
    }

    // 10. The additive-bound ratio peaks at 2879.
    try {
        const SpfSieve sieve(2879);
        const AdditiveBoundTable additive(sieve);
        const RatioMax best = additive_ratio_max(additive, 2, 2879);
        const bool ok =
            best.n == 2879 && std::fabs(best.ratio - 3.766384578) <= 1e-8;
        char note[64];
        std::snprintf(note, sizeof note, "ratio %.9f at %" PRIu64, best.ratio,
                      best.n);
        report(10, ok, "additive ratio maximum", note);
    } catch (const std::exception& e) {
        report(10, false, "additive ratio maximum", e.what());
    }

    // 11. Tail counts stay below 2 * 2^k / k^2.
    try {
        bool ok = true;
        for (unsigned k = 2; k <= 17; ++k) {
            const ChernoffTail tail = chernoff_tail_count(k);
            ok = ok && double(tail.count) <= tail.bound;
        }
        report(11, ok, "tail counts below the probabilistic bound");
    } catch (const std::exception& e) {
        report(11, false, "tail counts below the probabilistic bound", e.what());
    }

    // 12. Counting machinery: recurrence, closed form, census.
    try {
        bool ok = true;
        for (uint64_t n = 1; n <= 5; ++n) {
            const CountSequence seq = count_recurrence(n, 30);
            for (unsigned k = 2; k <= 30; ++k)
                ok = ok && closed_form(n, k).equals(seq.terms[k]);
        }
        const BooleanCensus census(2);
        ok = ok && census.function_count() == 16;
        ok = ok && census.max_complexity() == 2;
        for (const auto& row : count_vs_bound(2, 8))
            ok = ok && BigUint(row.exact) <= row.bound;
        report(12, ok, "counting recurrence, closed form, census");
    } catch (const std::exception& e) {
        report(12, false, "counting recurrence, closed form, census", e.what());
    }

    // 13. The full pruned build fits the time budget.
    report(13, build_ms < 30000.0, "pruned table to 200000 in time",
           ms_note(build_ms));

    // 14. Persistence round trip and the three header failure classes.
    try {
        std::stringstream stream;
        save_table(*table, stream);
        const std::string bytes = stream.str();
        const ComplexityTable reloaded = load_table(stream);
        bool ok = reloaded == *table;

        std::stringstream second;
        save_table(reloaded, second);
        ok = ok && second.str() == bytes;

        bool magic = false, version = false, truncated = false;
        {
            std::string bad = bytes;
            bad[1] = 'Z';
            std::istringstream in(bad);
            try {
                load_table(in);
            } catch (const BadMagicError&) {
                magic = true;
            }
        }
        {
            std::string bad = bytes;
            bad[4] = 9;
            std::istringstream in(bad);
            try {
                load_table(in);
            } catch (const BadVersionError&) {
                version = true;
            }
        }
        {
            std::istringstream in(bytes.substr(0, bytes.size() - 7));
            try {
                load_table(in);
            } catch (const TruncatedFileError&) {
                truncated = true;
            }
        }
        ok = ok && magic && version && truncated;
        report(14, ok, "round trip and distinct header failures");
    } catch (const std::exception& e) {
        report(14, false, "round trip and distinct header failures", e.what());
    }

    if (failures == 0) std::printf("all criteria pass\n");
    return failures;
}
