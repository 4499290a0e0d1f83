#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <sstream>

#include "ncx/errors.hpp"
#include "ncx/table.hpp"
#include "test_support.hpp"

using namespace ncx;

TEST_CASE("first twenty values") {
    for (const ComputeMode mode :
         {ComputeMode::NaiveExact, ComputeMode::PrunedExact}) {
        const ComplexityTable table = compute_table(20, mode);
        for (uint64_t n = 1; n <= 20; ++n)
            CHECK(table.at(n) == ncx::testing::kFirstValues[n - 1]);
    }
}

TEST_CASE("entry access") {
    const ComplexityTable table = compute_table(20);
    CHECK(table.max_n() == 20);
    CHECK(table.at(1) == 1);
    CHECK(table.at(12) == 7);
    CHECK(table.at(11) == 8);
    CHECK(table.at(11) > table.at(12));  // non-monotonic
    CHECK_THROWS_AS(table.at(0), RangeError);
    CHECK_THROWS_AS(table.at(21), RangeError);
    CHECK_THROWS_AS(compute_table(0), RangeError);
}

TEST_CASE("single entry table") {
    const ComplexityTable table = compute_table(1);
    CHECK(table.max_n() == 1);
    CHECK(table.at(1) == 1);
}

TEST_CASE("known larger values") {
    const ComplexityTable table = compute_table(4787);
    CHECK(table.at(107) == 16);
    CHECK(table.at(321) == 18);
    CHECK(table.at(4787) == 28);
}

TEST_CASE("pruned equals naive") {
    const ComplexityTable naive = compute_table(2000, ComputeMode::NaiveExact);
    CHECK(naive == ncx::testing::table_small());
}

TEST_CASE("subadditive and submultiplicative") {
    const auto& table = ncx::testing::table_small();
    const uint64_t max = table.max_n();
    for (uint64_t m = 1; m <= max; ++m) {
        for (uint64_t n = m; n + m <= max; ++n)
            CHECK(table.at(m + n) <= table.at(m) + table.at(n));
        for (uint64_t n = m; n * m <= max; ++n)
            CHECK(table.at(m * n) <= table.at(m) + table.at(n));
    }
}

TEST_CASE("every entry has a split witness") {
    const auto& table = ncx::testing::table_small();
    for (uint64_t n = 2; n <= table.max_n(); ++n) {
        const unsigned value = table.at(n);
        bool found = false;
        for (uint64_t d = 2; !found && d * d <= n; ++d)
            if (n % d == 0 && table.at(d) + table.at(n / d) == value)
                found = true;
        for (uint64_t j = 1; !found && 2 * j <= n; ++j)
            if (table.at(j) + table.at(n - j) == value) found = true;
        CHECK(found);
    }
}

TEST_CASE("extension matches a fresh build") {
    const ComplexityTable ten = compute_table(10);
    const ComplexityTable twenty = extend_table(ten, 20);
    CHECK(twenty == compute_table(20));

    const ComplexityTable one = compute_table(1);
    CHECK(extend_table(one, 2).at(2) == 2);

    // No-op signal: the table comes back unchanged.
    CHECK(extend_table(ten, 10) == ten);
    CHECK(extend_table(ten, 5) == ten);

    const ComplexityTable base = compute_table(4786);
    CHECK(extend_table(base, 4787).at(4787) == 28);

    // Naive continuation agrees too.
    CHECK(extend_table(ten, 100, ComputeMode::NaiveExact) == compute_table(100));
}

TEST_CASE("file round trip is bit exact") {
    const ComplexityTable table = compute_table(257);
    std::stringstream stream;
    save_table(table, stream);

    const std::string bytes = stream.str();
    CHECK(bytes.size() == 4 + 4 + 8 + 257);
    CHECK(bytes.substr(0, 4) == "NCX1");
    CHECK(uint8_t(bytes[4]) == 1);  // version, little endian
    CHECK(uint8_t(bytes[5]) == 0);
    CHECK(uint8_t(bytes[8]) == 1);  // max_n = 257 = 0x101
    CHECK(uint8_t(bytes[9]) == 1);
    CHECK(uint8_t(bytes[16]) == 1);  // payload starts with the value for 1

    const ComplexityTable loaded = load_table(stream);
    CHECK(loaded == table);

    // Saving the loaded copy reproduces the bytes.
    std::stringstream again;
    save_table(loaded, again);
    CHECK(again.str() == bytes);
}

TEST_CASE("writes to a broken stream fail loudly") {
    const ComplexityTable table = compute_table(10);
    std::stringstream broken;
    broken.setstate(std::ios::failbit);
    CHECK_THROWS_AS(save_table(table, broken), IoError);
}

TEST_CASE("corrupted files raise distinct errors") {
    const ComplexityTable table = compute_table(100);
    std::stringstream stream;
    save_table(table, stream);
    const std::string good = stream.str();

    {
        std::string bad = good;
        bad[0] = 'X';
        std::istringstream in(bad);
        CHECK_THROWS_AS(load_table(in), BadMagicError);
    }
    {
        std::string bad = good;
        bad[4] = 2;
        std::istringstream in(bad);
        CHECK_THROWS_AS(load_table(in), BadVersionError);
    }
    {
        std::string bad = good.substr(0, good.size() - 1);
        std::istringstream in(bad);
        CHECK_THROWS_AS(load_table(in), TruncatedFileError);
    }
    {
        std::istringstream in(good.substr(0, 2));
        CHECK_THROWS_AS(load_table(in), TruncatedFileError);
    }
    {
        std::istringstream in(good.substr(0, 10));
        CHECK_THROWS_AS(load_table(in), TruncatedFileError);
    }
}
