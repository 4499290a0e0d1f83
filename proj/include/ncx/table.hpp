#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace ncx {

// Both modes return the exact minimum over divisor and sum splits; the
// pruned mode seeds every entry with the proven upper bounds and cuts the
// sum scan at the ternary lower bound.
enum class ComputeMode { NaiveExact, PrunedExact };

// Dense table of complexity values: entry n is the least number of 1's
// needed to write n using only additions and multiplications.
class ComplexityTable {
public:
    uint64_t max_n() const noexcept { return values_.size() - 1; }

    // RangeError outside [1, max_n].
    uint8_t at(uint64_t n) const;

    // entries()[i] == at(i + 1); the exact payload of the file format.
    std::span<const uint8_t> entries() const noexcept {
        return {values_.data() + 1, values_.size() - 1};
    }

    bool operator==(const ComplexityTable&) const = default;

private:
    ComplexityTable() = default;

    friend ComplexityTable compute_table(uint64_t, ComputeMode);
    friend ComplexityTable extend_table(const ComplexityTable&, uint64_t,
                                        ComputeMode);
    friend ComplexityTable load_table(std::istream&);

    std::vector<uint8_t> values_;  // values_[0] unused
};

// Bottom-up table construction; RangeError when max_n == 0, CapacityError
// if an entry would not fit its byte (unreachable for any feasible max_n,
// still checked).
ComplexityTable compute_table(uint64_t max_n,
                              ComputeMode mode = ComputeMode::PrunedExact);

// Same values as compute_table(new_max), reusing the existing entries.
// new_max <= table.max_n() is a no-op returning the table unchanged.
ComplexityTable extend_table(const ComplexityTable& table, uint64_t new_max,
                             ComputeMode mode = ComputeMode::PrunedExact);

// Table file format, little-endian: magic "NCX1", format version as a
// 4-byte unsigned (currently 1), max_n as an 8-byte unsigned, then max_n
// payload bytes where byte i-1 holds the value for i. No padding, no
// checksum.
void save_table(const ComplexityTable& table, std::ostream& out);
void save_table(const ComplexityTable& table, const std::filesystem::path& path);
ComplexityTable load_table(std::istream& in);
ComplexityTable load_table(const std::filesystem::path& path);

}  // namespace ncx
