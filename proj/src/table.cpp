#include "ncx/table.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>

#include "ncx/bounds.hpp"
#include "ncx/errors.hpp"
#include "ncx/sieve.hpp"

namespace ncx {

namespace {

// ternary_lower_bound tabulated by walking the branch intervals once.
std::vector<uint8_t> ternary_lower_table(uint64_t limit) {
    std::vector<uint8_t> low(limit + 1, 0);
    if (limit >= 1) low[1] = 1;
    if (limit >= 2) low[2] = 2;
    uint64_t pow3 = 3;
    unsigned a = 1;
    while (pow3 <= limit) {
        const uint64_t third = pow3 / 3;
        const uint64_t b1 = pow3 + third;
        const uint64_t b2 = 2 * pow3;
        const uint64_t b3 = (pow3 > limit / 3) ? limit + 1 : 3 * pow3;
        for (uint64_t n = pow3; n < std::min(b1, limit + 1); ++n)
            low[n] = uint8_t(3 * a);
        for (uint64_t n = b1; n < std::min(b2, limit + 1); ++n)
            low[n] = uint8_t(3 * a + 1);
        for (uint64_t n = b2; n < std::min(b3, limit + 1); ++n)
            low[n] = uint8_t(3 * a + 2);
        if (pow3 > limit / 3) break;
        pow3 *= 3;
        ++a;
    }
    return low;
}

void naive_fill(std::vector<uint8_t>& v, uint64_t from, uint64_t to) {
    for (uint64_t n = std::max<uint64_t>(from, 2); n <= to; ++n) {
        unsigned best = std::numeric_limits<unsigned>::max();
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d != 0) continue;
            const unsigned cand = unsigned(v[d]) + unsigned(v[n / d]);
            if (cand < best) best = cand;
        }
        for (uint64_t j = 1; 2 * j <= n; ++j) {
            const unsigned cand = unsigned(v[j]) + unsigned(v[n - j]);
            if (cand < best) best = cand;
        }
        if (best > 0xFF)
            throw CapacityError("complexity value exceeds one byte");
        v[n] = uint8_t(best);
    }
}

// Exactness of the cut: the seeds are proven upper bounds, every divisor
// split is scanned, and for an unscanned sum split j' >= j we have
// v[j'] + v[n-j'] >= low[j'] + low[ceil(n/2)] >= low[j] + low[ceil(n/2)]
// >= best, so the minimum over all splits is reached.
void pruned_fill(std::vector<uint8_t>& v, uint64_t from, uint64_t to) {
    const SpfSieve sieve(to);
    const AdditiveBoundTable additive(sieve);
    const std::vector<uint8_t> low = ternary_lower_table(to);
    std::vector<uint32_t> divisors;
    for (uint64_t n = std::max<uint64_t>(from, 2); n <= to; ++n) {
        unsigned best = std::min(additive[n], binary_bound(n));
        divisors.clear();
        sieve.divisors_up_to_sqrt(n, divisors);
        for (uint32_t d : divisors) {
            const unsigned cand = unsigned(v[d]) + unsigned(v[n / d]);
            if (cand < best) best = cand;
        }
        const unsigned low_half = low[(n + 1) / 2];
        for (uint64_t j = 1; 2 * j <= n; ++j) {
            if (unsigned(low[j]) + low_half >= best) break;
            const unsigned cand = unsigned(v[j]) + unsigned(v[n - j]);
            if (cand < best) best = cand;
        }
        if (best > 0xFF)
            throw CapacityError("complexity value exceeds one byte");
        v[n] = uint8_t(best);
    }
}

void fill_range(std::vector<uint8_t>& v, uint64_t from, uint64_t to,
                ComputeMode mode) {
    if (mode == ComputeMode::NaiveExact)
        naive_fill(v, from, to);
    else
        pruned_fill(v, from, to);
}

void write_u32_le(std::ostream& out, uint32_t value) {
    char bytes[4];
    for (int i = 0; i < 4; ++i) bytes[i] = char((value >> (8 * i)) & 0xFF);
    out.write(bytes, 4);
}

void write_u64_le(std::ostream& out, uint64_t value) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = char((value >> (8 * i)) & 0xFF);
    out.write(bytes, 8);
}

bool read_exact(std::istream& in, char* buffer, std::streamsize count) {
    in.read(buffer, count);
    return in.gcount() == count;
}

}  // namespace

uint8_t ComplexityTable::at(uint64_t n) const {
    if (n < 1 || n > max_n())
        throw RangeError("table index " + std::to_string(n) + " outside [1, " +
                         std::to_string(max_n()) + "]");
    return values_[n];
}

ComplexityTable compute_table(uint64_t max_n, ComputeMode mode) {
    if (max_n == 0) throw RangeError("compute_table requires max_n >= 1");
    ComplexityTable table;
    table.values_.assign(max_n + 1, 0);
    table.values_[1] = 1;
    fill_range(table.values_, 2, max_n, mode);
    return table;
}

ComplexityTable extend_table(const ComplexityTable& table, uint64_t new_max,
                             ComputeMode mode) {
    if (new_max <= table.max_n()) return table;
    ComplexityTable extended;
    extended.values_ = table.values_;
    extended.values_.resize(new_max + 1, 0);
    fill_range(extended.values_, table.max_n() + 1, new_max, mode);
    return extended;
}

void save_table(const ComplexityTable& table, std::ostream& out) {
    out.write("NCX1", 4);
    write_u32_le(out, 1);
    write_u64_le(out, table.max_n());
    const auto payload = table.entries();
    out.write(reinterpret_cast<const char*>(payload.data()),
              std::streamsize(payload.size()));
    if (!out) throw IoError("table write failed");
}

void save_table(const ComplexityTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    save_table(table, out);
    out.flush();
    if (!out) throw IoError("table write failed");
}

ComplexityTable load_table(std::istream& in) {
    char magic[4];
    if (!read_exact(in, magic, 4))
        throw TruncatedFileError("table file shorter than its magic");
    if (std::memcmp(magic, "NCX1", 4) != 0)
        throw BadMagicError("not a complexity table file");

    char raw[8];
    if (!read_exact(in, raw, 4))
        throw TruncatedFileError("table file truncated in version field");
    uint32_t version = 0;
    for (int i = 0; i < 4; ++i)
        version |= uint32_t(uint8_t(raw[i])) << (8 * i);
    if (version != 1)
        throw BadVersionError("unsupported table format version " +
                              std::to_string(version));

    if (!read_exact(in, raw, 8))
        throw TruncatedFileError("table file truncated in size field");
    uint64_t max_n = 0;
    for (int i = 0; i < 8; ++i)
        max_n |= uint64_t(uint8_t(raw[i])) << (8 * i);
    if (max_n == 0) throw TableIoError("table file declares an empty table");

    ComplexityTable table;
    table.values_.assign(max_n + 1, 0);
    in.read(reinterpret_cast<char*>(table.values_.data() + 1),
            std::streamsize(max_n));
    if (uint64_t(in.gcount()) != max_n)
        throw TruncatedFileError("table payload shorter than declared");
    return table;
}

ComplexityTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return load_table(in);
}

}  // namespace ncx
