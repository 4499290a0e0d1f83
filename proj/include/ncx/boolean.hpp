#pragma once

#include <cstdint>
#include <vector>

#include "ncx/bigint.hpp"

namespace ncx {

// Counting bound on the number of n-variable functions buildable with k
// projection leaves: A_0 = 2, A_1 = 2n, A_k = 4 sum_{j=1}^{k-1} A_j A_{k-j}.
struct CountSequence {
    uint64_t n_vars = 0;
    std::vector<BigUint> terms;  // A_0 .. A_kmax
};

CountSequence count_recurrence(uint64_t n_vars, unsigned kmax);

// The closed form C(2k-2, k) (8n)^k / (2(2k-2)) kept as an exact
// unreduced rational; defined for k >= 2 only (the denominator vanishes
// at k = 1).
struct BigRational {
    BigUint numerator;
    uint64_t denominator = 1;

    bool equals(const BigUint& integer_value) const;  // cross-multiplied
};

BigRational closed_form(uint64_t n_vars, unsigned k);

// A_0..A_kmax evaluated through the closed form with an incremental exact
// update; cheap enough for kmax in the thousands.
std::vector<BigUint> closed_form_terms(uint64_t n_vars, unsigned kmax);

// A function {0,1}^n -> {0,1} as a packed truth table: bit i holds the
// value on the input whose binary encoding is i.
struct BooleanFunction {
    unsigned n_vars = 1;  // 1..3
    uint8_t truth_table = 0;

    bool evaluate(unsigned input) const { return (truth_table >> input) & 1u; }

    static BooleanFunction constant(unsigned n_vars, bool value);
    static BooleanFunction projection(unsigned n_vars, unsigned var);
};

// Exhaustive complexity over all functions {0,1}^n -> {0,1} with sum and
// product taken mod 2: both constants cost nothing, each projection leaf
// costs one. Truth tables are bit masks, bit i = value on the input whose
// binary encoding is i.
class BooleanCensus {
public:
    explicit BooleanCensus(unsigned n_vars);  // 1..3, CapacityError beyond

    unsigned n_vars() const noexcept { return n_vars_; }
    unsigned table_bits() const noexcept { return width_; }
    unsigned function_count() const noexcept { return 1u << width_; }

    unsigned complexity(unsigned mask) const;  // RangeError outside range
    unsigned complexity(const BooleanFunction& fn) const;

    // counts()[k] = number of functions of complexity exactly k.
    std::vector<uint64_t> counts() const;
    unsigned max_complexity() const;

    // How each minimum was first reached; enough to rebuild a witness
    // formula by recursion.
    struct Witness {
        enum class Kind : uint8_t { Zero, One, Projection, SumOf, ProductOf };
        Kind kind = Kind::Zero;
        unsigned var = 0;             // Projection
        unsigned left = 0, right = 0; // SumOf / ProductOf operand masks
    };
    const Witness& witness(unsigned mask) const;

private:
    unsigned n_vars_;
    unsigned width_;
    std::vector<uint8_t> complexity_;
    std::vector<Witness> witness_;
};

struct CountComparisonRow {
    unsigned k = 0;
    uint64_t exact = 0;  // census count a_k
    BigUint bound;       // recurrence term A_k
};

// Census versus recurrence rows for k = 0..kmax.
std::vector<CountComparisonRow> count_vs_bound(unsigned n_vars, unsigned kmax);

}  // namespace ncx
