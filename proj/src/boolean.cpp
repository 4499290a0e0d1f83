#include "ncx/boolean.hpp"

#include <stdexcept>

#include "ncx/errors.hpp"

namespace ncx {

CountSequence count_recurrence(uint64_t n_vars, unsigned kmax) {
    if (n_vars == 0) throw RangeError("count_recurrence requires n >= 1");
    CountSequence seq;
    seq.n_vars = n_vars;
    seq.terms.reserve(kmax + 1);
    seq.terms.emplace_back(uint64_t(2));
    if (kmax >= 1) seq.terms.emplace_back(2 * n_vars);
    for (unsigned k = 2; k <= kmax; ++k) {
        BigUint sum;
        for (unsigned j = 1; j < k; ++j) sum += seq.terms[j] * seq.terms[k - j];
        sum.mul_small(4);
        seq.terms.push_back(std::move(sum));
    }
    return seq;
}

namespace {

BigUint binomial(unsigned m, unsigned j) {
    if (j > m) return BigUint();
    BigUint result(1);
    for (unsigned i = 1; i <= j; ++i) {
        result.mul_small(m - i + 1);
        result.divexact_small(i);
    }
    return result;
}

BigUint small_power(uint64_t base, unsigned exponent) {
    BigUint result(1);
    for (unsigned i = 0; i < exponent; ++i)
        result.mul_small(uint32_t(base));
    return result;
}

}  // namespace

bool BigRational::equals(const BigUint& integer_value) const {
    BigUint lhs = integer_value;
    lhs.mul_small(uint32_t(denominator));
    return lhs == numerator;
}

BigRational closed_form(uint64_t n_vars, unsigned k) {
    if (n_vars == 0) throw RangeError("closed_form requires n >= 1");
    if (n_vars > (uint64_t(1) << 27))
        throw CapacityError("variable count too large for the closed form");
    if (k < 2) throw RangeError("closed_form is defined for k >= 2 only");
    BigRational value;
    value.numerator = binomial(2 * k - 2, k) * small_power(8 * n_vars, k);
    value.denominator = 2 * (2 * k - 2);
    return value;
}

std::vector<BigUint> closed_form_terms(uint64_t n_vars, unsigned kmax) {
    if (n_vars == 0) throw RangeError("closed_form_terms requires n >= 1");
    if (n_vars > (uint64_t(1) << 27))
        throw CapacityError("variable count too large for the closed form");
    std::vector<BigUint> terms;
    terms.reserve(kmax + 1);
    terms.emplace_back(uint64_t(2));
    if (kmax >= 1) terms.emplace_back(2 * n_vars);
    // A_{k+1} = A_k * 16 n (2k - 1) / (k + 1), exact at every step.
    for (unsigned k = 1; k < kmax; ++k) {
        BigUint next = terms.back();
        next.mul_small(uint32_t(16 * n_vars));
        next.mul_small(2 * k - 1);
        next.divexact_small(k + 1);
        terms.push_back(std::move(next));
    }
    return terms;
}

BooleanFunction BooleanFunction::constant(unsigned n_vars, bool value) {
    if (n_vars < 1 || n_vars > 3)
        throw RangeError("BooleanFunction supports 1..3 variables");
    const unsigned width = 1u << n_vars;
    return {n_vars, value ? uint8_t((1u << width) - 1) : uint8_t(0)};
}

BooleanFunction BooleanFunction::projection(unsigned n_vars, unsigned var) {
    if (n_vars < 1 || n_vars > 3)
        throw RangeError("BooleanFunction supports 1..3 variables");
    if (var >= n_vars) throw RangeError("projection index out of range");
    const unsigned width = 1u << n_vars;
    uint8_t mask = 0;
    for (unsigned i = 0; i < width; ++i)
        if ((i >> var) & 1u) mask |= uint8_t(1u << i);
    return {n_vars, mask};
}

BooleanCensus::BooleanCensus(unsigned n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw RangeError("census requires at least one variable");
    if (n_vars > 3)
        throw CapacityError("census is capped at three variables");
    width_ = 1u << n_vars_;
    const unsigned universe = 1u << width_;
    const unsigned full = universe - 1;

    constexpr uint8_t kUnreached = 0xFF;
    complexity_.assign(universe, kUnreached);
    witness_.assign(universe, Witness{});

    complexity_[0] = 0;
    witness_[0] = Witness{Witness::Kind::Zero, 0, 0, 0};
    complexity_[full] = 0;
    witness_[full] = Witness{Witness::Kind::One, 0, 0, 0};
    for (unsigned j = 0; j < n_vars_; ++j) {
        unsigned mask = 0;
        for (unsigned i = 0; i < width_; ++i)
            if ((i >> j) & 1u) mask |= 1u << i;
        if (complexity_[mask] > 1) {
            complexity_[mask] = 1;
            witness_[mask] = Witness{Witness::Kind::Projection, j, 0, 0};
        }
    }

    // Relax pairwise sums and products to the fixed point.
    bool changed = true;
    while (changed) {
        changed = false;
        for (unsigned f = 0; f < universe; ++f) {
            if (complexity_[f] == kUnreached) continue;
            for (unsigned g = f; g < universe; ++g) {
                if (complexity_[g] == kUnreached) continue;
                const unsigned cost = complexity_[f] + complexity_[g];
                const unsigned sum = f ^ g;
                if (cost < complexity_[sum]) {
                    complexity_[sum] = uint8_t(cost);
                    witness_[sum] = Witness{Witness::Kind::SumOf, 0, f, g};
                    changed = true;
                }
                const unsigned prod = f & g;
                if (cost < complexity_[prod]) {
                    complexity_[prod] = uint8_t(cost);
                    witness_[prod] = Witness{Witness::Kind::ProductOf, 0, f, g};
                    changed = true;
                }
            }
        }
    }
}

unsigned BooleanCensus::complexity(unsigned mask) const {
    if (mask >= function_count())
        throw RangeError("truth table mask out of range");
    return complexity_[mask];
}

unsigned BooleanCensus::complexity(const BooleanFunction& fn) const {
    if (fn.n_vars != n_vars_)
        throw RangeError("function has a different variable count");
    return complexity(unsigned(fn.truth_table));
}

const BooleanCensus::Witness& BooleanCensus::witness(unsigned mask) const {
    if (mask >= function_count())
        throw RangeError("truth table mask out of range");
    return witness_[mask];
}

std::vector<uint64_t> BooleanCensus::counts() const {
    std::vector<uint64_t> histogram(max_complexity() + 1, 0);
    for (uint8_t c : complexity_) ++histogram[c];
    return histogram;
}

unsigned BooleanCensus::max_complexity() const {
    unsigned max = 0;
    for (uint8_t c : complexity_)
        if (c > max) max = c;
    return max;
}

std::vector<CountComparisonRow> count_vs_bound(unsigned n_vars, unsigned kmax) {
    const BooleanCensus census(n_vars);
    const std::vector<uint64_t> exact = census.counts();
    const CountSequence bound = count_recurrence(n_vars, kmax);
    std::vector<CountComparisonRow> rows;
    rows.reserve(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
        CountComparisonRow row;
        row.k = k;
        row.exact = (k < exact.size()) ? exact[k] : 0;
        row.bound = bound.terms[k];
        if (row.bound < BigUint(row.exact))
            throw std::logic_error("census count exceeds its counting bound");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ncx
