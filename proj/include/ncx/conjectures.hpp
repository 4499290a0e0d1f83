#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncx/table.hpp"

namespace ncx {

// Rational with a power-of-three denominator. Held unreduced when it was
// built from a witness integer, so the witness stays readable; compare and
// normalized() work on the reduced value.
struct Rational3 {
    uint64_t numerator = 0;
    unsigned exp3 = 0;  // denominator is 3^exp3

    Rational3 normalized() const;
    double to_double() const;
    std::string to_string() const;  // "m/3^e", plain "m" when e == 0
};

bool operator==(const Rational3& a, const Rational3& b);
std::strong_ordering operator<=>(const Rational3& a, const Rational3& b);

struct HorizonVerdict {
    enum class Status { ConsistentUpTo, RefutedAt, Exhausted };
    Status status = Status::Exhausted;
    uint64_t bound = 0;  // horizon confirmed, or index of the violation
};

struct StabilizationResult {
    unsigned exponent = 0;  // least a with value(3^j n) = 3(j-a) + value(3^a n)
    HorizonVerdict verdict;
};

// Observed stabilization of multiplication by three. Exhausted when even
// the final step in range gains something other than three.
StabilizationResult stabilization_exponent(const ComplexityTable& table,
                                           uint64_t n, unsigned horizon);

// All n <= max_base with value(3^j n) = 3j + value(n) for every j up to
// the horizon; candidates for the stable multiplicative set.
std::vector<uint64_t> a_set_members(const ComplexityTable& table,
                                    uint64_t max_base, unsigned horizon);

struct ThresholdResult {
    std::optional<unsigned> threshold;  // least a with equality on [a, horizon]
    HorizonVerdict verdict;
};

// Observed threshold for value(p (q 3^j + 1)) = 3j + 1 + value(p) + value(q).
ThresholdResult affine_family_threshold(const ComplexityTable& table,
                                        uint64_t p, uint64_t q,
                                        unsigned horizon);

// Members of the complexity class k, numerically descending.
std::vector<uint64_t> class_members(const ComplexityTable& table, unsigned k);
std::vector<std::string> class_members_base3(const ComplexityTable& table,
                                             unsigned k);
std::string to_base3(uint64_t n);

enum class SequenceKind { A, B, C };  // complexity residues 0, 1, 2 mod 3

struct SequenceTerm {
    Rational3 term;  // numerator is the witness, unreduced
    uint64_t witness = 0;
    unsigned witness_complexity = 0;
    unsigned horizon = 0;  // membership check depth available for the witness
    bool stable = false;
};

// First `count` terms (distinct rational values, decreasing) of the
// conjectured sequence for the kind's residue class. A term is stable when
// its witness was checked through at least one multiplication by three and
// no earlier term is unstable.
std::vector<SequenceTerm> sequence_prefix(const ComplexityTable& table,
                                          SequenceKind kind,
                                          std::size_t count);

struct FamilyMatch {
    // Main families p(q 3^j + 1)/3^(a+j) keyed by which sequence they feed;
    // sporadic powers 2^(3j)/3^(2j), 2^(3j+2)/3^(2j+1), 2^(3j+1)/3^(2j).
    enum class Family { MainA, MainB, MainC, SporadicA, SporadicB, SporadicC };
    Family family = Family::MainA;
    uint64_t p = 0, q = 0;
    unsigned j = 0, a = 0;  // sporadic entries use j only
};

// Every representation of the term inside the conjectured families whose
// complexity side conditions hold in the table.
std::vector<FamilyMatch> family_match(const Rational3& term,
                                      const ComplexityTable& table,
                                      unsigned max_j = 40);

// Strict decrease over the prefix; denominators are powers of three by
// construction. RefutedAt carries the index of the first offending term.
HorizonVerdict check_decreasing_and_pow3(const std::vector<Rational3>& seq);

}  // namespace ncx
