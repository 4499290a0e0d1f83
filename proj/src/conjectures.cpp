#include "ncx/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ncx/errors.hpp"

namespace ncx {

namespace {

using uint128 = unsigned __int128;

uint64_t pow3_u64(unsigned e) {
    uint64_t result = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (result > UINT64_MAX / 3) throw CapacityError("3^e exceeds 64 bits");
        result *= 3;
    }
    return result;
}

// Cross-multiplied comparison of a.num/3^a.exp3 and b.num/3^b.exp3.
std::strong_ordering compare(const Rational3& a, const Rational3& b) {
    const Rational3 ra = a.normalized();
    const Rational3 rb = b.normalized();
    const uint128 lhs = uint128(ra.numerator) * pow3_u64(rb.exp3);
    const uint128 rhs = uint128(rb.numerator) * pow3_u64(ra.exp3);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

Rational3 Rational3::normalized() const {
    Rational3 r = *this;
    while (r.exp3 > 0 && r.numerator % 3 == 0) {
        r.numerator /= 3;
        --r.exp3;
    }
    return r;
}

double Rational3::to_double() const {
    return double(numerator) / std::pow(3.0, double(exp3));
}

std::string Rational3::to_string() const {
    if (exp3 == 0) return std::to_string(numerator);
    return std::to_string(numerator) + "/" + std::to_string(pow3_u64(exp3));
}

bool operator==(const Rational3& a, const Rational3& b) {
    return compare(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Rational3& a, const Rational3& b) {
    return compare(a, b);
}

StabilizationResult stabilization_exponent(const ComplexityTable& table,
                                           uint64_t n, unsigned horizon) {
    if (n == 0) throw RangeError("stabilization_exponent requires n >= 1");
    if (n > table.max_n() / pow3_u64(horizon))
        throw RangeError("horizon places 3^j n beyond the table");

    // Least a such that every remaining multiplication by three costs
    // exactly three.
    unsigned a = horizon;
    uint64_t m = n * pow3_u64(horizon);
    for (unsigned j = horizon; j-- > 0;) {
        const uint64_t prev = m / 3;
        if (unsigned(table.at(m)) != unsigned(table.at(prev)) + 3) break;
        m = prev;
        a = j;
    }
    StabilizationResult result;
    result.exponent = a;
    result.verdict.status = (a == horizon && horizon > 0)
                                ? HorizonVerdict::Status::Exhausted
                                : HorizonVerdict::Status::ConsistentUpTo;
    if (horizon == 0) result.verdict.status = HorizonVerdict::Status::Exhausted;
    result.verdict.bound = horizon;
    return result;
}

std::vector<uint64_t> a_set_members(const ComplexityTable& table,
                                    uint64_t max_base, unsigned horizon) {
    if (max_base == 0) throw RangeError("a_set_members requires max_base >= 1");
    if (max_base > table.max_n() / pow3_u64(horizon))
        throw RangeError("horizon places 3^j n beyond the table");
    std::vector<uint64_t> members;
    for (uint64_t n = 1; n <= max_base; ++n) {
        const unsigned base = table.at(n);
        bool ok = true;
        uint64_t m = n;
        for (unsigned j = 1; j <= horizon; ++j) {
            m *= 3;
            if (unsigned(table.at(m)) != base + 3 * j) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(n);
    }
    return members;
}

ThresholdResult affine_family_threshold(const ComplexityTable& table,
                                        uint64_t p, uint64_t q,
                                        unsigned horizon) {
    if (p == 0 || q == 0)
        throw RangeError("affine_family_threshold requires p, q >= 1");
    const uint64_t pow_h = pow3_u64(horizon);
    if (q > (UINT64_MAX - 1) / pow_h)
        throw RangeError("horizon places p(q 3^j + 1) beyond the table");
    const uint64_t top_arg = q * pow_h + 1;
    if (p > table.max_n() / top_arg)
        throw RangeError("horizon places p(q 3^j + 1) beyond the table");

    const unsigned base = unsigned(table.at(p)) + unsigned(table.at(q)) + 1;
    std::vector<bool> equal(horizon + 1);
    for (unsigned j = 0; j <= horizon; ++j) {
        const uint64_t arg = p * (q * pow3_u64(j) + 1);
        equal[j] = unsigned(table.at(arg)) == base + 3 * j;
    }

    ThresholdResult result;
    unsigned a = horizon + 1;
    for (unsigned j = horizon + 1; j-- > 0;) {
        if (!equal[j]) break;
        a = j;
    }
    if (a <= horizon) {
        result.threshold = a;
        result.verdict.status = HorizonVerdict::Status::ConsistentUpTo;
        result.verdict.bound = horizon;
    } else {
        result.verdict.status = HorizonVerdict::Status::Exhausted;
        result.verdict.bound = horizon;
    }
    return result;
}

std::string to_base3(uint64_t n) {
    if (n == 0) return "0";
    std::string digits;
    while (n > 0) {
        digits.push_back(char('0' + n % 3));
        n /= 3;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::vector<uint64_t> class_members(const ComplexityTable& table, unsigned k) {
    std::vector<uint64_t> members;
    for (uint64_t n = table.max_n(); n >= 1; --n)
        if (table.at(n) == k) members.push_back(n);
    return members;
}

std::vector<std::string> class_members_base3(const ComplexityTable& table,
                                             unsigned k) {
    std::vector<std::string> out;
    for (uint64_t n : class_members(table, k)) out.push_back(to_base3(n));
    return out;
}

std::vector<SequenceTerm> sequence_prefix(const ComplexityTable& table,
                                          SequenceKind kind,
                                          std::size_t count) {
    const unsigned residue = unsigned(kind);
    const uint64_t max_n = table.max_n();

    // One candidate per distinct rational value, keyed by the normalized
    // form; ascending scan keeps the smallest witness.
    std::map<std::pair<uint64_t, unsigned>, SequenceTerm> by_value;
    for (uint64_t n = 1; n <= max_n; ++n) {
        const unsigned value = table.at(n);
        if (value % 3 != residue) continue;

        unsigned horizon = 0;
        bool member = true;
        uint64_t m = n;
        while (m <= max_n / 3) {
            m *= 3;
            ++horizon;
            if (unsigned(table.at(m)) != value + 3 * horizon) {
                member = false;
                break;
            }
        }
        if (!member) continue;

        SequenceTerm term;
        term.term = Rational3{n, (value - residue) / 3};
        term.witness = n;
        term.witness_complexity = value;
        term.horizon = horizon;
        term.stable = horizon >= 1;

        const Rational3 key = term.term.normalized();
        by_value.emplace(std::make_pair(key.numerator, key.exp3), term);
    }

    std::vector<SequenceTerm> terms;
    terms.reserve(by_value.size());
    for (auto& [key, term] : by_value) terms.push_back(term);
    std::sort(terms.begin(), terms.end(),
              [](const SequenceTerm& a, const SequenceTerm& b) {
                  return a.term > b.term;
              });
    if (terms.size() > count) terms.resize(count);

    // An unstable term taints everything after it.
    bool stable_so_far = true;
    for (auto& term : terms) {
        stable_so_far = stable_so_far && term.stable;
        term.stable = stable_so_far;
    }
    return terms;
}

std::vector<FamilyMatch> family_match(const Rational3& term,
                                      const ComplexityTable& table,
                                      unsigned max_j) {
    std::vector<FamilyMatch> matches;
    const Rational3 norm = term.normalized();
    if (norm.numerator == 0) return matches;

    // Main families: clear the denominator with t = a + j factors of 3,
    // factor the resulting integer as p(q 3^j + 1), and check the
    // complexity side conditions.
    for (unsigned t = norm.exp3;; ++t) {
        if (t > norm.exp3 + 63) break;
        uint64_t arg = norm.numerator;
        bool overflow = false;
        for (unsigned i = norm.exp3; i < t; ++i) {
            if (arg > table.max_n() / 3) {
                overflow = true;
                break;
            }
            arg *= 3;
        }
        if (overflow || arg > table.max_n()) break;

        const unsigned value = table.at(arg);
        if (value < 3 * t) continue;
        const unsigned theta = value - 3 * t;
        if (theta > 2) continue;

        for (unsigned j = 0; j <= std::min(t, max_j); ++j) {
            const unsigned a = t - j;
            const uint64_t pow_j = pow3_u64(j);
            if (pow_j >= arg) break;
            for (uint64_t p = 1; p * p <= arg; ++p) {
                if (arg % p != 0) continue;
                const uint64_t complements[2] = {p, arg / p};
                const int candidates = (p == arg / p) ? 1 : 2;
                for (int ci = 0; ci < candidates; ++ci) {
                    const uint64_t divisor = complements[ci];
                    const uint64_t rest = arg / divisor - 1;
                    if (rest == 0 || rest % pow_j != 0) continue;
                    const uint64_t q = rest / pow_j;
                    const uint64_t pq = divisor * q;
                    if (pq > table.max_n()) continue;
                    const unsigned side = table.at(pq);
                    FamilyMatch match;
                    match.p = divisor;
                    match.q = q;
                    match.j = j;
                    match.a = a;
                    bool accept = false;
                    if (theta == 1 && side == 3 * a) {
                        match.family = FamilyMatch::Family::MainB;
                        accept = true;
                    } else if (theta == 2 && side == 3 * a + 1) {
                        match.family = FamilyMatch::Family::MainC;
                        accept = true;
                    } else if (theta == 0 && a >= 1 && side == 3 * a - 1) {
                        match.family = FamilyMatch::Family::MainA;
                        accept = true;
                    }
                    if (accept) matches.push_back(match);
                }
            }
        }
    }

    // Sporadic pure powers.
    for (unsigned j = 0; j <= max_j && 3 * j + 2 < 64; ++j) {
        const auto is_pow2 = [&](unsigned e) {
            return norm.numerator == (uint64_t(1) << e);
        };
        if (norm.exp3 == 2 * j && is_pow2(3 * j))
            matches.push_back({FamilyMatch::Family::SporadicA, 0, 0, j, 0});
        if (norm.exp3 == 2 * j + 1 && is_pow2(3 * j + 2))
            matches.push_back({FamilyMatch::Family::SporadicB, 0, 0, j, 0});
        if (norm.exp3 == 2 * j && is_pow2(3 * j + 1))
            matches.push_back({FamilyMatch::Family::SporadicC, 0, 0, j, 0});
    }

    std::sort(matches.begin(), matches.end(),
              [](const FamilyMatch& a, const FamilyMatch& b) {
                  return std::tie(a.family, a.j, a.a, a.p, a.q) <
                         std::tie(b.family, b.j, b.a, b.p, b.q);
              });
    return matches;
}

HorizonVerdict check_decreasing_and_pow3(const std::vector<Rational3>& seq) {
    HorizonVerdict verdict;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!(seq[i] < seq[i - 1])) {
            verdict.status = HorizonVerdict::Status::RefutedAt;
            verdict.bound = i;
            return verdict;
        }
    }
    verdict.status = HorizonVerdict::Status::ConsistentUpTo;
    verdict.bound = seq.size();
    return verdict;
}

}  // namespace ncx
