#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace ncx {

class ComplexityTable;

// Formal expressions over the alphabet {x, +, (, )}: a leaf, a
// parenthesized sum, or a parenthesized juxtaposition product. Immutable;
// copies share structure. value() substitutes 1 for every leaf, weight()
// counts leaves; both are cached at construction.
class Expression {
public:
    enum class Kind : uint8_t { Leaf, Sum, Product };

    static Expression leaf();
    static Expression sum(const Expression& lhs, const Expression& rhs);
    static Expression product(const Expression& lhs, const Expression& rhs);

    Kind kind() const noexcept { return node_->kind; }
    Expression left() const;   // logic_error on a leaf
    Expression right() const;
    uint64_t value() const noexcept { return node_->value; }
    uint64_t weight() const noexcept { return node_->weight; }

    // Structural equality.
    friend bool operator==(const Expression& a, const Expression& b);

private:
    struct Node {
        Kind kind;
        uint64_t value;
        uint64_t weight;
        std::shared_ptr<const Node> left, right;
    };

    explicit Expression(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

enum class RenderStyle {
    Canonical,  // grammar text: x, (A+B), (AB)
    Ones,       // 1's with explicit "+" and "·", parentheses kept
};

// Strict grammar: E ::= "x" | "(" E "+" E ")" | "(" E E ")". Whitespace
// between tokens is ignored; anything else raises ParseError with the
// byte offset of the offending position.
Expression parse(std::string_view text);

std::string render(const Expression& e, RenderStyle style);

// Optimal expression for n, deterministic: the product split with the
// smallest divisor achieving the table value wins, otherwise the sum
// split with the smallest addend.
Expression reconstruct_optimal(const ComplexityTable& table, uint64_t n);

// Decomposition m = 3k + residue behind the maximal-value expressions;
// residues 0, 1, 2 rebuild to values 3^k, 4*3^(k-1), 2*3^k.
struct ExtremalForm {
    unsigned residue = 0;
    uint64_t k = 0;

    static ExtremalForm of(uint64_t m);  // m >= 2
    uint64_t value() const;              // CapacityError past 64 bits
    uint64_t weight() const noexcept { return 3 * k + residue; }
};

// A weight-m expression of maximal value (threes chained left to right,
// then the residue factor). extremal(1) is the single leaf.
Expression extremal(uint64_t m);

// Largest value expressible with weight m; max_value(1) == 1.
uint64_t max_value(uint64_t m);

}  // namespace ncx
