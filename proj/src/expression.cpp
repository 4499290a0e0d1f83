#include "ncx/expression.hpp"

#include <stdexcept>

#include "ncx/errors.hpp"
#include "ncx/table.hpp"

namespace ncx {

namespace {

constexpr std::size_t kMaxNesting = 1 << 16;

uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("expression value exceeds 64 bits");
    return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("expression value exceeds 64 bits");
    return r;
}

}  // namespace

Expression Expression::leaf() {
    static const auto node = std::make_shared<const Node>(
        Node{Kind::Leaf, 1, 1, nullptr, nullptr});
    return Expression(node);
}

Expression Expression::sum(const Expression& lhs, const Expression& rhs) {
    return Expression(std::make_shared<const Node>(
        Node{Kind::Sum, checked_add(lhs.value(), rhs.value()),
             checked_add(lhs.weight(), rhs.weight()), lhs.node_, rhs.node_}));
}

Expression Expression::product(const Expression& lhs, const Expression& rhs) {
    return Expression(std::make_shared<const Node>(
        Node{Kind::Product, checked_mul(lhs.value(), rhs.value()),
             checked_add(lhs.weight(), rhs.weight()), lhs.node_, rhs.node_}));
}

Expression Expression::left() const {
    if (kind() == Kind::Leaf) throw std::logic_error("leaf has no operands");
    return Expression(node_->left);
}

Expression Expression::right() const {
    if (kind() == Kind::Leaf) throw std::logic_error("leaf has no operands");
    return Expression(node_->right);
}

bool operator==(const Expression& a, const Expression& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.value() != b.value() ||
        a.weight() != b.weight())
        return false;
    if (a.kind() == Expression::Kind::Leaf) return true;
    return a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression run() {
        Expression e = expression(0);
        skip_whitespace();
        if (pos_ != text_.size())
            throw ParseError("trailing input after expression", pos_);
        return e;
    }

private:
    Expression expression(std::size_t depth) {
        if (depth > kMaxNesting)
            throw ParseError("expression nesting too deep", pos_);
        skip_whitespace();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return Expression::leaf();
        }
        if (c == '(') {
            ++pos_;
            Expression lhs = expression(depth + 1);
            skip_whitespace();
            if (pos_ >= text_.size())
                throw ParseError("unexpected end of input", pos_);
            if (text_[pos_] == '+') {
                ++pos_;
                Expression rhs = expression(depth + 1);
                expect_close();
                return Expression::sum(lhs, rhs);
            }
            Expression rhs = expression(depth + 1);
            expect_close();
            return Expression::product(lhs, rhs);
        }
        throw ParseError("expected 'x' or '('", pos_);
    }

    void expect_close() {
        skip_whitespace();
        if (pos_ >= text_.size() || text_[pos_] != ')')
            throw ParseError("expected ')'", pos_);
        ++pos_;
    }

    void skip_whitespace() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render_into(const Expression& e, RenderStyle style, std::string& out) {
    switch (e.kind()) {
        case Expression::Kind::Leaf:
            out += (style == RenderStyle::Canonical) ? "x" : "1";
            return;
        case Expression::Kind::Sum:
            out += '(';
            render_into(e.left(), style, out);
            out += '+';
            render_into(e.right(), style, out);
            out += ')';
            return;
        case Expression::Kind::Product:
            out += '(';
            render_into(e.left(), style, out);
            if (style == RenderStyle::Ones) out += "·";
            render_into(e.right(), style, out);
            out += ')';
            return;
    }
}

}  // namespace

Expression parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Expression& e, RenderStyle style) {
    std::string out;
    out.reserve(4 * e.weight());
    render_into(e, style, out);
    return out;
}

Expression reconstruct_optimal(const ComplexityTable& table, uint64_t n) {
    const unsigned target = table.at(n);
    if (n == 1) return Expression::leaf();
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (unsigned(table.at(d)) + unsigned(table.at(n / d)) == target)
            return Expression::product(reconstruct_optimal(table, d),
                                       reconstruct_optimal(table, n / d));
    }
    for (uint64_t j = 1; 2 * j <= n; ++j) {
        if (unsigned(table.at(j)) + unsigned(table.at(n - j)) == target)
            return Expression::sum(reconstruct_optimal(table, j),
                                   reconstruct_optimal(table, n - j));
    }
    throw std::logic_error("table entry has no split witness");
}

ExtremalForm ExtremalForm::of(uint64_t m) {
    if (m < 2) throw RangeError("extremal form requires weight >= 2");
    ExtremalForm form;
    form.residue = unsigned(m % 3);
    form.k = (m - form.residue) / 3;
    return form;
}

uint64_t ExtremalForm::value() const {
    uint64_t result = 1;
    uint64_t threes = k;
    unsigned twos = 0;
    if (residue == 1) {
        threes = k - 1;
        twos = 2;
    } else if (residue == 2) {
        twos = 1;
    }
    for (uint64_t i = 0; i < threes; ++i) {
        if (__builtin_mul_overflow(result, uint64_t(3), &result))
            throw CapacityError("extremal value exceeds 64 bits");
    }
    for (unsigned i = 0; i < twos; ++i) {
        if (__builtin_mul_overflow(result, uint64_t(2), &result))
            throw CapacityError("extremal value exceeds 64 bits");
    }
    return result;
}

Expression extremal(uint64_t m) {
    if (m == 0) throw RangeError("extremal requires weight >= 1");
    if (m == 1) return Expression::leaf();
    const ExtremalForm form = ExtremalForm::of(m);
    const Expression two = Expression::sum(Expression::leaf(), Expression::leaf());
    const Expression three =
        Expression::sum(Expression::leaf(), two);
    uint64_t threes = form.k;
    if (form.residue == 1) threes = form.k - 1;

    Expression result = three;
    bool have = false;
    for (uint64_t i = 0; i < threes; ++i) {
        result = have ? Expression::product(result, three) : three;
        have = true;
    }
    if (form.residue == 1) {
        const Expression four = Expression::product(two, two);
        result = have ? Expression::product(result, four) : four;
        have = true;
    } else if (form.residue == 2) {
        result = have ? Expression::product(result, two) : two;
        have = true;
    }
    return result;
}

uint64_t max_value(uint64_t m) {
    if (m == 0) throw RangeError("max_value requires weight >= 1");
    if (m == 1) return 1;
    return ExtremalForm::of(m).value();
}

}  // namespace ncx
