#include "antdoes/equation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace antdoes {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

Equation::Equation(std::vector<Term> terms, std::int64_t target) : terms_(std::move(terms)), target_(target) {
    if (terms_.empty())
        throw EquationError("equation has no terms");
    if (target_ < 1)
        throw EquationError("right-hand side must be a positive integer, got " + std::to_string(target_));

    std::int64_t max_variable = 0;
    min_power_ = terms_.front().power;
    for (const Term& t : terms_) {
        if (t.coefficient == 0)
            throw EquationError("zero coefficient on x" + std::to_string(t.variable));
        if (t.power < 1)
            throw EquationError("power of x" + std::to_string(t.variable) + " must be at least 1");
        if (t.variable < 1)
            throw EquationError("variable index must be at least 1");
        max_variable = std::max(max_variable, t.variable);
        min_power_ = std::min(min_power_, t.power);
    }
    arity_ = static_cast<std::size_t>(max_variable);

    std::vector<bool> used(arity_ + 1, false);
    for (const Term& t : terms_)
        used[static_cast<std::size_t>(t.variable)] = true;
    for (std::size_t i = 1; i <= arity_; ++i)
        if (!used[i])
            throw EquationError("variable x" + std::to_string(i) + " is never used (arity gap)");

    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.variable < b.variable; });
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Equation parse() {
        std::vector<Term> terms;
        skip_space();
        std::int64_t sign = 1;
        // A leading sign is accepted so that equations whose first term is
        // negative still round-trip through format_equation.
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        terms.push_back(term(sign));
        for (;;) {
            skip_space();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                terms.push_back(term(c == '-' ? -1 : 1));
            } else if (c == '=') {
                ++pos_;
                break;
            } else if (c == '\0') {
                fail("expected '+', '-' or '='");
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer right-hand side");
        std::size_t target_at = pos_;
        std::int64_t target = integer();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing characters after right-hand side");
        if (target < 1)
            throw ParseError("right-hand side must be at least 1", target_at);
        return Equation(std::move(terms), target);
    }

private:
    Term term(std::int64_t sign) {
        skip_space();
        Term t;
        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient = integer();
            if (t.coefficient == 0)
                throw ParseError("zero coefficient", start);
            skip_space();
        }
        t.coefficient = checked::mul(t.coefficient, sign);
        if (peek() != 'x')
            fail("expected 'x'");
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected variable index after 'x'");
        std::size_t index_at = pos_;
        t.variable = integer();
        if (t.variable == 0)
            throw ParseError("variable index must be at least 1", index_at);
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected power after '^'");
            std::size_t power_at = pos_;
            t.power = integer();
            if (t.power == 0)
                throw ParseError("power must be at least 1", power_at);
        }
        return t;
    }

    std::int64_t integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec == std::errc::result_out_of_range)
            throw CapacityError("integer literal at offset " + std::to_string(start) + " exceeds 64 bits");
        (void)ptr;
        return value;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Equation parse_equation(std::string_view text) {
    return Parser(text).parse();
}

std::string format_equation(const Equation& eq) {
    std::ostringstream out;
    bool first = true;
    for (const Term& t : eq.terms()) {
        std::int64_t magnitude = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        if (first) {
            if (t.coefficient < 0)
                out << '-';
        } else {
            out << (t.coefficient < 0 ? " - " : " + ");
        }
        if (magnitude != 1)
            out << magnitude;
        out << 'x' << t.variable << '^' << t.power;
        first = false;
    }
    out << " = " << eq.target();
    return out.str();
}

std::int64_t evaluate_lhs(const Equation& eq, const Node& node) {
    if (node.dimension() != eq.arity())
        throw std::invalid_argument("node has dimension " + std::to_string(node.dimension()) +
                                    ", equation has arity " + std::to_string(eq.arity()));
    std::int64_t sum = 0;
    for (const Term& t : eq.terms()) {
        std::int64_t x = node[static_cast<std::size_t>(t.variable - 1)];
        if (x < 1)
            throw std::invalid_argument("coordinate x" + std::to_string(t.variable) + " must be positive");
        sum = checked::add(sum, checked::mul(t.coefficient, checked::pow(x, t.power)));
    }
    return sum;
}

Fitness fitness(const Equation& eq, const Node& node) {
    return Fitness{checked::abs(checked::sub(eq.target(), evaluate_lhs(eq, node)))};
}

std::int64_t integer_root(std::int64_t value, std::int64_t degree) {
    if (value < 1 || degree < 1)
        throw std::invalid_argument("integer_root needs value >= 1 and degree >= 1");
    // Largest k with k^degree <= value.
    std::int64_t lo = 1, hi = value;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (checked::compare_pow(mid, degree, value) <= 0)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::int64_t bound_p(const Equation& eq) {
    return checked::add(integer_root(eq.target(), eq.min_power()), 1);
}

} // namespace antdoes
