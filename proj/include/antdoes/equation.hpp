#pragma once

// Power-form Diophantine equations: sum of a_i * x_i^p_i = N over positive
// integers x_i, with exact (overflow-checked) evaluation.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antdoes/checked.hpp"
#include "antdoes/node.hpp"

namespace antdoes {

/// Malformed equation text. offset() is the byte position of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Well-formed text that describes an equation outside the supported class
/// (zero coefficient, zero power, arity gap, non-positive target).
class EquationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Term {
    std::int64_t coefficient = 1;
    std::int64_t variable = 1; // 1-based
    std::int64_t power = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Exact distance |N - LHS(x)| of a node from satisfying the equation.
struct Fitness {
    std::int64_t value = 0;

    bool solves() const noexcept { return value == 0; }
    friend auto operator<=>(const Fitness&, const Fitness&) = default;
};

class Equation {
public:
    /// Validates the invariants and stores the terms ordered by variable
    /// index (stable for repeated variables). Throws EquationError.
    Equation(std::vector<Term> terms, std::int64_t target);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::int64_t target() const noexcept { return target_; }
    std::size_t arity() const noexcept { return arity_; }
    std::int64_t min_power() const noexcept { return min_power_; }

    friend bool operator==(const Equation&, const Equation&) = default;

private:
    std::vector<Term> terms_;
    std::int64_t target_;
    std::size_t arity_;
    std::int64_t min_power_;
};

Equation parse_equation(std::string_view text);

/// Canonical text, e.g. "x1^2 + 2x2^2 = 5400".
std::string format_equation(const Equation& eq);

/// Sum of a_i * x_i^p_i. Throws std::invalid_argument on a dimension mismatch
/// or non-positive coordinate, CapacityError if int64 would overflow.
std::int64_t evaluate_lhs(const Equation& eq, const Node& node);

Fitness fitness(const Equation& eq, const Node& node);

/// floor(N^(1/minPower)) + 1, by exact integer root search.
std::int64_t bound_p(const Equation& eq);

/// The integer root part of bound_p, exposed for property tests.
std::int64_t integer_root(std::int64_t value, std::int64_t degree);

} // namespace antdoes
