#pragma once

// Exhaustive enumeration of every root inside the search box [1,p]^n.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "antdoes/equation.hpp"
#include "antdoes/node.hpp"

namespace antdoes {

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

class BoxTooLargeError : public std::runtime_error {
public:
    BoxTooLargeError(std::int64_t p, std::size_t arity, std::uint64_t limit);
};

struct SolutionSet {
    std::vector<Node> solutions; // lexicographic, no duplicates
    std::int64_t box_bound = 0;
    std::size_t arity = 0;
    bool exhaustive = false;
};

/// p^n, saturating at UINT64_MAX.
std::uint64_t box_size(std::int64_t p, std::size_t arity);

/// OpenMP box scan. Throws BoxTooLargeError when p^n exceeds node_limit.
SolutionSet enumerate(const Equation& eq, std::uint64_t node_limit = kDefaultNodeLimit);

/// Single-threaded odometer scan; the reference the parallel kernel is
/// tested against.
SolutionSet enumerate_serial(const Equation& eq, std::uint64_t node_limit = kDefaultNodeLimit);

} // namespace antdoes
