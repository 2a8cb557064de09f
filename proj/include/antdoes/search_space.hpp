#pragma once

#include <cstdint>
#include <vector>

#include "antdoes/equation.hpp"
#include "antdoes/node.hpp"
#include "antdoes/random.hpp"

namespace antdoes {

/// Node with every coordinate drawn uniformly from [1, p].
Node random_node(const Equation& eq, RandomSource& rng);

/// Applies the modulo-p wrap to x + offset. Both x and offset lie in [1, p];
/// a residue of 0 maps to p so the result stays in [1, p].
std::int64_t wrap_coordinate(std::int64_t x, std::int64_t offset, std::int64_t p);

/// Perturbs every coordinate by an offset drawn from [1, p], wrapped.
Node neighbor(const Equation& eq, const Node& node, RandomSource& rng);

/// k neighbors in generation order; duplicates are kept.
std::vector<Node> neighborhood(const Equation& eq, const Node& node, std::size_t k, RandomSource& rng);

// Variants taking a precomputed bound p, for hot loops.
Node random_node(std::size_t arity, std::int64_t p, RandomSource& rng);
Node neighbor(const Node& node, std::int64_t p, RandomSource& rng);
void neighborhood(const Node& node, std::int64_t p, std::size_t k, RandomSource& rng, std::vector<Node>& out);

} // namespace antdoes
