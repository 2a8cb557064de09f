#pragma once

// The colony search loop: ants move through the box [1,p]^n, choosing among
// generated neighbors by pheromone roulette, backtracking out of local minima,
// and reseeding after every captured solution.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "antdoes/equation.hpp"
#include "antdoes/node.hpp"
#include "antdoes/pheromone.hpp"
#include "antdoes/random.hpp"

namespace antdoes {

struct Ant {
    Node position;
    std::vector<Node> path; // back() is the previous position
};

struct ColonyConfig {
    std::size_t num_ants = 10;
    std::size_t num_neighbors = 10;
    std::uint64_t max_iterations = 100000;
    std::size_t max_solutions = 1;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument if any count is zero.
    void validate() const;

    friend bool operator==(const ColonyConfig&, const ColonyConfig&) = default;
};

struct Solution {
    Node node;
    std::uint64_t iteration_found = 0; // 1-based colony step
    std::size_t ant_id = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

struct TraceSnapshot {
    std::uint64_t iteration = 0;
    std::vector<Node> ants;
    std::vector<std::pair<Node, TrailEntry>> trail;
};

struct RunReport {
    std::string equation; // canonical text
    ColonyConfig config;
    std::vector<Solution> solutions;
    std::uint64_t iterations_used = 0;
    std::optional<std::vector<TraceSnapshot>> trace;
};

/// One colony iteration. Ants move in index order and the trail changes
/// between them. Returns the first solution seen, in which case the
/// remaining ants do not move this iteration. iteration is recorded in the
/// returned Solution.
std::optional<Solution> step(const Equation& eq, PheromoneTrail& trail, std::vector<Ant>& ants,
                             const ColonyConfig& config, RandomSource& rng, std::uint64_t iteration);

/// Ants placed at independent random nodes.
std::vector<Ant> place_ants(const Equation& eq, std::size_t count, RandomSource& rng);

struct SolveOptions {
    /// Snapshot ants and trail every N iterations (0 disables tracing). The
    /// initial placement and the final state are always included when on.
    std::uint64_t trace_every = 0;
};

RunReport solve(const Equation& eq, const ColonyConfig& config, const SolveOptions& options = {});

/// Re-evaluates the equation in arbitrary precision, independently of the
/// int64 evaluation the search uses. Throws std::invalid_argument on a
/// dimension mismatch.
bool verify(const Equation& eq, const Node& node);

} // namespace antdoes
