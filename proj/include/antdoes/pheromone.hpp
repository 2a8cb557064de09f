#pragma once

// Node-resident pheromone: deposits of 1/f on landing, a 1% revisit bonus,
// visit-proportional evaporation, erasure at local minima, and roulette
// selection over candidate weights.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antdoes/equation.hpp"
#include "antdoes/node.hpp"
#include "antdoes/random.hpp"

namespace antdoes {

/// Raised when a pheromone quantity is requested for a zero-fitness node.
/// Such a node is a solution and must be captured before any deposit.
class SolutionFitnessError : public std::logic_error {
public:
    SolutionFitnessError() : std::logic_error("pheromone requested for a zero-fitness (solution) node") {}
};

struct TrailEntry {
    double pheromone = 0.0;
    std::uint64_t visits = 0;

    friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

/// 1 / f. Throws SolutionFitnessError when f is zero.
double base_deposit(Fitness f);

class PheromoneTrail {
public:
    /// Records an ant landing on node with fitness f and returns the entry.
    ///   first landing:  pheromone = 1/f, visits = 1
    ///   later landings: pheromone += 0.01/f, and once the node has already
    ///                   been visited twice, pheromone -= visits * (1/f) / 100,
    ///                   clamped at zero.
    TrailEntry land(const Node& node, Fitness f);

    /// Zeroes the node's pheromone, keeping its visit count. No-op when absent.
    void erase(const Node& node);

    /// Stored pheromone when the node has an entry, otherwise the deposit a
    /// fresh landing would make.
    double candidate_weight(const Node& node, Fitness f) const;

    std::optional<TrailEntry> find(const Node& node) const;
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    void clear() noexcept { entries_.clear(); }

    /// Entries sorted by node, for reproducible dumps.
    std::vector<std::pair<Node, TrailEntry>> sorted_entries() const;

private:
    std::unordered_map<Node, TrailEntry, NodeHash> entries_;
};

/// Roulette wheel: index i with probability weights[i] / sum. An all-zero
/// vector selects uniformly. Throws std::invalid_argument on an empty list or
/// a negative / non-finite weight.
std::size_t select_successor(std::span<const double> weights, RandomSource& rng);

/// The probabilities select_successor draws from.
std::vector<double> selection_probabilities(std::span<const double> weights);

/// Header `node_coords;pheromone;visits`, then one `x1,x2,...;pheromone;visits`
/// row per entry, sorted by node.
void write_trail_csv(std::ostream& out, const PheromoneTrail& trail);
void write_trail_csv(std::ostream& out, std::span<const std::pair<Node, TrailEntry>> entries);

/// Shortest round-trip decimal form of a double.
std::string format_real(double value);

} // namespace antdoes
