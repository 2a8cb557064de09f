#include "antdoes/colony.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "antdoes/search_space.hpp"

namespace antdoes {

void ColonyConfig::validate() const {
    if (num_ants == 0)
        throw std::invalid_argument("number of ants must be at least 1");
    if (num_neighbors == 0)
        throw std::invalid_argument("number of neighbors must be at least 1");
    if (max_iterations == 0)
        throw std::invalid_argument("iteration budget must be at least 1");
    if (max_solutions == 0)
        throw std::invalid_argument("max solutions must be at least 1");
}

std::vector<Ant> place_ants(const Equation& eq, std::size_t count, RandomSource& rng) {
    const std::int64_t p = bound_p(eq);
    std::vector<Ant> ants(count);
    for (Ant& ant : ants)
        ant.position = random_node(eq.arity(), p, rng);
    return ants;
}

std::optional<Solution> step(const Equation& eq, PheromoneTrail& trail, std::vector<Ant>& ants,
                             const ColonyConfig& config, RandomSource& rng, std::uint64_t iteration) {
    const std::int64_t p = bound_p(eq);
    std::vector<Node> candidates;
    std::vector<Fitness> scores;
    std::vector<double> weights;
    candidates.reserve(config.num_neighbors);

    for (std::size_t id = 0; id < ants.size(); ++id) {
        Ant& ant = ants[id];
        const Fitness current = fitness(eq, ant.position);
        // Only reachable when a random placement lands on a root.
        if (current.solves())
            return Solution{ant.position, iteration, id};

        neighborhood(ant.position, p, config.num_neighbors, rng, candidates);
        scores.clear();
        for (const Node& n : candidates)
            scores.push_back(fitness(eq, n));

        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (scores[i].solves()) {
                ant.path.push_back(std::move(ant.position));
                ant.position = candidates[i];
                return Solution{ant.position, iteration, id};
            }
        }

        const Fitness best = *std::min_element(scores.begin(), scores.end());
        if (!(best < current)) {
            trail.erase(ant.position);
            if (ant.path.empty()) {
                ant.position = random_node(eq.arity(), p, rng);
            } else {
                ant.position = std::move(ant.path.back());
                ant.path.pop_back();
            }
            continue;
        }

        weights.clear();
        for (std::size_t i = 0; i < candidates.size(); ++i)
            weights.push_back(trail.candidate_weight(candidates[i], scores[i]));
        const std::size_t chosen = select_successor(weights, rng);
        ant.path.push_back(std::move(ant.position));
        ant.position = std::move(candidates[chosen]);
        trail.land(ant.position, scores[chosen]);
    }
    return std::nullopt;
}

namespace {

TraceSnapshot snapshot(std::uint64_t iteration, const std::vector<Ant>& ants, const PheromoneTrail& trail) {
    TraceSnapshot snap;
    snap.iteration = iteration;
    snap.ants.reserve(ants.size());
    for (const Ant& ant : ants)
        snap.ants.push_back(ant.position);
    snap.trail = trail.sorted_entries();
    return snap;
}

} // namespace

RunReport solve(const Equation& eq, const ColonyConfig& config, const SolveOptions& options) {
    config.validate();

    RunReport report;
    report.equation = format_equation(eq);
    report.config = config;

    RandomSource rng(config.seed);
    PheromoneTrail trail;
    std::vector<Ant> ants = place_ants(eq, config.num_ants, rng);

    const bool tracing = options.trace_every > 0;
    std::vector<TraceSnapshot> trace;
    if (tracing)
        trace.push_back(snapshot(0, ants, trail));

    std::uint64_t iteration = 0;
    while (iteration < config.max_iterations && report.solutions.size() < config.max_solutions) {
        ++iteration;
        std::optional<Solution> found = step(eq, trail, ants, config, rng, iteration);

        const bool sampled = tracing && iteration % options.trace_every == 0;
        if (sampled || (tracing && found))
            trace.push_back(snapshot(iteration, ants, trail));

        if (!found)
            continue;
        if (!verify(eq, found->node))
            throw std::logic_error("captured node " + found->node.to_string() + " fails verification");

        const bool duplicate = std::any_of(report.solutions.begin(), report.solutions.end(),
                                           [&](const Solution& s) { return s.node == found->node; });
        if (!duplicate)
            report.solutions.push_back(std::move(*found));
        if (report.solutions.size() >= config.max_solutions)
            break;

        // Fresh start for the next solution: new positions, empty trail.
        trail.clear();
        ants = place_ants(eq, config.num_ants, rng);
    }

    report.iterations_used = iteration;
    if (tracing) {
        if (trace.back().iteration != iteration)
            trace.push_back(snapshot(iteration, ants, trail));
        report.trace = std::move(trace);
    }
    return report;
}

bool verify(const Equation& eq, const Node& node) {
    using boost::multiprecision::cpp_int;
    if (node.dimension() != eq.arity())
        throw std::invalid_argument("verify: node has dimension " + std::to_string(node.dimension()) +
                                    ", equation has arity " + std::to_string(eq.arity()));
    cpp_int lhs = 0;
    for (const Term& t : eq.terms()) {
        const std::int64_t x = node[static_cast<std::size_t>(t.variable - 1)];
        if (x < 1)
            return false;
        lhs += cpp_int(t.coefficient) * boost::multiprecision::pow(cpp_int(x), static_cast<unsigned>(t.power));
    }
    return lhs == cpp_int(eq.target());
}

} // namespace antdoes
