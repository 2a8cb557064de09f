#include "antdoes/pheromone.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

namespace antdoes {

namespace {
constexpr double kRevisitBonus = 0.01;
constexpr double kEvaporationDivisor = 100.0;
} // namespace

double base_deposit(Fitness f) {
    if (f.value == 0)
        throw SolutionFitnessError();
    return 1.0 / static_cast<double>(f.value);
}

TrailEntry PheromoneTrail::land(const Node& node, Fitness f) {
    const double deposit = base_deposit(f);
    auto [it, inserted] = entries_.try_emplace(node, TrailEntry{deposit, 1});
    if (inserted)
        return it->second;

    TrailEntry& entry = it->second;
    const std::uint64_t visits_before = entry.visits;
    entry.visits = visits_before + 1;
    entry.pheromone += kRevisitBonus * deposit;
    if (visits_before >= 2)
        entry.pheromone -= static_cast<double>(entry.visits) * deposit / kEvaporationDivisor;
    entry.pheromone = std::max(entry.pheromone, 0.0);
    return entry;
}

void PheromoneTrail::erase(const Node& node) {
    if (auto it = entries_.find(node); it != entries_.end())
        it->second.pheromone = 0.0;
}

double PheromoneTrail::candidate_weight(const Node& node, Fitness f) const {
    if (auto it = entries_.find(node); it != entries_.end())
        return it->second.pheromone;
    return base_deposit(f);
}

std::optional<TrailEntry> PheromoneTrail::find(const Node& node) const {
    if (auto it = entries_.find(node); it != entries_.end())
        return it->second;
    return std::nullopt;
}

std::vector<std::pair<Node, TrailEntry>> PheromoneTrail::sorted_entries() const {
    std::vector<std::pair<Node, TrailEntry>> out(entries_.begin(), entries_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

double checked_total(std::span<const double> weights) {
    if (weights.empty())
        throw std::invalid_argument("select_successor: no candidates");
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("select_successor: weights must be finite and nonnegative");
        total += w;
    }
    return total;
}

} // namespace

std::size_t select_successor(std::span<const double> weights, RandomSource& rng) {
    const double total = checked_total(weights);
    if (total == 0.0)
        return static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(weights.size()) - 1));

    const double target = rng.uniform_real() * total;
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0)
            continue;
        cumulative += weights[i];
        last_positive = i;
        if (target < cumulative)
            return i;
    }
    // Rounding can leave target just above the accumulated sum.
    return last_positive;
}

std::vector<double> selection_probabilities(std::span<const double> weights) {
    const double total = checked_total(weights);
    std::vector<double> out(weights.size());
    if (total == 0.0) {
        std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(weights.size()));
        return out;
    }
    std::transform(weights.begin(), weights.end(), out.begin(), [total](double w) { return w / total; });
    return out;
}

std::string format_real(double value) {
    char buf[32];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value)
            break;
    }
    return buf;
}

void write_trail_csv(std::ostream& out, std::span<const std::pair<Node, TrailEntry>> entries) {
    out << "node_coords;pheromone;visits\n";
    for (const auto& [node, entry] : entries)
        out << node.to_string() << ';' << format_real(entry.pheromone) << ';' << entry.visits << '\n';
}

void write_trail_csv(std::ostream& out, const PheromoneTrail& trail) {
    write_trail_csv(out, trail.sorted_entries());
}

} // namespace antdoes
