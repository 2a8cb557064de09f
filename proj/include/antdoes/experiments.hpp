#pragma once

// Parameter sweeps (iterations-to-first-solution against colony size or
// neighborhood size) and trace capture for offline plotting.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "antdoes/colony.hpp"
#include "antdoes/equation.hpp"

namespace antdoes {

enum class SweepAxis { ants, neighbors };

std::string to_string(SweepAxis axis);
/// Accepts "ants" or "neighbors"; throws std::invalid_argument otherwise.
SweepAxis parse_axis(const std::string& text);

struct SweepSpec {
    Equation equation;
    SweepAxis axis = SweepAxis::ants;
    std::vector<std::size_t> axis_values; // strictly increasing, all >= 1
    std::size_t trials_per_value = 20;
    ColonyConfig base_config; // seed is the base seed; max_solutions is forced to 1

    void validate() const;
};

/// seed = base ^ mix64(mix64(value) ^ trial), with mix64 the splitmix64
/// finalizer. Any single trial can be re-run from (base, value, trial).
std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t value, std::uint64_t trial);

struct TrialResult {
    std::size_t value = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0; // to first solution, or the spent budget on failure
    bool success = false;

    friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct SweepRow {
    std::size_t value = 0;
    std::vector<TrialResult> trials;
    std::optional<double> median_iterations; // over successful trials only
    double success_rate = 0.0;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::ants;
    std::vector<SweepRow> rows; // ordered by axis value
};

/// The config one trial runs with.
ColonyConfig trial_config(const SweepSpec& spec, std::size_t value, std::size_t trial);

/// Trials fan out over OpenMP threads; rows come back in axis order.
SweepResult run_sweep(const SweepSpec& spec);

/// Same trials, one after another.
SweepResult run_sweep_serial(const SweepSpec& spec);

/// Median of the values; nullopt when empty. Even counts average the middle pair.
std::optional<double> median(std::vector<std::uint64_t> values);

/// Header `axis,value,trial,seed,iterations,success`, one row per trial.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Header `axis,value,median_iterations,success_rate`; NA when no trial succeeded.
void write_sweep_summary_csv(std::ostream& out, const SweepResult& result);

/// Runs solve with snapshots every sample_every iterations (>= 1).
std::vector<TraceSnapshot> capture_trace(const Equation& eq, const ColonyConfig& config,
                                         std::uint64_t sample_every);

/// Position rows `iter,ant_id,coords` for every snapshot, followed by one
/// trail block per snapshot introduced by `# trail iter=<k>` and written in
/// the `node_coords;pheromone;visits` format.
void write_trace_csv(std::ostream& out, const std::vector<TraceSnapshot>& trace);

} // namespace antdoes
