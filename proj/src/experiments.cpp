#include "antdoes/experiments.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <stdexcept>

#include <omp.h>

#include "antdoes/random.hpp"

namespace antdoes {

std::string to_string(SweepAxis axis) { return axis == SweepAxis::ants ? "ants" : "neighbors"; }

SweepAxis parse_axis(const std::string& text) {
    if (text == "ants")
        return SweepAxis::ants;
    if (text == "neighbors")
        return SweepAxis::neighbors;
    throw std::invalid_argument("unknown sweep axis '" + text + "' (expected ants or neighbors)");
}

void SweepSpec::validate() const {
    if (axis_values.empty())
        throw std::invalid_argument("sweep needs at least one axis value");
    if (axis_values.front() == 0)
        throw std::invalid_argument("sweep axis values must be positive");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
        if (axis_values[i] <= axis_values[i - 1])
            throw std::invalid_argument("sweep axis values must be strictly increasing");
    if (trials_per_value == 0)
        throw std::invalid_argument("sweep needs at least one trial per value");
    ColonyConfig probe = base_config;
    probe.max_solutions = 1;
    probe.validate();
}

std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t value, std::uint64_t trial) {
    return base_seed ^ mix64(mix64(value) ^ trial);
}

ColonyConfig trial_config(const SweepSpec& spec, std::size_t value, std::size_t trial) {
    ColonyConfig config = spec.base_config;
    config.max_solutions = 1;
    config.seed = derive_trial_seed(spec.base_config.seed, value, trial);
    if (spec.axis == SweepAxis::ants)
        config.num_ants = value;
    else
        config.num_neighbors = value;
    return config;
}

namespace {

TrialResult run_trial(const SweepSpec& spec, std::size_t value, std::size_t trial) {
    const ColonyConfig config = trial_config(spec, value, trial);
    const RunReport report = solve(spec.equation, config);
    TrialResult result{value, trial, config.seed, report.iterations_used, !report.solutions.empty()};
    if (result.success)
        result.iterations = report.solutions.front().iteration_found;
    return result;
}

SweepResult aggregate(const SweepSpec& spec, std::vector<TrialResult> flat) {
    SweepResult result;
    result.axis = spec.axis;
    const std::size_t per = spec.trials_per_value;
    for (std::size_t v = 0; v < spec.axis_values.size(); ++v) {
        SweepRow row;
        row.value = spec.axis_values[v];
        row.trials.assign(flat.begin() + static_cast<std::ptrdiff_t>(v * per),
                          flat.begin() + static_cast<std::ptrdiff_t>((v + 1) * per));
        std::vector<std::uint64_t> successes;
        for (const TrialResult& t : row.trials)
            if (t.success)
                successes.push_back(t.iterations);
        row.success_rate = static_cast<double>(successes.size()) / static_cast<double>(per);
        row.median_iterations = median(std::move(successes));
        result.rows.push_back(std::move(row));
    }
    return result;
}

} // namespace

SweepResult run_sweep_serial(const SweepSpec& spec) {
    spec.validate();
    std::vector<TrialResult> flat;
    for (std::size_t value : spec.axis_values)
        for (std::size_t t = 0; t < spec.trials_per_value; ++t)
            flat.push_back(run_trial(spec, value, t));
    return aggregate(spec, std::move(flat));
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto total = static_cast<std::int64_t>(spec.axis_values.size() * spec.trials_per_value);
    std::vector<TrialResult> flat(static_cast<std::size_t>(total));
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i) {
        const auto index = static_cast<std::size_t>(i);
        try {
            flat[index] = run_trial(spec, spec.axis_values[index / spec.trials_per_value],
                                    index % spec.trials_per_value);
        } catch (...) {
#pragma omp critical(antdoes_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return aggregate(spec, std::move(flat));
}

std::optional<double> median(std::vector<std::uint64_t> values) {
    if (values.empty())
        return std::nullopt;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1)
        return static_cast<double>(values[mid]);
    return (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2.0;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "axis,value,trial,seed,iterations,success\n";
    const std::string axis = to_string(result.axis);
    for (const SweepRow& row : result.rows)
        for (const TrialResult& t : row.trials)
            out << axis << ',' << t.value << ',' << t.trial << ',' << t.seed << ',' << t.iterations << ','
                << (t.success ? 1 : 0) << '\n';
}

void write_sweep_summary_csv(std::ostream& out, const SweepResult& result) {
    out << "axis,value,median_iterations,success_rate\n";
    const std::string axis = to_string(result.axis);
    for (const SweepRow& row : result.rows) {
        out << axis << ',' << row.value << ',';
        if (row.median_iterations)
            out << format_real(*row.median_iterations);
        else
            out << "NA";
        out << ',' << format_real(row.success_rate) << '\n';
    }
}

std::vector<TraceSnapshot> capture_trace(const Equation& eq, const ColonyConfig& config,
                                         std::uint64_t sample_every) {
    if (sample_every == 0)
        throw std::invalid_argument("trace sampling interval must be at least 1");
    RunReport report = solve(eq, config, SolveOptions{sample_every});
    return std::move(*report.trace);
}

void write_trace_csv(std::ostream& out, const std::vector<TraceSnapshot>& trace) {
    out << "iter,ant_id,coords\n";
    for (const TraceSnapshot& snap : trace)
        for (std::size_t id = 0; id < snap.ants.size(); ++id)
            out << snap.iteration << ',' << id << ",\"" << snap.ants[id].to_string() << "\"\n";
    for (const TraceSnapshot& snap : trace) {
        out << "# trail iter=" << snap.iteration << '\n';
        write_trail_csv(out, snap.trail);
    }
}

} // namespace antdoes
