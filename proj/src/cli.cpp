#include "antdoes/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "antdoes/colony.hpp"
#include "antdoes/equation.hpp"
#include "antdoes/experiments.hpp"
#include "antdoes/oracle.hpp"
#include "antdoes/report_io.hpp"

namespace antdoes {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EquationSource {
    std::string text;
    std::string file;

    void attach(CLI::App& cmd) {
        cmd.add_option("equation", text, "Equation, e.g. \"x1^2 + x2^2 = 9000\"");
        cmd.add_option("--equation-file", file, "Read the equation from a file instead");
    }

    Equation load() const {
        if (!text.empty() && !file.empty())
            throw UsageError("give the equation either inline or with --equation-file, not both");
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in)
                throw UsageError("cannot read equation file '" + file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_equation(buf.str());
        }
        if (text.empty())
            throw UsageError("missing equation");
        return parse_equation(text);
    }
};

struct ColonyFlags {
    ColonyConfig config;
    std::uint64_t seed = 0;
    CLI::Option* seed_option = nullptr;

    void attach(CLI::App& cmd) {
        cmd.add_option("--ants", config.num_ants, "Number of ants")->capture_default_str()->check(CLI::PositiveNumber);
        cmd.add_option("--neighbors", config.num_neighbors, "Neighbors generated per ant and iteration")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        cmd.add_option("--max-iterations", config.max_iterations, "Total colony iteration budget")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        seed_option = cmd.add_option("--seed", seed, "RNG seed (default: drawn from entropy and reported)");
    }

    void attach_max_solutions(CLI::App& cmd) {
        cmd.add_option("--max-solutions", config.max_solutions, "Distinct solutions to collect")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    }

    ColonyConfig resolve() {
        config.seed = seed_option->count() > 0 ? seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
        return config;
    }
};

/// Buffers primary output and writes it to --out or the console at the end.
struct Output {
    std::string path;

    void attach(CLI::App& cmd) { cmd.add_option("--out", path, "Write output to this file"); }

    void emit(const std::string& text, std::ostream& console) const {
        if (path.empty()) {
            console << text;
            return;
        }
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw UsageError("cannot open output file '" + path + "'");
        file << text;
    }
};

Node parse_node(const std::string& text) {
    std::vector<std::int64_t> coords;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed node '" + text + "'");
        }
        if (used != part.size() || value < 1)
            throw UsageError("node coordinates must be positive integers: '" + text + "'");
        coords.push_back(value);
    }
    if (coords.empty())
        throw UsageError("empty node");
    return Node(std::move(coords));
}

std::vector<std::size_t> parse_values(const std::string& text) {
    std::vector<std::size_t> values;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(part, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed value list '" + text + "'");
        }
        if (used != part.size())
            throw UsageError("malformed value list '" + text + "'");
        values.push_back(static_cast<std::size_t>(value));
    }
    return values;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ant-colony search for positive-integer roots of power-form Diophantine equations", "antdoes"};
    app.require_subcommand(1);

    std::function<int()> action;

    // solve
    EquationSource solve_eq;
    ColonyFlags solve_flags;
    Output solve_out;
    std::uint64_t solve_trace_every = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Run the colony and print a JSON report");
    solve_eq.attach(*solve_cmd);
    solve_flags.attach(*solve_cmd);
    solve_flags.attach_max_solutions(*solve_cmd);
    solve_out.attach(*solve_cmd);
    solve_cmd->add_option("--trace-every", solve_trace_every, "Embed a snapshot every N iterations (0 = off)");
    solve_cmd->callback([&] {
        action = [&] {
            const Equation eq = solve_eq.load();
            const RunReport report = solve(eq, solve_flags.resolve(), SolveOptions{solve_trace_every});
            for (const Solution& s : report.solutions)
                if (!verify(eq, s.node))
                    throw std::logic_error("solution " + s.node.to_string() + " failed verification");
            solve_out.emit(run_report_json(report), out);
            return int{kExitOk};
        };
    });

    // sweep
    EquationSource sweep_eq;
    ColonyFlags sweep_flags;
    Output sweep_out;
    std::string sweep_axis = "ants";
    std::string sweep_values;
    std::size_t sweep_trials = 20;
    std::string summary_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "Iterations-to-first-solution across ant or neighbor counts");
    sweep_eq.attach(*sweep_cmd);
    sweep_flags.attach(*sweep_cmd);
    sweep_out.attach(*sweep_cmd);
    sweep_cmd->add_option("--axis", sweep_axis, "ants or neighbors")->capture_default_str();
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated, strictly increasing axis values")->required();
    sweep_cmd->add_option("--trials", sweep_trials, "Trials per axis value")->capture_default_str();
    sweep_cmd->add_option("--summary-out", summary_path,
                          "Write the summary CSV here (default: appended after the trial rows)");
    sweep_cmd->callback([&] {
        action = [&] {
            SweepSpec spec{sweep_eq.load(), parse_axis(sweep_axis), parse_values(sweep_values), sweep_trials,
                           sweep_flags.resolve()};
            const SweepResult result = run_sweep(spec);
            if (sweep_flags.seed_option->count() == 0)
                err << "seed=" << spec.base_config.seed << '\n';
            std::ostringstream trials, summary;
            write_sweep_csv(trials, result);
            write_sweep_summary_csv(summary, result);
            if (summary_path.empty()) {
                sweep_out.emit(trials.str() + "\n" + summary.str(), out);
            } else {
                sweep_out.emit(trials.str(), out);
                Output{summary_path}.emit(summary.str(), out);
            }
            return int{kExitOk};
        };
    });

    // verify
    EquationSource verify_eq;
    std::string verify_node;
    auto* verify_cmd = app.add_subcommand("verify", "Check whether a node solves the equation");
    verify_eq.attach(*verify_cmd);
    verify_cmd->add_option("--node", verify_node, "Comma-separated coordinates, e.g. 54,78")->required();
    verify_cmd->callback([&] {
        action = [&] {
            const Equation eq = verify_eq.load();
            const Node node = parse_node(verify_node);
            const bool ok = verify(eq, node);
            out << (ok ? "true" : "false") << " fitness=" << fitness(eq, node).value << '\n';
            return int{ok ? kExitOk : kExitNotVerified};
        };
    });

    // oracle
    EquationSource oracle_eq;
    Output oracle_out;
    std::uint64_t oracle_limit = kDefaultNodeLimit;
    auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate every solution inside the search box");
    oracle_eq.attach(*oracle_cmd);
    oracle_out.attach(*oracle_cmd);
    oracle_cmd->add_option("--oracle-limit", oracle_limit, "Refuse boxes with more nodes than this")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    oracle_cmd->callback([&] {
        action = [&] {
            std::ostringstream text;
            write_solution_set(text, enumerate(oracle_eq.load(), oracle_limit));
            oracle_out.emit(text.str(), out);
            return int{kExitOk};
        };
    });

    // trace
    EquationSource trace_eq;
    ColonyFlags trace_flags;
    Output trace_out;
    std::uint64_t trace_every = 1;
    auto* trace_cmd = app.add_subcommand("trace", "Dump ant positions and pheromone trails as CSV");
    trace_eq.attach(*trace_cmd);
    trace_flags.attach(*trace_cmd);
    trace_flags.attach_max_solutions(*trace_cmd);
    trace_out.attach(*trace_cmd);
    trace_cmd->add_option("--trace-every", trace_every, "Snapshot interval in iterations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    trace_cmd->callback([&] {
        action = [&] {
            const ColonyConfig config = trace_flags.resolve();
            std::ostringstream text;
            write_trace_csv(text, capture_trace(trace_eq.load(), config, trace_every));
            trace_out.emit(text.str(), out);
            if (trace_flags.seed_option->count() == 0)
                err << "seed=" << config.seed << '\n';
            return int{kExitOk};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action();
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const BoxTooLargeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        // ParseError, EquationError, UsageError and bad configurations.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitNotVerified;
    }
}

} // namespace antdoes
