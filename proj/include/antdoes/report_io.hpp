#pragma once

#include <iosfwd>
#include <string>

#include "antdoes/colony.hpp"
#include "antdoes/oracle.hpp"

namespace antdoes {

/// RunReport as JSON:
///   {"equation": "...", "config": {"ants", "neighbors", "max_iterations",
///    "max_solutions", "seed"}, "solutions": [{"coords": [...], "iteration",
///    "ant"}], "iterations_used", "trace"?}
/// Keys are emitted in that order so output is byte-stable.
std::string run_report_json(const RunReport& report, int indent = 2);

/// One comma-separated solution per line, then `count=<k> box=<p>^<n>`.
void write_solution_set(std::ostream& out, const SolutionSet& set);

} // namespace antdoes
