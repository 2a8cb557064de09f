#include "antdoes/report_io.hpp"

#include <ostream>

#include <json.hpp>

namespace antdoes {

namespace {

using Json = nlohmann::ordered_json;

Json coords_json(const Node& node) {
    Json out = Json::array();
    for (std::int64_t c : node.coords())
        out.push_back(c);
    return out;
}

Json snapshot_json(const TraceSnapshot& snap) {
    Json ants = Json::array();
    for (const Node& n : snap.ants)
        ants.push_back(coords_json(n));
    Json trail = Json::array();
    for (const auto& [node, entry] : snap.trail)
        trail.push_back(Json{{"coords", coords_json(node)}, {"pheromone", entry.pheromone}, {"visits", entry.visits}});
    return Json{{"iteration", snap.iteration}, {"ants", std::move(ants)}, {"trail", std::move(trail)}};
}

} // namespace

std::string run_report_json(const RunReport& report, int indent) {
    Json doc;
    doc["equation"] = report.equation;
    doc["config"] = Json{{"ants", report.config.num_ants},
                         {"neighbors", report.config.num_neighbors},
                         {"max_iterations", report.config.max_iterations},
                         {"max_solutions", report.config.max_solutions},
                         {"seed", report.config.seed}};
    Json solutions = Json::array();
    for (const Solution& s : report.solutions)
        solutions.push_back(Json{{"coords", coords_json(s.node)}, {"iteration", s.iteration_found}, {"ant", s.ant_id}});
    doc["solutions"] = std::move(solutions);
    doc["iterations_used"] = report.iterations_used;
    if (report.trace) {
        Json trace = Json::array();
        for (const TraceSnapshot& snap : *report.trace)
            trace.push_back(snapshot_json(snap));
        doc["trace"] = std::move(trace);
    }
    return doc.dump(indent) + "\n";
}

void write_solution_set(std::ostream& out, const SolutionSet& set) {
    for (const Node& n : set.solutions)
        out << n.to_string() << '\n';
    out << "count=" << set.solutions.size() << " box=" << set.box_bound << '^' << set.arity << '\n';
}

} // namespace antdoes
