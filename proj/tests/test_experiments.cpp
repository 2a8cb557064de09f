#include <doctest.h>

#include <sstream>

#include "antdoes/experiments.hpp"
#include "antdoes/report_io.hpp"

#include <json.hpp>

using namespace antdoes;

TEST_SUITE("experiments") {

TEST_CASE("median") {
    CHECK_FALSE(median({}).has_value());
    CHECK(*median({5}) == 5.0);
    CHECK(*median({9, 1, 4}) == 4.0);
    CHECK(*median({4, 1, 10, 3}) == 3.5);
}

TEST_CASE("seed derivation is a pure function of (base, value, trial)") {
    CHECK(derive_trial_seed(7, 10, 3) == derive_trial_seed(7, 10, 3));
    CHECK(derive_trial_seed(7, 10, 3) != derive_trial_seed(7, 10, 4));
    CHECK(derive_trial_seed(7, 10, 3) != derive_trial_seed(7, 11, 3));
    CHECK((derive_trial_seed(7, 10, 3) ^ derive_trial_seed(8, 10, 3)) == (7 ^ 8));
}

TEST_CASE("spec validation") {
    SweepSpec spec{parse_equation("x1^2 + x2^2 = 10125"), SweepAxis::ants, {}, 3, {}};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.axis_values = {10, 5};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.axis_values = {0, 5};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.axis_values = {5, 10};
    spec.trials_per_value = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.trials_per_value = 2;
    CHECK_NOTHROW(spec.validate());
    CHECK_THROWS_AS(parse_axis("ant"), std::invalid_argument);
    CHECK(parse_axis("neighbors") == SweepAxis::neighbors);
}

TEST_CASE("ants sweep shape") {
    ColonyConfig base;
    base.num_neighbors = 5;
    base.seed = 11;
    const SweepSpec spec{parse_equation("x1^2 + x2^2 = 10125"), SweepAxis::ants, {5, 10, 25}, 6, base};
    const SweepResult result = run_sweep(spec);
    REQUIRE(result.rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const SweepRow& row = result.rows[i];
        CHECK(row.value == spec.axis_values[i]);
        REQUIRE(row.trials.size() == 6);
        for (std::size_t t = 0; t < row.trials.size(); ++t) {
            CHECK(row.trials[t].trial == t);
            CHECK(row.trials[t].seed == derive_trial_seed(11, row.value, t));
        }
        CHECK(row.success_rate == 1.0);
        CHECK(row.median_iterations.has_value());
    }
}

TEST_CASE("neighbors sweep with a single value") {
    ColonyConfig base;
    base.seed = 3;
    const SweepSpec spec{parse_equation("x1^2 + 2x2^2 = 5400"), SweepAxis::neighbors, {10}, 4, base};
    const SweepResult result = run_sweep(spec);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].trials.size() == 4);
}

TEST_CASE("failed trials count against success rate and are left out of the median") {
    ColonyConfig base;
    base.max_iterations = 50;
    const SweepSpec spec{parse_equation("x1^2 + x2^2 = 3"), SweepAxis::ants, {1, 2}, 3, base};
    const SweepResult result = run_sweep(spec);
    for (const SweepRow& row : result.rows) {
        CHECK(row.success_rate == 0.0);
        CHECK_FALSE(row.median_iterations.has_value());
        for (const TrialResult& t : row.trials) {
            CHECK_FALSE(t.success);
            CHECK(t.iterations == 50);
        }
    }
    std::ostringstream summary;
    write_sweep_summary_csv(summary, result);
    CHECK(summary.str() == "axis,value,median_iterations,success_rate\nants,1,NA,0\nants,2,NA,0\n");
}

TEST_CASE("parallel sweep matches the serial reference") {
    ColonyConfig base;
    base.seed = 2;
    const SweepSpec spec{parse_equation("x1^2 + 2x2^2 = 5400"), SweepAxis::neighbors, {2, 5, 10}, 5, base};
    const SweepResult parallel = run_sweep(spec);
    const SweepResult serial = run_sweep_serial(spec);
    REQUIRE(parallel.rows.size() == serial.rows.size());
    for (std::size_t i = 0; i < parallel.rows.size(); ++i) {
        CHECK(parallel.rows[i].trials == serial.rows[i].trials);
        CHECK(parallel.rows[i].median_iterations == serial.rows[i].median_iterations);
    }
}

TEST_CASE("sweep CSV") {
    SweepResult result;
    result.axis = SweepAxis::neighbors;
    SweepRow row;
    row.value = 10;
    row.trials = {{10, 0, 99, 12, true}, {10, 1, 100, 500, false}};
    row.median_iterations = 12.0;
    row.success_rate = 0.5;
    result.rows.push_back(row);
    std::ostringstream trials, summary;
    write_sweep_csv(trials, result);
    write_sweep_summary_csv(summary, result);
    CHECK(trials.str() == "axis,value,trial,seed,iterations,success\nneighbors,10,0,99,12,1\nneighbors,10,1,100,500,0\n");
    CHECK(summary.str() == "axis,value,median_iterations,success_rate\nneighbors,10,12,0.5\n");
}

TEST_CASE("capture_trace") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 9000");
    ColonyConfig config;
    config.seed = 21;
    const auto trace = capture_trace(eq, config, 1);
    REQUIRE(trace.size() >= 2);
    CHECK(trace.front().iteration == 0);
    CHECK(trace.front().trail.empty());
    for (std::size_t i = 1; i < trace.size(); ++i)
        CHECK(trace[i].iteration == i);

    bool root_present = false;
    for (const Node& n : trace.back().ants)
        root_present = root_present || verify(eq, n);
    CHECK(root_present);

    std::ostringstream a, b;
    write_trace_csv(a, trace);
    write_trace_csv(b, capture_trace(eq, config, 1));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("iter,ant_id,coords\n0,0,\"", 0) == 0);
    CHECK(a.str().find("# trail iter=0\nnode_coords;pheromone;visits\n") != std::string::npos);
    CHECK_THROWS_AS(capture_trace(eq, config, 0), std::invalid_argument);
}

TEST_CASE("run report JSON schema") {
    RunReport report;
    report.equation = "x1^2 + x2^2 = 9000";
    report.config.seed = 42;
    report.solutions.push_back({Node{54, 78}, 17, 3});
    report.iterations_used = 17;
    const auto doc = nlohmann::ordered_json::parse(run_report_json(report));
    CHECK(doc["equation"] == "x1^2 + x2^2 = 9000");
    CHECK(doc["config"]["ants"] == 10);
    CHECK(doc["config"]["neighbors"] == 10);
    CHECK(doc["config"]["max_iterations"] == 100000);
    CHECK(doc["config"]["max_solutions"] == 1);
    CHECK(doc["config"]["seed"] == 42);
    CHECK(doc["solutions"][0]["coords"] == nlohmann::json::array({54, 78}));
    CHECK(doc["solutions"][0]["iteration"] == 17);
    CHECK(doc["solutions"][0]["ant"] == 3);
    CHECK(doc["iterations_used"] == 17);
    CHECK_FALSE(doc.contains("trace"));
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items())
        keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"equation", "config", "solutions", "iterations_used"});

    report.trace = std::vector<TraceSnapshot>{{0, {Node{1, 2}}, {{Node{1, 2}, TrailEntry{0.25, 1}}}}};
    const auto traced = nlohmann::json::parse(run_report_json(report));
    CHECK(traced["trace"][0]["ants"][0] == nlohmann::json::array({1, 2}));
    CHECK(traced["trace"][0]["trail"][0]["pheromone"] == 0.25);
    CHECK(traced["trace"][0]["trail"][0]["visits"] == 1);
}

}
