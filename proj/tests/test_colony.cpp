#include <doctest.h>

#include <set>

#include "antdoes/colony.hpp"
#include "antdoes/oracle.hpp"
#include "antdoes/search_space.hpp"

using namespace antdoes;

TEST_SUITE("colony") {

TEST_CASE("verify") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 9000");
    CHECK(verify(eq, Node{54, 78}));
    CHECK(verify(eq, Node{30, 90}));
    CHECK_FALSE(verify(eq, Node{1, 1}));
    CHECK_THROWS_AS(verify(eq, Node{54}), std::invalid_argument);
    // Arbitrary precision: no capacity limit on the check itself.
    CHECK_FALSE(verify(parse_equation("x1^40 = 5"), Node{3}));
}

TEST_CASE("config validation") {
    ColonyConfig c;
    CHECK_NOTHROW(c.validate());
    c.num_ants = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.max_solutions = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("step intercepts a solving neighbor without depositing on it") {
    const Equation eq = parse_equation("x1 = 2"); // p = 3, box {1,2,3}
    ColonyConfig config;
    config.num_neighbors = 1;
    int found = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomSource rng(seed);
        PheromoneTrail trail;
        std::vector<Ant> ants{Ant{Node{1}, {}}};
        const auto sol = step(eq, trail, ants, config, rng, 7);
        if (!sol)
            continue;
        ++found;
        CHECK(sol->node == Node{2});
        CHECK(sol->iteration_found == 7);
        CHECK(sol->ant_id == 0);
        CHECK_FALSE(trail.find(Node{2}).has_value());
        CHECK(ants[0].position == Node{2});
        CHECK(ants[0].path == std::vector<Node>{Node{1}});
    }
    CHECK(found > 0);
}

TEST_CASE("step reports an ant already sitting on a root") {
    const Equation eq = parse_equation("x1 + x2 = 4");
    RandomSource rng(1);
    PheromoneTrail trail;
    std::vector<Ant> ants{Ant{Node{2, 2}, {}}, Ant{Node{3, 3}, {}}};
    ColonyConfig config;
    config.num_neighbors = 1;
    const auto sol = step(eq, trail, ants, config, rng, 1);
    REQUIRE(sol.has_value());
    CHECK(sol->node == Node{2, 2});
    CHECK(sol->ant_id == 0);
    CHECK(ants[1].position == Node{3, 3});
}

TEST_CASE("local minimum with empty path re-randomizes and erases") {
    // x1^2 + x2^2 = 3 has no positive roots; (1,1) at fitness 1 is the box minimum.
    const Equation eq = parse_equation("x1^2 + x2^2 = 3");
    RandomSource rng(3);
    PheromoneTrail trail;
    trail.land(Node{1, 1}, Fitness{1});
    std::vector<Ant> ants{Ant{Node{1, 1}, {}}};
    ColonyConfig config;
    CHECK_FALSE(step(eq, trail, ants, config, rng, 1).has_value());
    CHECK(trail.find(Node{1, 1})->pheromone == 0.0);
    CHECK(ants[0].path.empty());
    for (auto c : ants[0].position.coords())
        CHECK((c >= 1 && c <= 2));
}

TEST_CASE("local minimum with a path backtracks") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 3");
    RandomSource rng(3);
    PheromoneTrail trail;
    trail.land(Node{1, 1}, Fitness{1});
    std::vector<Ant> ants{Ant{Node{1, 1}, {Node{2, 1}, Node{2, 2}}}};
    CHECK_FALSE(step(eq, trail, ants, ColonyConfig{}, rng, 1).has_value());
    CHECK(ants[0].position == Node{2, 2});
    CHECK(ants[0].path == std::vector<Node>{Node{2, 1}});
    CHECK(trail.find(Node{1, 1})->pheromone == 0.0);
}

TEST_CASE("improving ants move and deposit") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 9000");
    RandomSource rng(17);
    PheromoneTrail trail;
    std::vector<Ant> ants{Ant{Node{1, 1}, {}}};
    CHECK_FALSE(step(eq, trail, ants, ColonyConfig{}, rng, 1).has_value());
    CHECK(ants[0].path == std::vector<Node>{Node{1, 1}});
    const auto entry = trail.find(ants[0].position);
    REQUIRE(entry.has_value());
    CHECK(entry->visits == 1);
    CHECK(entry->pheromone == base_deposit(fitness(eq, ants[0].position)));
}

TEST_CASE("step is deterministic") {
    const Equation eq = parse_equation("x1^2 + x2^2 + x3^2 = 2445");
    auto run = [&] {
        RandomSource rng(99);
        PheromoneTrail trail;
        auto ants = place_ants(eq, 10, rng);
        ColonyConfig config;
        for (std::uint64_t it = 1; it <= 5; ++it)
            step(eq, trail, ants, config, rng, it);
        std::vector<Node> positions;
        for (const Ant& a : ants)
            positions.push_back(a.position);
        return std::make_pair(positions, trail.sorted_entries());
    };
    const auto a = run();
    const auto b = run();
    CHECK(a.first == b.first);
    REQUIRE(a.second.size() == b.second.size());
    for (std::size_t i = 0; i < a.second.size(); ++i) {
        CHECK(a.second[i].first == b.second[i].first);
        CHECK(a.second[i].second == b.second[i].second);
    }
}

TEST_CASE("solve finds a root of the sum of squares") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 9000");
    ColonyConfig config;
    config.seed = 42;
    const RunReport report = solve(eq, config);
    REQUIRE(report.solutions.size() == 1);
    CHECK(verify(eq, report.solutions[0].node));
    CHECK(report.iterations_used == report.solutions[0].iteration_found);
    CHECK(report.equation == "x1^2 + x2^2 = 9000");
    CHECK_FALSE(report.trace.has_value());
}

TEST_CASE("solve collects distinct verified roots") {
    const Equation eq = parse_equation("x1^2 + x2^2 + x3^2 = 2445");
    ColonyConfig config;
    config.seed = 5;
    config.max_solutions = 10;
    const RunReport report = solve(eq, config);
    REQUIRE(report.solutions.size() == 10);
    std::set<Node> seen;
    for (const Solution& s : report.solutions) {
        CHECK(verify(eq, s.node));
        seen.insert(s.node);
    }
    CHECK(seen.size() == 10);
    for (std::size_t i = 1; i < report.solutions.size(); ++i)
        CHECK(report.solutions[i - 1].iteration_found < report.solutions[i].iteration_found);
}

TEST_CASE("solve spends the whole budget on an unsolvable equation") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 3");
    REQUIRE(enumerate(eq).solutions.empty());
    ColonyConfig config;
    config.max_iterations = 10000;
    const RunReport report = solve(eq, config);
    CHECK(report.solutions.empty());
    CHECK(report.iterations_used == 10000);
}

TEST_CASE("repeated roots are recorded once") {
    // Only one root in the box, so every capture after the first is a repeat.
    const Equation eq = parse_equation("x1 + x2 = 2");
    ColonyConfig config;
    config.max_solutions = 3;
    config.max_iterations = 300;
    const RunReport report = solve(eq, config);
    REQUIRE(report.solutions.size() == 1);
    CHECK(report.solutions[0].node == Node{1, 1});
    CHECK(report.iterations_used == 300);
}

TEST_CASE("trace snapshots") {
    const Equation eq = parse_equation("x1^2 + x2^2 = 9000");
    ColonyConfig config;
    config.seed = 8;
    const RunReport report = solve(eq, config, SolveOptions{2});
    REQUIRE(report.trace.has_value());
    const auto& trace = *report.trace;
    CHECK(trace.front().iteration == 0);
    CHECK(trace.front().ants.size() == 10);
    CHECK(trace.front().trail.empty());
    CHECK(trace.back().iteration == report.iterations_used);
    const auto& last = trace.back().ants;
    CHECK(std::find(last.begin(), last.end(), report.solutions.front().node) != last.end());
}

TEST_CASE("property: backtracking after forced local minima") {
    // Unsolvable equations; the ant starts on the box minimum, so no neighbor
    // can improve and every step must backtrack.
    RandomSource gen(606);
    int cases = 0;
    int equations = 0;
    while (cases < 10000) {
        const std::int64_t a = gen.uniform_int(1, 4), b = gen.uniform_int(1, 4);
        const Equation eq({{a, 1, 2}, {b, 2, gen.uniform_int(1, 3)}}, gen.uniform_int(2, 700));
        if (!enumerate(eq).solutions.empty())
            continue;
        ++equations;
        const std::int64_t p = bound_p(eq);
        Node best;
        Fitness best_f{INT64_MAX};
        for (std::int64_t x = 1; x <= p; ++x)
            for (std::int64_t y = 1; y <= p; ++y)
                if (const Fitness f = fitness(eq, Node{x, y}); f < best_f) {
                    best_f = f;
                    best = Node{x, y};
                }
        for (int rep = 0; rep < 100; ++rep, ++cases) {
            RandomSource rng(gen.next_u64());
            PheromoneTrail trail;
            trail.land(best, best_f);
            Ant ant{best, {}};
            const auto depth = gen.uniform_int(1, 5);
            for (std::int64_t d = 0; d < depth; ++d)
                ant.path.push_back(random_node(eq, rng));
            const Node top = ant.path.back();
            const std::size_t before = ant.path.size();
            std::vector<Ant> ants{ant};
            ColonyConfig config;
            config.num_neighbors = static_cast<std::size_t>(gen.uniform_int(1, 12));
            REQUIRE_FALSE(step(eq, trail, ants, config, rng, 1).has_value());
            REQUIRE(ants[0].position == top);
            REQUIRE(ants[0].path.size() == before - 1);
            REQUIRE(trail.find(best)->pheromone == 0.0);
        }
    }
    CHECK(equations > 0);
}

}
