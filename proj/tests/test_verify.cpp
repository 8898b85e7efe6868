#include <catch2/catch_amalgamated.hpp>

#include "ramsey/serialize.hpp"
#include "ramsey/verify.hpp"

#include <sstream>

using namespace ramsey;

TEST_CASE("exhaustive 6-vertex sweep") {
    SuiteReport rep = exhaustive_sweep_n6();
    for (const SuiteFailure& f : rep.failures) {
        INFO(f.instance << ": " << f.detail);
        REQUIRE(false);
    }
    REQUIRE(rep.instances == 32768);
    REQUIRE(rep.ok());
}

TEST_CASE("property suites by family") {
    auto expect_clean = [](const SuiteReport& rep) {
        for (const SuiteFailure& f : rep.failures) {
            INFO(f.instance << ": " << f.detail << "\n" << f.coloring);
            REQUIRE(false);
        }
        REQUIRE(rep.instances > 0);
    };
    expect_clean(run_property_suite("random", {4, 7, 8}, {1, 2}));
    expect_clean(run_property_suite("paley", {5, 13}, {}));
    expect_clean(run_property_suite("cycle", {5, 6, 7}, {}));
    expect_clean(run_property_suite("clique_union", {6}, {}));
    expect_clean(run_property_suite("join", {8}, {1}));
    REQUIRE_THROWS_AS(run_property_suite("mystery", {4}, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(run_property_suite("join", {4}, {1}), std::invalid_argument);
}

TEST_CASE("named suites") {
    SuiteReport rep = run_suite("fast");
    REQUIRE(rep.ok());
    REQUIRE(rep.suite == "fast");
    REQUIRE(rep.instances > 30);
    REQUIRE_THROWS_AS(run_suite("unheard_of"), std::invalid_argument);

    SECTION("reports are deterministic") {
        SuiteReport again = run_suite("fast");
        REQUIRE(suite_report_json(rep).dump() == suite_report_json(again).dump());
    }
    SECTION("json shape") {
        nlohmann::json j = suite_report_json(rep);
        REQUIRE(j["suite"] == "fast");
        REQUIRE(j["ok"] == true);
        REQUIRE(j["failures"].is_array());
        REQUIRE_FALSE(j.contains("wall_ms"));
        REQUIRE(suite_report_json(rep, true).contains("wall_ms"));
    }
}

TEST_CASE("failure records carry a replayable coloring") {
    SuiteReport rep;
    detail::Checker c{rep, cycle_coloring(5), "probe"};
    c.require(false, "synthetic");
    REQUIRE(rep.failures.size() == 1);
    REQUIRE(rep.failures[0].instance == "probe");
    REQUIRE(read_coloring(rep.failures[0].coloring) == cycle_coloring(5));
    REQUIRE_FALSE(rep.ok());
}

TEST_CASE("profile json") {
    nlohmann::json j = profile_json(count_profile(cycle_coloring(5)));
    REQUIRE(j["n"] == 5);
    REQUIRE(j["convention"]["singleton_mode"] == "both");
    REQUIRE(j["convention"]["include_empty"] == false);
    REQUIRE(j["red"] == std::vector<std::string>({"0", "5", "5", "0", "0", "0"}));
    REQUIRE(j["blue"] == std::vector<std::string>({"0", "5", "5", "0", "0", "0"}));
    REQUIRE(j["total"] == "20");
    REQUIRE(j["average"] == "3/2");
    REQUIRE(j["max_size"] == 2);

    nlohmann::json jb = profile_json(
        count_profile(cycle_coloring(5), Convention{Convention::Singletons::BlueOnly, true}));
    REQUIRE(jb["convention"]["singleton_mode"] == "blue_only");
    REQUIRE(jb["convention"]["include_empty"] == true);
}

TEST_CASE("tree csv output") {
    SECTION("general tree") {
        std::ostringstream os;
        grt_csv(grt_level_counts(clique_union_coloring(1, 3), 2), os);
        REQUIRE(os.str() == "level,node_count\n0,3\n1,6\n2,6\n");
    }
    SECTION("restricted tree") {
        std::ostringstream os;
        rrt_csv(build_rrt(clique_union_coloring(1, 4), BiasSchedule::constant(Rat(1, 2))), os);
        REQUIRE(os.str() ==
                "level,color,q,bag_size,node_count\n"
                "0,R,1/2,2,4\n"
                "1,R,1/2,1,8\n"
                "2,R,1/2,0,8\n");
    }
}

TEST_CASE("bound json") {
    nlohmann::json j =
        bound_json("thm_lower_size_t", {{"t", 3}}, thm_lower_size_t(3));
    REQUIRE(j["formula"] == "thm_lower_size_t");
    REQUIRE(j["params"]["t"] == 3);
    REQUIRE(j["value"] == "1/3");
    REQUIRE(j["mode"] == "exact");
    nlohmann::json ja = bound_json("entropy", {{"x", "0.5"}}, binary_entropy(Real(1) / 2));
    REQUIRE(ja["mode"] == "approx");
}

TEST_CASE("figure csv") {
    std::ostringstream os;
    figure_csv(Rat(1, 2), os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    REQUIRE(line == "c,g1,g2");
    std::vector<std::string> rows;
    while (std::getline(is, line)) rows.push_back(line);
    REQUIRE(rows.size() == 5);  // c = 0, 0.5, 1, 1.5, 2
    REQUIRE(rows[0].substr(0, 2) == "0,");
    REQUIRE(rows[2].substr(0, 2) == "1,");
    // g1 vanishes past 1/2; g2 peaks at 1/2 when c = 1
    REQUIRE(rows[2].find(",0,0.5") != std::string::npos);
    REQUIRE(rows[4].find(",0,0") != std::string::npos);
    REQUIRE_THROWS_AS(figure_csv(Rat(0), std::cout), std::invalid_argument);

    SECTION("byte-identical across runs") {
        std::ostringstream again;
        figure_csv(Rat(1, 2), again);
        REQUIRE(os.str() == again.str());
    }
}
