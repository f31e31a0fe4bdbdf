#include <homex/verify.hpp>

#include <catch_amalgamated.hpp>

using namespace homex;

TEST_CASE("target descriptions and the exhaustive small-target scan")
{
    REQUIRE(verify::describe_target(families::h_ind()) == "n=2;0-0;0-1");

    auto targets = verify::connected_nonregular_targets(3);
    REQUIRE(! targets.empty());
    for (const auto & [name, h] : targets) {
        INFO(name);
        REQUIRE(h.vertex_count() <= 3);
        REQUIRE(is_connected(h));
        REQUIRE_FALSE(is_regular(h));
    }
    // The looped edge is the unique two-vertex member.
    int two_vertex = 0;
    for (const auto & [name, h] : targets)
        two_vertex += h.vertex_count() == 2 ? 1 : 0;
    REQUIRE(two_vertex == 1);

    // Scans of growing width nest.
    REQUIRE(verify::connected_nonregular_targets(4).size() > targets.size());
}

TEST_CASE("report aggregation and serialization")
{
    verify::Report report;
    report.target = "demo";
    report.add({"first", true, {}});
    REQUIRE(report.pass);
    report.add({"second", false, {{"detail", 3}}});
    REQUIRE_FALSE(report.pass);

    auto json = report.to_json();
    REQUIRE(json["target"] == "demo");
    REQUIRE(json["pass"] == false);
    REQUIRE(json["cases"].size() == 2);
    REQUIRE(json["cases"][0]["pass"] == true);
    REQUIRE(json["cases"][1]["details"]["detail"] == 3);
}

TEST_CASE("experiment drivers pass on their reference inputs")
{
    auto targets = verify::connected_nonregular_targets(3);

    verify::Report path = verify::verify_lemma_path(targets, 2, 200);
    REQUIRE(path.pass);
    REQUIRE(path.cases.size() == targets.size() + 1);   // including the worked threshold value

    verify::Report endpoint = verify::verify_lemma_endpoint(targets, 4, 8);
    REQUIRE(endpoint.pass);
    // All scan targets plus the two refusal checks.
    REQUIRE(endpoint.cases.size() == targets.size() + 2);

    verify::Report eq1 = verify::verify_eq1({{2, 6}}, targets);
    REQUIRE(eq1.pass);

    verify::Report thm2 = verify::verify_thm2({{2, 6}}, 50);
    REQUIRE(thm2.pass);

    verify::Report edge = verify::verify_edge_add({{2, 6}}, targets);
    REQUIRE(edge.pass);

    verify::Report cnk4 = verify::verify_cn_k4(6);
    REQUIRE(cnk4.pass);

    verify::Report thm1 = verify::verify_thm1({6});
    REQUIRE(thm1.pass);
}

TEST_CASE("the path-growth driver reports failure on an impossible horizon")
{
    auto targets = verify::connected_nonregular_targets(2);   // just the looped edge
    // The looped edge needs ell = 8, so a horizon of 5 cannot confirm it.
    verify::Report report = verify::verify_lemma_path(targets, 2, 5);
    REQUIRE_FALSE(report.pass);
}

TEST_CASE("default grids stay in sync with the documented experiments")
{
    REQUIRE(verify::default_eq1_grid().size() == 4);
    REQUIRE(verify::default_edge_add_grid().size() == 3);
    REQUIRE(verify::default_thm2_grid().size() == 3);
    REQUIRE(verify::default_thm1_ns() == std::vector<int>{6, 7, 8});
}
