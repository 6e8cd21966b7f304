#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "montesinos/serialization.hpp"

using namespace montesinos;
using nlohmann::json;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "."
#endif

namespace {

MontesinosKnot make(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2,
                    std::int64_t p3, std::int64_t q3) {
    return normalize({Rational(p1, q1), Rational(p2, q2), Rational(p3, q3)});
}

json load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

} // namespace

TEST_CASE("knot JSON round trip") {
    MontesinosKnot k = make(7, 3, 1, 4, 2, 5);
    json j = knot_to_json(k);
    CHECK(j["e0"] == 2);
    CHECK(j["tangles"][0][0] == 1);
    CHECK(j["tangles"][0][1] == 3);
    CHECK(knot_from_json(j) == k);
    CHECK_THROWS_AS(knot_from_json(json{{"tangles", {{1, 3}, {1, 4}}}}), TangleError);
}

TEST_CASE("certificate JSON carries pi units and num/den strings") {
    Certificate cert;
    cert.alpha_bar = {Rational(2, 3), Rational(2, 3), Rational(2, 3)};
    cert.beta_bar = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    cert.regime = "thm1.1-A";
    json j = certificate_to_json(cert);
    CHECK(j["units"] == "pi");
    CHECK(j["alpha_bar"][0] == "2/3");
    CHECK(j["regime"] == "thm1.1-A");
    Certificate back = certificate_from_json(j);
    CHECK(back.alpha_bar == cert.alpha_bar);
    CHECK(back.beta_bar == cert.beta_bar);
    CHECK(back.regime == cert.regime);

    json solver = j;
    solver["regime"] = nullptr;
    CHECK_FALSE(certificate_from_json(solver).regime.has_value());
    json bad = j;
    bad["units"] = "radians";
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
}

TEST_CASE("classification JSON row shape") {
    MontesinosKnot k = make(1, 2, 1, 5, 1, 5);
    Classification cls = classify(k);
    json row = classification_to_json(k, cls);
    CHECK(row["verdict"] == "family");
    CHECK(row["family"] == 4);
    CHECK(row["certificate"].is_null());
    CHECK(row["certificate_source"].is_null());
    CHECK(row["disclaimer"] == "assumes K hyperbolic");
    CHECK(row["farkas"]["multipliers"].is_array());

    MontesinosKnot c = make(1, 4, 1, 5, 2, 5);
    json crow = classification_to_json(c, classify(c));
    CHECK(crow["verdict"] == "certified");
    CHECK(crow["certificate_source"] == "preset");
    CHECK(crow["certificate"]["units"] == "pi");
    CHECK(crow["family"].is_null());
}

TEST_CASE("anomaly rows surface the note and evidence") {
    MontesinosKnot k = make(1, 2, 1, 5, 1, 5);
    Classification cls;
    cls.kind = VerdictKind::Anomaly;
    cls.note = "angle system infeasible but no residual family matches";
    cls.farkas = *solve_angle_system(k).farkas;
    json row = classification_to_json(k, cls);
    CHECK(row["verdict"] == "anomaly");
    CHECK(row["family"].is_null());
    CHECK(row["certificate"].is_null());
    CHECK(row["note"] == cls.note);
    CHECK(row["farkas"]["multipliers"].is_array());
}

TEST_CASE("graph fixtures parse and check out") {
    GeneralizedGraph tetra = graph_from_json(load_fixture("tetrahedron.json"));
    GraphReport r = graph_euler_check(tetra);
    CHECK(r.sum_e == Rational(2));
    CHECK(r.equality);
    CHECK(validate_graph(tetra, 1).empty());

    GeneralizedGraph torus = graph_from_json(load_fixture("torus_grid.json"));
    GraphReport rt = graph_euler_check(torus);
    CHECK(rt.sum_e == Rational(0));
    CHECK(rt.chi_surface == 0);
    CHECK(rt.equality);

    GeneralizedGraph bumped = graph_from_json(load_fixture("perturbed_tetrahedron.json"));
    GraphReport rb = graph_euler_check(bumped);
    CHECK(rb.sum_e == Rational(13, 6));
    CHECK_FALSE(rb.equality);
}

TEST_CASE("graph JSON schema errors name the field") {
    json g = load_fixture("tetrahedron.json");
    g["faces"][0]["corners"][0].erase("angle");
    CHECK_THROWS_WITH_AS(graph_from_json(g), "faces[0].corners[0]: missing \"angle\"",
                         GraphError);
    json g2 = load_fixture("tetrahedron.json");
    g2["faces"][0]["corners"][0]["angle"] = 0.5;
    CHECK_THROWS_AS(graph_from_json(g2), GraphError);
    json g3 = load_fixture("tetrahedron.json");
    g3["vertices"][0]["kind"] = "medium";
    CHECK_THROWS_WITH_AS(graph_from_json(g3),
                         "vertices[0].kind: expected \"small\" or \"large\"", GraphError);
}

TEST_CASE("graph JSON round trip") {
    GeneralizedGraph tetra = graph_from_json(load_fixture("tetrahedron.json"));
    GeneralizedGraph again = graph_from_json(graph_to_json(tetra));
    GraphReport a = graph_euler_check(tetra), b = graph_euler_check(again);
    CHECK(a.sum_e == b.sum_e);
    CHECK(a.chi_surface == b.chi_surface);
}

TEST_CASE("farkas and cross-check JSON") {
    MontesinosKnot k = make(1, 2, 1, 5, 1, 5);
    FeasibilityResult r = solve_angle_system(k);
    REQUIRE_FALSE(r.feasible());
    json fj = farkas_to_json(*r.farkas);
    CHECK(fj["multipliers"].size() == r.farkas->multipliers.size());
    CHECK(fj.contains("strict"));

    json cj = cross_check_to_json(k, cross_check(k));
    CHECK(cj["solver_feasible"] == false);
    CHECK(cj["preset"].is_null());

    MontesinosKnot k2 = make(1, 3, 1, 3, 3, 7);
    json cj2 = cross_check_to_json(k2, cross_check(k2));
    REQUIRE(cj2["small_pbar_decompositions"].size() == 1);
    CHECK(cj2["small_pbar_decompositions"][0]["value"] == "3/7");
}
