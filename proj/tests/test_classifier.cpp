#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "montesinos/classifier.hpp"
#include "montesinos/enumerate.hpp"

using namespace montesinos;

namespace {

MontesinosKnot make(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2,
                    std::int64_t p3, std::int64_t q3) {
    return normalize({Rational(p1, q1), Rational(p2, q2), Rational(p3, q3)});
}

} // namespace

TEST_CASE("family_match on documented knots") {
    auto f1 = family_match(make(1, 3, 1, 4, 1, 5));
    REQUIRE(f1.has_value());
    CHECK(f1->family == 1);

    auto f4 = family_match(make(1, 2, 1, 5, 1, 5));
    REQUIRE(f4.has_value());
    CHECK(f4->family == 4);

    CHECK_FALSE(family_match(make(1, 3, 1, 4, 2, 5)).has_value());
}

TEST_CASE("family patterns respect mirrors") {
    auto f = family_match(make(-1, 3, -1, 4, -1, 5));
    REQUIRE(f.has_value());
    CHECK(f->family == 1);
    CHECK(f->element.mirrored);

    auto f3 = family_match(make(1, 2, -2, 5, -3, 7));
    REQUIRE(f3.has_value());
    CHECK(f3->family == 3);
}

TEST_CASE("family 2 requires small pbar on the free tangle") {
    auto yes = family_match(make(1, 3, 1, 3, 3, 7));  // pbar(3,7) = 2
    REQUIRE(yes.has_value());
    CHECK(yes->family == 2);
    CHECK_FALSE(family_match(make(1, 3, 1, 3, 2, 7)).has_value());  // a link anyway
    auto no = family_match(make(1, 3, 1, 3, 5, 7));  // |pbar| = 3
    CHECK_FALSE(no.has_value());
}

TEST_CASE("classify certifies via preset, solver, or reports the family") {
    Classification a = classify(make(1, 4, 1, 5, 2, 5));
    CHECK(a.kind == VerdictKind::Certified);
    CHECK(a.source == CertificateSource::Preset);
    REQUIRE(a.certificate.has_value());
    CHECK(a.certificate->regime == "thm1.1-A");
    CHECK(verify_certificate(make(1, 4, 1, 5, 2, 5), *a.certificate).empty());

    Classification b = classify(make(1, 2, 1, 5, 1, 5));
    CHECK(b.kind == VerdictKind::Family);
    REQUIRE(b.family.has_value());
    CHECK(b.family->family == 4);
    REQUIRE(b.farkas.has_value());
    CHECK(check_farkas(build_angle_system(make(1, 2, 1, 5, 1, 5)), *b.farkas));

    Classification c = classify(make(1, 3, 1, 3, 5, 7));
    CHECK(c.kind == VerdictKind::Certified);
    CHECK(c.source == CertificateSource::Preset);
    CHECK(c.certificate->regime == "thm8.2-case2");

    // No preset covers (2,5,7) with both pbar magnitudes above 1, but the
    // solver still finds angles.
    Classification d = classify(make(1, 2, 2, 5, 2, 7));
    CHECK(d.kind == VerdictKind::Certified);
    CHECK(d.source == CertificateSource::Solver);

    CHECK_THROWS_AS(classify(make(1, 3, 1, 3, 2, 7)), TangleError);
}

TEST_CASE("enumeration at q_bound 5") {
    RunConfig config;
    config.q_bound = 5;
    EnumResult result = enumerate_and_classify_serial(config);
    CHECK(result.summary.anomaly == 0);
    CHECK(result.summary.knots == result.rows.size());

    std::size_t seen_target = 0;
    for (const auto& row : result.rows) {
        REQUIRE(row.classification.has_value());
        if (sum_condition(row.knot))
            CHECK(row.classification->kind == VerdictKind::Certified);
        if (row.knot == make(1, 2, 1, 5, 1, 5))
            ++seen_target;
    }
    CHECK(seen_target == 1);
}

TEST_CASE("parallel enumeration matches the serial reference") {
    RunConfig config;
    config.q_bound = 6;
    config.include_links = true;
    EnumResult serial = enumerate_and_classify_serial(config);
    config.parallelism = 3;
    EnumResult parallel = enumerate_and_classify(config);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].knot == parallel.rows[i].knot);
        CHECK(serial.rows[i].components == parallel.rows[i].components);
        bool sc = serial.rows[i].classification.has_value();
        bool pc = parallel.rows[i].classification.has_value();
        REQUIRE(sc == pc);
        if (!sc) continue;
        CHECK(serial.rows[i].classification->kind == parallel.rows[i].classification->kind);
        CHECK(serial.rows[i].classification->source == parallel.rows[i].classification->source);
    }
    CHECK(serial.summary.anomaly == parallel.summary.anomaly);
    CHECK(serial.summary.links > 0);
}

TEST_CASE("links are excluded unless asked for") {
    RunConfig config;
    config.q_bound = 4;
    EnumResult noLinks = enumerate_and_classify_serial(config);
    for (const auto& row : noLinks.rows)
        CHECK(row.components == 1);
    config.include_links = true;
    EnumResult withLinks = enumerate_and_classify_serial(config);
    CHECK(withLinks.summary.links > 0);
    CHECK(withLinks.summary.knots == noLinks.summary.knots);
    for (const auto& row : withLinks.rows)
        if (row.components != 1)
            CHECK_FALSE(row.classification.has_value());
}

TEST_CASE("every orbit representative has q-sorted tangles and zero e0") {
    for (const auto& knot : canonical_orbit_reps(6)) {
        CHECK(knot.e0 == 0);
        for (int i = 0; i + 1 < 3; ++i) {
            bool sorted = knot.tangles[i].q < knot.tangles[i + 1].q ||
                          (knot.tangles[i].q == knot.tangles[i + 1].q &&
                           knot.tangles[i].p <= knot.tangles[i + 1].p);
            CHECK(sorted);
        }
    }
}

TEST_CASE("mirror orbits are deduplicated") {
    auto reps = canonical_orbit_reps(5);
    for (const auto& knot : reps) {
        MontesinosKnot m = mirror(knot);
        m.e0 = 0;
        if (m == knot) continue;
        for (const auto& other : reps)
            CHECK_FALSE(other == m);
    }
}

TEST_CASE("cross_check reports agreement and decompositions") {
    CrossCheckReport r = cross_check(make(1, 3, 1, 4, 2, 5));
    CHECK(r.preset_regime == "thm8.2-case1");
    CHECK(r.solver_feasible);
    CHECK(r.preset_implies_feasible);
    CHECK(r.orbit_feasibility_uniform);
    REQUIRE(r.small_pbar_decompositions.size() == 1);
    CHECK(r.small_pbar_decompositions[0].second.reconstructed == Rational(2, 5));

    CrossCheckReport inf = cross_check(make(1, 2, 1, 5, 1, 5));
    CHECK_FALSE(inf.preset_regime.has_value());
    CHECK_FALSE(inf.solver_feasible);
    CHECK(inf.orbit_feasibility_uniform);

    CrossCheckReport f2 = cross_check(make(1, 3, 1, 3, 3, 7));
    REQUIRE(f2.small_pbar_decompositions.size() == 1);
    const PartialFractionForm& form = f2.small_pbar_decompositions[0].second;
    CHECK(form.n == 0);
    CHECK(form.m == 3);
    CHECK(form.reconstructed == Rational(3, 7));
}

TEST_CASE("a preset match implies solver feasibility") {
    for (const auto& knot : canonical_orbit_reps(7)) {
        if (!is_knot(knot)) continue;
        if (preset_for(knot))
            CHECK(solve_angle_system(knot).feasible());
    }
}

TEST_CASE("verdicts are orbit invariant on a random sample") {
    std::mt19937 rng(88);
    auto tangles = canonical_tangles(9);
    std::uniform_int_distribution<std::size_t> pick(0, tangles.size() - 1);
    int tested = 0;
    while (tested < 25) {
        MontesinosKnot knot;
        knot.tangles = {tangles[pick(rng)], tangles[pick(rng)], tangles[pick(rng)]};
        std::array<Rational, 3> slopes;
        for (int i = 0; i < 3; ++i)
            slopes[i] = Rational(knot.tangles[i].p, knot.tangles[i].q);
        knot = normalize(slopes);
        if (!is_knot(knot)) continue;
        ++tested;
        Classification base = classify(knot);
        for (const auto& elem : orbit_elements(knot)) {
            std::array<Rational, 3> s2;
            for (int i = 0; i < 3; ++i)
                s2[i] = Rational(elem.tangles[i].p, elem.tangles[i].q);
            Classification image = classify(normalize(s2));
            CHECK(image.kind == base.kind);
            bool bf = base.family.has_value(), imf = image.family.has_value();
            CHECK(bf == imf);
            if (bf && imf) CHECK(base.family->family == image.family->family);
            CHECK(base.source == image.source);
        }
    }
}
