#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "montesinos/linear_system.hpp"
#include "oracles.hpp"

using namespace montesinos;

namespace {

LinearSystem two_vars() {
    LinearSystem sys;
    sys.variables = {"x", "y"};
    return sys;
}

} // namespace

TEST_CASE("fm_eliminate projects a simple pair") {
    LinearSystem sys = two_vars();
    sys.add({Rational(1), Rational(1)}, Relation::LE, Rational(1), "x+y<=1");
    sys.add({Rational(1), Rational(0)}, Relation::GE, Rational(0), "x>=0");
    LinearSystem proj = fm_eliminate(sys, std::size_t{0});
    REQUIRE(proj.variables == std::vector<std::string>{"y"});
    REQUIRE(proj.constraints.size() == 1);
    CHECK(proj.constraints[0].coeffs[0] == Rational(1));
    CHECK(proj.constraints[0].rhs == Rational(1));
    CHECK(proj.constraints[0].rel == Relation::LE);
}

TEST_CASE("fm_eliminate exposes a strict contradiction") {
    LinearSystem sys;
    sys.variables = {"x"};
    sys.add({Rational(1)}, Relation::GT, Rational(0), "x>0");
    sys.add({Rational(1)}, Relation::LT, Rational(0), "x<0");
    LinearSystem proj = fm_eliminate(sys, std::size_t{0});
    REQUIRE(proj.constraints.size() == 1);
    CHECK(proj.constraints[0].is_constant());
    CHECK(proj.constraints[0].rel == Relation::LT);
    CHECK(proj.constraints[0].rhs == Rational(0));  // 0 < 0
    CHECK(proj.constraints[0].is_contradiction());
}

TEST_CASE("fm_eliminate reproduces the first step of a q=2 chain") {
    LinearSystem sys = two_vars();
    sys.variables = {"a1", "b1"};
    sys.add({Rational(1), Rational(0)}, Relation::LE, Rational(1), "a1<=1");
    sys.add({Rational(1), Rational(2)}, Relation::GE, Rational(2), "a1+2b1>=2");
    LinearSystem proj = fm_eliminate(sys, std::size_t{0});
    REQUIRE(proj.constraints.size() == 1);
    // 2b1 >= 1, normalized to -b1 <= -1/2.
    CHECK(proj.constraints[0].coeffs[0] == Rational(-1));
    CHECK(proj.constraints[0].rhs == Rational(-1, 2));
}

TEST_CASE("derived constraints carry multipliers that replay exactly") {
    LinearSystem sys = two_vars();
    sys.add({Rational(2), Rational(3)}, Relation::LE, Rational(5), "c0");
    sys.add({Rational(-1), Rational(1)}, Relation::LT, Rational(2), "c1");
    sys.add({Rational(0), Rational(1)}, Relation::GE, Rational(0), "c2");
    LinearSystem norm = normalized(sys);
    LinearSystem proj = fm_eliminate(sys, std::size_t{0});
    for (const auto& c : proj.constraints) {
        if (c.origin.empty()) continue;
        Rational rhs;
        std::vector<Rational> combo(2);
        bool strict = false;
        for (const auto& [idx, mult] : c.origin) {
            CHECK(mult > Rational(0));
            for (std::size_t j = 0; j < 2; ++j)
                combo[j] += mult * norm.constraints[idx].coeffs[j];
            rhs += mult * norm.constraints[idx].rhs;
            strict = strict || norm.constraints[idx].rel == Relation::LT;
        }
        CHECK(combo[0] == Rational(0));  // x eliminated
        CHECK(combo[1] == c.coeffs[0]);
        CHECK(rhs == c.rhs);
        CHECK(strict == (c.rel == Relation::LT));
    }
}

TEST_CASE("solve picks the midpoint of a half-open interval") {
    LinearSystem sys;
    sys.variables = {"x"};
    sys.add({Rational(1)}, Relation::GT, Rational(0), "x>0");
    sys.add({Rational(1)}, Relation::LE, Rational(1), "x<=1");
    SolveResult r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] == Rational(1, 2));
}

TEST_CASE("solve handles equalities and unbounded directions") {
    LinearSystem sys = two_vars();
    sys.add({Rational(1), Rational(1)}, Relation::EQ, Rational(3), "x+y=3");
    sys.add({Rational(1), Rational(0)}, Relation::GE, Rational(1), "x>=1");
    SolveResult r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] + r.witness[1] == Rational(3));
    CHECK(r.witness[0] >= Rational(1));

    LinearSystem bad = two_vars();
    bad.add({Rational(1), Rational(1)}, Relation::EQ, Rational(3), "x+y=3");
    bad.add({Rational(1), Rational(1)}, Relation::GT, Rational(3), "x+y>3");
    SolveResult rb = solve(bad);
    CHECK_FALSE(rb.feasible);
    CHECK(check_farkas(bad, rb.farkas));
}

TEST_CASE("check_farkas rejects junk") {
    LinearSystem sys;
    sys.variables = {"x"};
    sys.add({Rational(1)}, Relation::LE, Rational(1), "x<=1");
    sys.add({Rational(-1)}, Relation::LE, Rational(-2), "x>=2");
    SolveResult r = solve(sys);
    REQUIRE_FALSE(r.feasible);
    REQUIRE(check_farkas(sys, r.farkas));

    FarkasWitness w = r.farkas;
    w.multipliers[0].second = -w.multipliers[0].second;
    CHECK_FALSE(check_farkas(sys, w));

    FarkasWitness empty;
    CHECK_FALSE(check_farkas(sys, empty));

    FarkasWitness wrong;
    wrong.multipliers = {{0, Rational(1)}};  // does not cancel x
    CHECK_FALSE(check_farkas(sys, wrong));
}

TEST_CASE("projection is sound and complete on random systems") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> numer(-12, 12);
    const std::array<int, 5> denominators{1, 2, 3, 5, 60};
    int checked_points = 0;
    for (int trial = 0; trial < 300; ++trial) {
        LinearSystem sys = oracles::random_system(rng);
        std::size_t var = std::uniform_int_distribution<std::size_t>(
            0, sys.variables.size() - 1)(rng);
        LinearSystem proj = fm_eliminate(sys, var);
        LinearSystem norm = normalized(sys);

        // Sample points over the remaining variables with denominators <= 60.
        for (int s = 0; s < 20; ++s) {
            std::vector<Rational> point;
            for (std::size_t i = 0; i < proj.variables.size(); ++i)
                point.emplace_back(numer(rng),
                                   denominators[std::uniform_int_distribution<std::size_t>(
                                       0, denominators.size() - 1)(rng)]);
            bool in_projection = satisfies(proj, point);

            // Exact extension interval for the eliminated variable.
            std::optional<Rational> lo, hi;
            bool lo_strict = false, hi_strict = false;
            bool fixed_row_violated = false;
            auto full_point = [&](const Rational& v) {
                std::vector<Rational> fp;
                std::size_t k = 0;
                for (std::size_t i = 0; i < sys.variables.size(); ++i)
                    fp.push_back(i == var ? v : point[k++]);
                return fp;
            };
            for (const auto& c : norm.constraints) {
                Rational a = c.coeffs[var];
                Rational rest;
                std::size_t k = 0;
                for (std::size_t i = 0; i < sys.variables.size(); ++i) {
                    if (i == var) continue;
                    rest += c.coeffs[i] * point[k++];
                }
                if (a.is_zero()) {
                    if (c.rel == Relation::LE ? rest > c.rhs : rest >= c.rhs)
                        fixed_row_violated = true;
                    continue;
                }
                Rational bound = (c.rhs - rest) / a;
                bool strict = c.rel == Relation::LT;
                if (a.sign() > 0) {
                    if (!hi || bound < *hi || (bound == *hi && strict))
                        hi = bound, hi_strict = strict;
                } else {
                    if (!lo || bound > *lo || (bound == *lo && strict))
                        lo = bound, lo_strict = strict;
                }
            }
            bool extendable = !fixed_row_violated;
            if (extendable && lo && hi) {
                if (*lo > *hi) extendable = false;
                else if (*lo == *hi && (lo_strict || hi_strict)) extendable = false;
            }

            if (in_projection) {
                REQUIRE(extendable);
                Rational v;
                if (lo && hi)
                    v = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
                else if (lo)
                    v = lo_strict ? *lo + Rational(1) : *lo;
                else if (hi)
                    v = hi_strict ? *hi - Rational(1) : *hi;
                CHECK(satisfies(sys, full_point(v)));
                ++checked_points;
            } else if (extendable) {
                // A point outside the projection must not extend either.
                Rational v;
                if (lo && hi)
                    v = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
                else if (lo)
                    v = lo_strict ? *lo + Rational(1) : *lo;
                else if (hi)
                    v = hi_strict ? *hi - Rational(1) : *hi;
                else
                    v = Rational(0);
                CHECK_FALSE(satisfies(sys, full_point(v)));
            }
        }
    }
    CHECK(checked_points > 200);
}

TEST_CASE("full solutions project into the projected system") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        LinearSystem sys = oracles::random_system(rng);
        SolveResult r = solve(sys);
        if (!r.feasible) continue;
        std::size_t var = std::uniform_int_distribution<std::size_t>(
            0, sys.variables.size() - 1)(rng);
        LinearSystem proj = fm_eliminate(sys, var);
        std::vector<Rational> projected;
        for (std::size_t i = 0; i < sys.variables.size(); ++i)
            if (i != var) projected.push_back(r.witness[i]);
        CHECK(satisfies(proj, projected));
    }
}

TEST_CASE("solver is sound on random small systems") {
    std::mt19937 rng(4242);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        LinearSystem sys = oracles::random_system(rng);
        SolveResult r = solve(sys);
        if (r.feasible) {
            CHECK(satisfies(sys, r.witness));
            ++feasible;
        } else {
            CHECK(check_farkas(sys, r.farkas));
            ++infeasible;
        }
    }
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
}
