#include "montesinos/angle_system.hpp"

#include <numeric>
#include <stdexcept>

namespace montesinos {

AngleParams angle_params(const MontesinosKnot& knot) {
    AngleParams p;
    for (int i = 0; i < 3; ++i) {
        p.q[i] = knot.tangles[i].q;
        p.pbar_abs[i] = knot.tangles[i].pbar_abs();
    }
    return p;
}

LinearSystem build_angle_system(const AngleParams& params) {
    for (int i = 0; i < 3; ++i) {
        if (params.q[i] < 2)
            throw std::invalid_argument("angle system needs q_i >= 2");
        if (params.pbar_abs[i] < 1 || 2 * params.pbar_abs[i] > params.q[i])
            throw std::invalid_argument("angle system needs 1 <= |pbar_i| <= q_i/2");
    }
    LinearSystem sys;
    sys.variables = {"a1", "a2", "a3", "b1", "b2", "b3"};
    auto row = [&](std::array<Rational, 6> c) {
        return std::vector<Rational>(c.begin(), c.end());
    };
    auto unit = [&](int var) {
        std::array<Rational, 6> c{};
        c[var] = Rational(1);
        return row(c);
    };
    const Rational one(1), two(2);
    for (int i = 0; i < 3; ++i) {
        std::string ai = "a" + std::to_string(i + 1);
        std::string bi = "b" + std::to_string(i + 1);
        sys.add(unit(i), Relation::GT, Rational(0), ai + "_pos");
        sys.add(unit(i), Relation::LE, one, ai + "_max");
        sys.add(unit(3 + i), Relation::GT, Rational(0), bi + "_pos");
        sys.add(unit(3 + i), Relation::LT, one, bi + "_max");
    }
    const Rational zero;
    sys.add(row({one, one, one, zero, zero, zero}), Relation::LE, two, "alpha_sum");
    sys.add(row({zero, zero, zero, one, one, one}), Relation::LE, one, "beta_sum");
    for (int i = 0; i < 3; ++i) {
        std::array<Rational, 6> c{};
        c[i] = one;
        c[3 + i] = Rational(params.q[i]);
        sys.add(row(c), Relation::GE, two, "face_q[" + std::to_string(i + 1) + "]");
    }
    for (int i = 0; i < 3; ++i) {
        std::array<Rational, 6> c{};
        c[i] = one;
        c[3 + i] = Rational(params.pbar_abs[i]);
        sys.add(row(c), Relation::GE, one, "face_pbar[" + std::to_string(i + 1) + "]");
    }
    for (int i = 0; i < 3; ++i) {
        if (params.q[i] != 2) continue;
        std::array<Rational, 6> c{};
        c[i] = one;
        c[3 + i] = one;
        sys.add(row(c), Relation::GT, one, "strict_q2[" + std::to_string(i + 1) + "]");
    }
    return sys;
}

LinearSystem build_angle_system(const MontesinosKnot& knot) {
    if (!is_knot(knot))
        throw TangleError("angle system is defined for knots, got a " +
                          std::to_string(component_count(knot)) + "-component link");
    return build_angle_system(angle_params(knot));
}

namespace {

std::vector<Rational> certificate_point(const Certificate& cert) {
    return {cert.alpha_bar[0], cert.alpha_bar[1], cert.alpha_bar[2],
            cert.beta_bar[0], cert.beta_bar[1], cert.beta_bar[2]};
}

} // namespace

std::vector<Violation> verify_certificate(const AngleParams& params, const Certificate& cert) {
    return evaluate_point(build_angle_system(params), certificate_point(cert));
}

std::vector<Violation> verify_certificate(const MontesinosKnot& knot, const Certificate& cert) {
    return evaluate_point(build_angle_system(knot), certificate_point(cert));
}

FeasibilityResult solve_angle_system(const AngleParams& params) {
    LinearSystem sys = build_angle_system(params);
    // b1, b2, b3, a1, a2, a3
    SolveResult r = solve(sys, {3, 4, 5, 0, 1, 2});
    FeasibilityResult out;
    if (r.feasible) {
        Certificate cert;
        for (int i = 0; i < 3; ++i) {
            cert.alpha_bar[i] = r.witness[i];
            cert.beta_bar[i] = r.witness[3 + i];
        }
        if (!verify_certificate(params, cert).empty())
            throw std::logic_error("solver certificate failed re-verification");
        out.certificate = std::move(cert);
    } else {
        out.farkas = std::move(r.farkas);
    }
    return out;
}

FeasibilityResult solve_angle_system(const MontesinosKnot& knot) {
    if (!is_knot(knot))
        throw TangleError("angle system is defined for knots, got a " +
                          std::to_string(component_count(knot)) + "-component link");
    return solve_angle_system(angle_params(knot));
}

bool PresetSlot::matches(std::int64_t q, std::int64_t pbar_abs) const {
    if (q < q_min) return false;
    if (q_max != 0 && q > q_max) return false;
    if (pbar_abs < pbar_min) return false;
    if (pbar_max != 0 && pbar_abs > pbar_max) return false;
    return true;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = [] {
        auto r = [](std::int64_t n, std::int64_t d) { return Rational(n, d); };
        std::vector<Preset> t;
        t.push_back({"thm1.1-A", "q1,q2,q3 >= 4",
                     {{{4, 0, 1, 0}, {4, 0, 1, 0}, {4, 0, 1, 0}}},
                     {r(2, 3), r(2, 3), r(2, 3)},
                     {r(1, 3), r(1, 3), r(1, 3)}});
        t.push_back({"thm1.1-B", "q1 = 3, q2,q3 >= 5",
                     {{{3, 3, 1, 0}, {5, 0, 1, 0}, {5, 0, 1, 0}}},
                     {r(1, 2), r(3, 4), r(3, 4)},
                     {r(1, 2), r(1, 4), r(1, 4)}});
        t.push_back({"thm1.1-C", "q1 = 3, q2 = 4, q3 >= 7",
                     {{{3, 3, 1, 0}, {4, 4, 1, 0}, {7, 0, 1, 0}}},
                     {r(1, 2), r(2, 3), r(5, 6)},
                     {r(1, 2), r(1, 3), r(1, 6)}});
        t.push_back({"thm8.2-case1", "(q1,q2,q3) = (3,4,5), |pbar3| = 2",
                     {{{3, 3, 1, 0}, {4, 4, 1, 0}, {5, 5, 2, 2}}},
                     {r(1, 1), r(2, 3), r(1, 3)},
                     {r(1, 3), r(1, 3), r(1, 3)}});
        t.push_back({"thm8.2-case2", "q1 = q2 = 3, |pbar3| >= 3",
                     {{{3, 3, 1, 0}, {3, 3, 1, 0}, {2, 0, 3, 0}}},
                     {r(7, 8), r(7, 8), r(1, 4)},
                     {r(3, 8), r(3, 8), r(1, 4)}});
        t.push_back({"thm8.2-case3a", "q1 = 2, q2,q3 >= 7, |pbar2|,|pbar3| > 1",
                     {{{2, 2, 1, 0}, {7, 0, 2, 0}, {7, 0, 2, 0}}},
                     {r(1, 1), r(1, 2), r(1, 2)},
                     {r(1, 2), r(1, 4), r(1, 4)}});
        t.push_back({"thm8.2-case3b", "q1 = 2, q2 = 5, q3 >= 9, |pbar2|,|pbar3| > 1",
                     {{{2, 2, 1, 0}, {5, 5, 2, 0}, {9, 0, 2, 0}}},
                     {r(1, 1), r(1, 3), r(2, 3)},
                     {r(1, 2), r(1, 3), r(1, 6)}});
        t.push_back({"thm8.2-case4", "q1 = 2, q2 >= 5, |pbar2| = 1, |pbar3| >= 3",
                     {{{2, 2, 1, 0}, {5, 0, 1, 1}, {2, 0, 3, 0}}},
                     {r(1, 1), r(3, 4), r(1, 4)},
                     {r(1, 2), r(1, 4), r(1, 4)}});
        t.push_back({"thm8.2-case5", "q1 = 2, q2 = 3, |pbar3| >= 7",
                     {{{2, 2, 1, 0}, {3, 3, 1, 0}, {2, 0, 7, 0}}},
                     {r(1, 1), r(7, 8), r(1, 8)},
                     {r(1, 2), r(3, 8), r(1, 8)}});
        return t;
    }();
    return table;
}

AngleParams minimal_parameters(const Preset& preset) {
    AngleParams p;
    for (int i = 0; i < 3; ++i) {
        const PresetSlot& s = preset.slots[i];
        std::int64_t pbar = s.pbar_min;
        std::int64_t q = std::max(s.q_min, 2 * pbar);
        auto realizable = [&](std::int64_t qq) {
            if (std::gcd(pbar, qq) != 1) return false;
            if (2 * pbar == qq && qq != 2) return false;
            return true;
        };
        while (!realizable(q)) ++q;
        if (s.q_max != 0 && q > s.q_max)
            throw std::logic_error("preset slot admits no realizable parameters");
        p.q[i] = q;
        p.pbar_abs[i] = pbar;
    }
    return p;
}

std::optional<std::pair<Certificate, std::string>> preset_for(const MontesinosKnot& knot) {
    auto orbit = orbit_elements(knot);
    for (const auto& preset : presets()) {
        for (const auto& elem : orbit) {
            bool ok = true;
            for (int j = 0; j < 3 && ok; ++j)
                ok = preset.slots[j].matches(elem.tangles[j].q, elem.tangles[j].pbar_abs());
            if (!ok) continue;
            Certificate cert;
            cert.regime = preset.regime;
            // Slot j of the pattern landed on knot tangle perm[j].
            for (int j = 0; j < 3; ++j) {
                cert.alpha_bar[elem.perm[j]] = preset.alpha_bar[j];
                cert.beta_bar[elem.perm[j]] = preset.beta_bar[j];
            }
            if (!verify_certificate(knot, cert).empty())
                throw std::logic_error("preset " + preset.regime +
                                       " matched but failed verification");
            return std::make_pair(cert, preset.regime);
        }
    }
    return std::nullopt;
}

} // namespace montesinos
