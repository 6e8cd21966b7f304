#include "montesinos/classifier.hpp"

namespace montesinos {

const char* verdict_name(VerdictKind v) {
    switch (v) {
        case VerdictKind::Certified: return "certified";
        case VerdictKind::Family: return "family";
        case VerdictKind::Anomaly: return "anomaly";
    }
    return "?";
}

const char* source_name(CertificateSource s) {
    return s == CertificateSource::Preset ? "preset" : "solver";
}

namespace {

std::int64_t mod5(std::int64_t p) {
    std::int64_t r = p % 5;
    return r < 0 ? r + 5 : r;
}

bool matches_family(int family, const std::array<RationalTangle, 3>& t) {
    const auto& t1 = t[0];
    const auto& t2 = t[1];
    const auto& t3 = t[2];
    switch (family) {
        case 1:
            return t1.p == 1 && t1.q == 3 && t2.q == 4 && (t2.p == 1 || t2.p == -1) &&
                   t3.q == 5 && (mod5(t3.p) == 1 || mod5(t3.p) == 4);
        case 2:
            return t1.p == 1 && t1.q == 3 && t2.q == 3 && t3.pbar_abs() <= 2;
        case 3:
            return t1.p == 1 && t1.q == 2 && t2.p == 2 && t2.q == 5 &&
                   (t3.q == 5 || t3.q == 7) && t3.pbar_abs() > 1;
        case 4:
            return t1.p == 1 && t1.q == 2 && t2.p == 1 && t2.q >= 5 && t3.pbar_abs() <= 2;
        case 5:
            return t1.p == 1 && t1.q == 2 && t2.p == 1 && t2.q == 3 && t3.pbar_abs() <= 6;
    }
    return false;
}

} // namespace

std::optional<FamilyMatch> family_match(const MontesinosKnot& knot) {
    auto orbit = orbit_elements(knot);
    for (int family = 1; family <= 5; ++family)
        for (const auto& elem : orbit)
            if (matches_family(family, elem.tangles))
                return FamilyMatch{family, elem};
    return std::nullopt;
}

Classification classify(const MontesinosKnot& knot) {
    if (!is_knot(knot))
        throw TangleError("not a knot: " + std::to_string(component_count(knot)) +
                          " components");
    Classification out;
    if (auto preset = preset_for(knot)) {
        out.kind = VerdictKind::Certified;
        out.certificate = preset->first;
        out.source = CertificateSource::Preset;
        return out;
    }
    FeasibilityResult r = solve_angle_system(knot);
    if (r.feasible()) {
        out.kind = VerdictKind::Certified;
        out.certificate = r.certificate;
        out.source = CertificateSource::Solver;
        return out;
    }
    out.farkas = r.farkas;
    if (auto fam = family_match(knot)) {
        out.kind = VerdictKind::Family;
        out.family = fam;
        return out;
    }
    out.kind = VerdictKind::Anomaly;
    out.note = "angle system infeasible but no residual family matches " +
               knot_literal(knot);
    return out;
}

CrossCheckReport cross_check(const MontesinosKnot& knot) {
    if (!is_knot(knot))
        throw TangleError("not a knot: " + std::to_string(component_count(knot)) +
                          " components");
    CrossCheckReport report;
    auto preset = preset_for(knot);
    if (preset)
        report.preset_regime = preset->second;
    report.solver_feasible = solve_angle_system(knot).feasible();
    report.preset_implies_feasible = !preset || report.solver_feasible;

    for (const auto& elem : orbit_elements(knot)) {
        std::array<Rational, 3> slopes;
        for (int i = 0; i < 3; ++i)
            slopes[i] = Rational(elem.tangles[i].p, elem.tangles[i].q);
        MontesinosKnot image = normalize(slopes, elem.mirrored ? -knot.e0 : knot.e0);
        if (solve_angle_system(image).feasible() != report.solver_feasible) {
            report.orbit_feasibility_uniform = false;
            break;
        }
    }

    for (int i = 0; i < 3; ++i) {
        const auto& t = knot.tangles[i];
        if (t.pbar_abs() == 2)
            report.small_pbar_decompositions.emplace_back(
                i, partial_fraction_small_pbar(t.p, t.q));
    }
    return report;
}

} // namespace montesinos
