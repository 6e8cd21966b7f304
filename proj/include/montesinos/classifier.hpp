#pragma once

// End-to-end verdict for a Montesinos knot: a re-verified angle certificate
// (from a preset or from the solver), membership in one of the five
// residual families where the angle method does not certify, or an anomaly
// (solver-infeasible yet matching no family) which is surfaced rather than
// absorbed.

#include <optional>
#include <string>
#include <vector>

#include "montesinos/angle_system.hpp"
#include "montesinos/tangle.hpp"

namespace montesinos {

enum class VerdictKind { Certified, Family, Anomaly };
enum class CertificateSource { Preset, Solver };

const char* verdict_name(VerdictKind v);
const char* source_name(CertificateSource s);

struct FamilyMatch {
    int family = 0;               // 1..5
    OrbitElement element;         // the ordered image that matched the pattern
};

struct Classification {
    VerdictKind kind = VerdictKind::Anomaly;
    std::optional<Certificate> certificate;
    std::optional<CertificateSource> source;
    std::optional<FamilyMatch> family;
    std::optional<FarkasWitness> farkas;  // infeasibility evidence (family/anomaly)
    std::string note;
};

// Tests every permutation/mirror image of the tangle triple against the
// five residual patterns:
//   1: (1/3, +-1/4, p3/5) with p3 = +-1 (mod 5)
//   2: (1/3, +-1/3, p3/q3) with |pbar3| <= 2
//   3: (1/2, 2/5, p3/q3) with q3 in {5, 7} and |pbar3| > 1
//   4: (1/2, 1/q2, p3/q3) with q2 >= 5 and |pbar3| <= 2
//   5: (1/2, 1/3, p3/q3) with |pbar3| <= 6
std::optional<FamilyMatch> family_match(const MontesinosKnot& knot);

// Requires is_knot.  Preset first, then the exact solver, then the family
// patterns; an infeasible knot matching no family is an Anomaly.
Classification classify(const MontesinosKnot& knot);

struct CrossCheckReport {
    std::optional<std::string> preset_regime;
    bool solver_feasible = false;
    bool preset_implies_feasible = true;
    bool orbit_feasibility_uniform = true;
    // Tangle index (0..2) with |pbar| = 2, and its decomposition.
    std::vector<std::pair<int, PartialFractionForm>> small_pbar_decompositions;
};

// Runs both certification routes and the orbit, reporting agreement.
CrossCheckReport cross_check(const MontesinosKnot& knot);

} // namespace montesinos
