#pragma once

// The certification inequality system for a length-3 Montesinos knot, in
// units of pi.  Variables a_i = external large-corner angle and b_i =
// external small-corner angle of tangle i must satisfy
//
//   0 < a_i <= 1,   0 < b_i < 1,
//   a1 + a2 + a3 <= 2,
//   b1 + b2 + b3 <= 1,
//   a_i + q_i * b_i      >= 2        (each i)
//   a_i + |pbar_i| * b_i >= 1        (each i)
//   a_i + b_i > 1 when q_i = 2.
//
// A solution certifies that no surgery on the knot yields an atoroidal
// Seifert fibered space; infeasibility is witnessed by a Farkas
// combination.  The system depends only on the multiset {(q_i, |pbar_i|)}.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "montesinos/linear_system.hpp"
#include "montesinos/tangle.hpp"

namespace montesinos {

struct Certificate {
    std::array<Rational, 3> alpha_bar{};  // units of pi, 0 < alpha_bar_i <= 1
    std::array<Rational, 3> beta_bar{};   // units of pi, 0 < beta_bar_i < 1
    std::optional<std::string> regime;    // preset id when one applies
};

// The (q_i, |pbar_i|) data the system actually consumes.
struct AngleParams {
    std::array<std::int64_t, 3> q{};
    std::array<std::int64_t, 3> pbar_abs{};
};

AngleParams angle_params(const MontesinosKnot& knot);

LinearSystem build_angle_system(const AngleParams& params);
// Requires is_knot(knot).
LinearSystem build_angle_system(const MontesinosKnot& knot);

// Exact evaluation of every condition; empty result means the certificate
// is valid for the knot.
std::vector<Violation> verify_certificate(const AngleParams& params, const Certificate& cert);
std::vector<Violation> verify_certificate(const MontesinosKnot& knot, const Certificate& cert);

struct FeasibilityResult {
    std::optional<Certificate> certificate;  // set iff feasible
    std::optional<FarkasWitness> farkas;     // set iff infeasible
    bool feasible() const { return certificate.has_value(); }
};

// Decides the angle system by exact elimination (b1, b2, b3, a1, a2, a3).
// Both outcomes are re-verified before they are returned.
FeasibilityResult solve_angle_system(const AngleParams& params);
FeasibilityResult solve_angle_system(const MontesinosKnot& knot);

// One known-good angle assignment together with the parameter pattern it
// covers.  Slot j constrains (q_j, |pbar_j|); max = 0 means unbounded.
struct PresetSlot {
    std::int64_t q_min = 2;
    std::int64_t q_max = 0;
    std::int64_t pbar_min = 1;
    std::int64_t pbar_max = 0;

    bool matches(std::int64_t q, std::int64_t pbar_abs) const;
};

struct Preset {
    std::string regime;   // stable id, e.g. "thm1.1-A"
    std::string pattern;  // human-readable regime description
    std::array<PresetSlot, 3> slots{};
    std::array<Rational, 3> alpha_bar{};
    std::array<Rational, 3> beta_bar{};
};

// All nine presets: three covering the summed-reciprocal regimes and six
// covering the residual parameter patterns (the third pattern splits in
// two).  Order is the matching order.
const std::vector<Preset>& presets();

// Smallest (q_i, |pbar_i|) consistent with a slot: q >= max(q_min, 2*pbar_min),
// gcd(pbar_min, q) = 1, and pbar = q/2 only at q = 2.
AngleParams minimal_parameters(const Preset& preset);

// First preset whose pattern matches some permutation/mirror image of the
// knot; the returned certificate is mapped back to the knot's own tangle
// order and re-verified before returning.
std::optional<std::pair<Certificate, std::string>> preset_for(const MontesinosKnot& knot);

} // namespace montesinos
