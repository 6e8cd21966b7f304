#pragma once

// Rational tangles and length-3 Montesinos knots: canonical forms, the
// minimal-absolute-value inverse pbar with p*pbar = -1 (mod q), parity of the
// strand pairing, and the component count of the cyclic closure.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "montesinos/rational.hpp"

namespace montesinos {

struct TangleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// How the two strands of a p/q tangle connect its four boundary points.
//   Zero:     left-top -- right-top, left-bottom -- right-bottom
//   One:      left-top -- right-bottom, left-bottom -- right-top
//   Infinity: left-top -- left-bottom, right-top -- right-bottom
enum class Parity { Zero, One, Infinity };

const char* parity_name(Parity p);

// pbar with p*pbar = -1 (mod q) and 2|pbar| <= q.  When q is even both
// +-q/2 qualify; the positive one is returned (only |pbar| is consumed
// downstream).  Requires q >= 2 and gcd(|p|, q) = 1.
std::int64_t mod_inverse_min_abs(std::int64_t p, std::int64_t q);

// Zero if q odd and p even, One if both odd, Infinity if q even.
// Requires gcd(|p|, q) = 1 and q >= 1.
Parity parity_type(std::int64_t p, std::int64_t q);

struct RationalTangle {
    std::int64_t p = 0;     // 2|p| <= q, gcd(|p|, q) = 1
    std::int64_t q = 0;     // >= 2
    std::int64_t pbar = 0;  // cached mod_inverse_min_abs(p, q)
    Parity parity = Parity::Zero;

    std::int64_t pbar_abs() const { return pbar < 0 ? -pbar : pbar; }

    friend bool operator==(const RationalTangle&, const RationalTangle&) = default;
};

// Canonical tangle for any slope p/q with q >= 2: reduces p into the
// representative with 2|p| <= q and reports how many integer twists were
// absorbed.  Ties (q = 2) resolve to the positive representative.
std::pair<RationalTangle, std::int64_t> canonical_tangle(std::int64_t p, std::int64_t q);

struct MontesinosKnot {
    std::array<RationalTangle, 3> tangles{};  // sorted by (q, p) lexicographically
    std::int64_t e0 = 0;                      // absorbed integer part

    friend bool operator==(const MontesinosKnot&, const MontesinosKnot&) = default;
};

// Canonical form of K(f1, f2, f3): each slope reduced to 2|p| <= q, integer
// parts summed into e0 (on top of base_e0), tangles sorted by (q, p).
// Rejects trivial tangles (denominator 0 or 1 after reduction).
MontesinosKnot normalize(const std::array<Rational, 3>& slopes, std::int64_t base_e0 = 0);

// Number of link components of the cyclic closure.  Each tangle pairs its
// four boundary points according to parity; closures identify
// right(i) ~ left(i+1 mod 3).  An odd e0 twists one closure seam.
int component_count(const MontesinosKnot& knot);

bool is_knot(const MontesinosKnot& knot);

// Exact test of 1/(q1-1) + 1/(q2-1) + 1/(q3-1) <= 1.
bool sum_condition(const MontesinosKnot& knot);

// p/q = n + sign_outer/(2 + sign_inner/m), defined exactly when |pbar| = 2.
struct PartialFractionForm {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int sign_outer = 1;
    int sign_inner = 1;
    Rational reconstructed;
};

PartialFractionForm partial_fraction_small_pbar(std::int64_t p, std::int64_t q);

MontesinosKnot mirror(const MontesinosKnot& knot);
MontesinosKnot permute(const MontesinosKnot& knot, const std::array<int, 3>& perm);

// One ordered (unsorted) image of the knot's tangle triple under a
// permutation and optional mirror.  Family and preset patterns are matched
// against all 12 of these.
struct OrbitElement {
    std::array<RationalTangle, 3> tangles{};
    std::array<int, 3> perm{0, 1, 2};  // tangles[j] came from knot.tangles[perm[j]]
    bool mirrored = false;
};

std::vector<OrbitElement> orbit_elements(const MontesinosKnot& knot);

// "K(p1/q1, p2/q2, p3/q3)" with optional whitespace.  The result is
// normalized; integer parts move into e0.
MontesinosKnot parse_knot(const std::string& literal);

// Canonical literal, e.g. "K(1/3, 1/4, 2/5)".  e0 is not part of the
// literal syntax; serialize to JSON when it matters.
std::string knot_literal(const MontesinosKnot& knot);

} // namespace montesinos
