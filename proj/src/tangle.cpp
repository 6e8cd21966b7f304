#include "montesinos/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace montesinos {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = abs64(a);
    b = abs64(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t mod_positive(std::int64_t v, std::int64_t q) {
    std::int64_t r = v % q;
    return r < 0 ? r + q : r;
}

// Inverse of a modulo q via extended Euclid; requires gcd(a, q) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t q) {
    std::int64_t r0 = q, r1 = mod_positive(a, q);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t div = r0 / r1;
        std::int64_t r2 = r0 - div * r1;
        std::int64_t s2 = s0 - div * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return mod_positive(s0, q);
}

} // namespace

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Zero: return "zero";
        case Parity::One: return "one";
        case Parity::Infinity: return "infinity";
    }
    return "?";
}

std::int64_t mod_inverse_min_abs(std::int64_t p, std::int64_t q) {
    if (q < 2)
        throw TangleError("mod_inverse_min_abs: q must be >= 2");
    if (gcd64(p, q) != 1)
        throw TangleError("mod_inverse_min_abs: p and q must be coprime");
    // p * pbar = -1 (mod q), i.e. pbar = -(p^{-1}) mod q.
    std::int64_t pbar = mod_positive(-mod_inverse(p, q), q);
    // Reduce into (-q/2, q/2]; the upper endpoint keeps the positive tie.
    if (2 * pbar > q)
        pbar -= q;
    return pbar;
}

Parity parity_type(std::int64_t p, std::int64_t q) {
    if (q < 1)
        throw TangleError("parity_type: q must be >= 1");
    if (gcd64(p, q) != 1)
        throw TangleError("parity_type: p and q must be coprime");
    if (q % 2 == 0)
        return Parity::Infinity;
    return p % 2 == 0 ? Parity::Zero : Parity::One;
}

std::pair<RationalTangle, std::int64_t> canonical_tangle(std::int64_t p, std::int64_t q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q < 2)
        throw TangleError("trivial tangle: denominator " + std::to_string(q));
    if (gcd64(p, q) != 1)
        throw TangleError("tangle slope not reduced");
    std::int64_t r = mod_positive(p, q);
    if (2 * r > q)
        r -= q;  // now 2|r| <= q with the q/2 tie kept positive
    RationalTangle t;
    t.p = r;
    t.q = q;
    t.pbar = mod_inverse_min_abs(r, q);
    t.parity = parity_type(r, q);
    return {t, (p - r) / q};
}

namespace {

bool tangle_less(const RationalTangle& a, const RationalTangle& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
}

} // namespace

MontesinosKnot normalize(const std::array<Rational, 3>& slopes, std::int64_t base_e0) {
    MontesinosKnot knot;
    knot.e0 = base_e0;
    for (int i = 0; i < 3; ++i) {
        auto [t, shift] = canonical_tangle(slopes[i].num(), slopes[i].den());
        knot.tangles[i] = t;
        knot.e0 += shift;
    }
    std::sort(knot.tangles.begin(), knot.tangles.end(), tangle_less);
    return knot;
}

namespace {

// Boundary points of tangle i: index 4*i + {LT, LB, RT, RB}.
enum Corner { LT = 0, LB = 1, RT = 2, RB = 3 };

int trace_components(const std::array<Parity, 3>& parity, bool seam_twisted) {
    std::array<int, 12> strand{};  // partner inside the tangle
    std::array<int, 12> seam{};    // partner across a closure seam
    for (int i = 0; i < 3; ++i) {
        int base = 4 * i;
        switch (parity[i]) {
            case Parity::Zero:
                strand[base + LT] = base + RT;
                strand[base + RT] = base + LT;
                strand[base + LB] = base + RB;
                strand[base + RB] = base + LB;
                break;
            case Parity::One:
                strand[base + LT] = base + RB;
                strand[base + RB] = base + LT;
                strand[base + LB] = base + RT;
                strand[base + RT] = base + LB;
                break;
            case Parity::Infinity:
                strand[base + LT] = base + LB;
                strand[base + LB] = base + LT;
                strand[base + RT] = base + RB;
                strand[base + RB] = base + RT;
                break;
        }
    }
    for (int i = 0; i < 3; ++i) {
        int next = (i + 1) % 3;
        // e0 half-twists sit on the seam closing tangle 2 back to tangle 0;
        // only their parity matters for connectivity.
        bool twist = seam_twisted && i == 2;
        int rt = 4 * i + RT, rb = 4 * i + RB;
        int lt = 4 * next + LT, lb = 4 * next + LB;
        seam[rt] = twist ? lb : lt;
        seam[rb] = twist ? lt : lb;
        seam[seam[rt]] = rt;
        seam[seam[rb]] = rb;
    }
    std::array<bool, 12> seen{};
    int cycles = 0;
    for (int start = 0; start < 12; ++start) {
        if (seen[start]) continue;
        ++cycles;
        int at = start;
        bool via_strand = true;
        do {
            seen[at] = true;
            at = via_strand ? strand[at] : seam[at];
            via_strand = !via_strand;
        } while (at != start);
    }
    return cycles;
}

} // namespace

int component_count(const MontesinosKnot& knot) {
    std::array<Parity, 3> parity{knot.tangles[0].parity, knot.tangles[1].parity,
                                 knot.tangles[2].parity};
    return trace_components(parity, mod_positive(knot.e0, 2) == 1);
}

bool is_knot(const MontesinosKnot& knot) { return component_count(knot) == 1; }

bool sum_condition(const MontesinosKnot& knot) {
    Rational sum;
    for (const auto& t : knot.tangles)
        sum += Rational(1, t.q - 1);
    return sum <= Rational(1);
}

PartialFractionForm partial_fraction_small_pbar(std::int64_t p, std::int64_t q) {
    std::int64_t pbar = mod_inverse_min_abs(p, q);
    if (abs64(pbar) != 2)
        throw TangleError("partial fraction form requires |pbar| = 2");
    // |pbar| = 2 forces q odd, so the representative with 2|m| < q is unique.
    std::int64_t m = mod_positive(p, q);
    if (2 * m > q)
        m -= q;
    std::int64_t n = (p - m) / q;
    PartialFractionForm f;
    f.n = n;
    f.m = m;
    // q = +-(2m +- 1) with the signs determined by p*pbar = -1 (mod q).
    if (2 * m + 1 == q) {
        f.sign_outer = 1; f.sign_inner = 1;
    } else if (2 * m - 1 == q) {
        f.sign_outer = 1; f.sign_inner = -1;
    } else if (2 * m + 1 == -q) {
        f.sign_outer = -1; f.sign_inner = 1;
    } else if (2 * m - 1 == -q) {
        f.sign_outer = -1; f.sign_inner = -1;
    } else {
        throw TangleError("partial fraction decomposition failed");  // unreachable
    }
    Rational inner = Rational(2) + Rational(f.sign_inner) / Rational(f.m);
    f.reconstructed = Rational(f.n) + Rational(f.sign_outer) / inner;
    if (f.reconstructed != Rational(p, q))
        throw TangleError("partial fraction reconstruction mismatch");
    return f;
}

MontesinosKnot mirror(const MontesinosKnot& knot) {
    std::array<Rational, 3> slopes;
    for (int i = 0; i < 3; ++i)
        slopes[i] = Rational(-knot.tangles[i].p, knot.tangles[i].q);
    return normalize(slopes, -knot.e0);
}

MontesinosKnot permute(const MontesinosKnot& knot, const std::array<int, 3>& perm) {
    std::array<Rational, 3> slopes;
    for (int i = 0; i < 3; ++i) {
        const auto& t = knot.tangles[perm[i]];
        slopes[i] = Rational(t.p, t.q);
    }
    return normalize(slopes, knot.e0);
}

std::vector<OrbitElement> orbit_elements(const MontesinosKnot& knot) {
    static const std::array<std::array<int, 3>, 6> perms{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<OrbitElement> out;
    out.reserve(12);
    for (bool mirrored : {false, true}) {
        for (const auto& perm : perms) {
            OrbitElement e;
            e.perm = perm;
            e.mirrored = mirrored;
            for (int j = 0; j < 3; ++j) {
                const auto& t = knot.tangles[perm[j]];
                e.tangles[j] = mirrored ? canonical_tangle(-t.p, t.q).first : t;
            }
            out.push_back(e);
        }
    }
    return out;
}

MontesinosKnot parse_knot(const std::string& literal) {
    std::string s;
    for (char c : literal)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 4 || (s[0] != 'K' && s[0] != 'k') || s[1] != '(' || s.back() != ')')
        throw TangleError("malformed knot literal: " + literal);
    std::string body = s.substr(2, s.size() - 3);
    std::array<Rational, 3> slopes;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = body.find(',', pos);
        if (i < 2 && comma == std::string::npos)
            throw TangleError("knot literal needs three slopes: " + literal);
        if (i == 2 && comma != std::string::npos)
            throw TangleError("knot literal needs exactly three slopes: " + literal);
        std::string part = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            slopes[i] = Rational::parse(part);
        } catch (const std::invalid_argument& e) {
            throw TangleError(std::string("bad slope in knot literal: ") + e.what());
        }
        pos = comma + 1;
    }
    return normalize(slopes);
}

std::string knot_literal(const MontesinosKnot& knot) {
    std::ostringstream out;
    out << "K(";
    for (int i = 0; i < 3; ++i) {
        if (i) out << ", ";
        out << knot.tangles[i].p << "/" << knot.tangles[i].q;
    }
    out << ")";
    return out.str();
}

} // namespace montesinos
