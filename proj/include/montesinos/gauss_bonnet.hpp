#pragma once

// Angled Euler numbers and the combinatorial Gauss-Bonnet accounting on
// generalized graphs (graphs whose loops may have no vertices).  A face
// with corner angles alpha_j (units of pi) has
//
//   e(sigma) = chi(sigma) - sum_j (1 - alpha_j) / 2
//
// and when a graph cuts a closed surface F into faces whose angle sum at
// every vertex is at least 2pi, chi(F) <= sum e(sigma), with equality iff
// every vertex sum is exactly 2pi.

#include <cstdint>
#include <string>
#include <vector>

#include "montesinos/angle_system.hpp"
#include "montesinos/rational.hpp"
#include "montesinos/tangle.hpp"

namespace montesinos {

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AngledFace {
    int euler_char = 1;
    std::vector<Rational> corner_angles;  // internal angles, units of pi, in [0, 1]
};

Rational angled_euler(const AngledFace& face);

// Minimal small-corner count for an essential disk face with r large
// corners in a q-tangle: 2q when r = 0, q when r is odd, 2|pbar| when
// r >= 2 is even.
std::int64_t s_min(std::int64_t r, std::int64_t q, std::int64_t pbar_abs);

// Disk face with r large corners and s small corners in tangle i (1..3).
struct FaceType {
    std::int64_t r = 0;
    std::int64_t s = 0;
    int tangle_index = 1;
};

// e = 1 - (r*alpha_bar_i + s*beta_bar_i)/2 in units of pi.
Rational face_euler(const MontesinosKnot& knot, const Certificate& cert, const FaceType& type);

struct SpectrumEntry {
    std::int64_t r = 0;
    std::int64_t s = 0;
    int tangle_index = 1;
    Rational e;
};

struct CurvatureSpectrum {
    std::vector<SpectrumEntry> entries;  // all admissible (r, s, i), s >= s_min
    std::vector<SpectrumEntry> zeros;
    std::vector<SpectrumEntry> positives;
    bool all_nonpositive = true;
    // With a valid certificate the zeros can only be the flat types
    // (0, 2q_i), (1, q_i), (2, 2|pbar_i|).
    bool zeros_are_flat_types = true;
};

CurvatureSpectrum curvature_spectrum(const MontesinosKnot& knot, const Certificate& cert,
                                     std::int64_t r_max, std::int64_t s_max);

enum class VertexKind { Small, Large };

struct GraphVertex {
    VertexKind kind = VertexKind::Small;
    int valence = 0;  // number of corner slots
};

struct GraphCorner {
    int vertex = 0;
    int slot = 0;
    Rational angle;  // internal angle, units of pi
};

struct GraphFace {
    int euler_char = 1;
    std::vector<GraphCorner> corners;
};

struct GeneralizedGraph {
    std::vector<GraphVertex> vertices;
    std::int64_t edges = 0;
    std::int64_t vertexless_loops = 0;
    std::vector<GraphFace> faces;
    int surface_euler_char = 0;
    int delta = 1;
};

struct GraphReport {
    int chi_surface = 0;  // V - E + sum chi(face); loops cancel out
    Rational sum_e;
    std::vector<Rational> vertex_angle_sums;
    bool equality = false;  // sum_e == chi and every vertex sum is exactly 2
    std::vector<std::string> violations;
};

// Computes the report; throws GraphError on malformed incidence (bad
// vertex/slot references, reused or uncovered slots).  Vertex angle sums
// below 2 and mismatched declared Euler characteristics are reported as
// violations.
GraphReport graph_euler_check(const GeneralizedGraph& graph);

// Valence discipline: small vertices have valence 3, large vertices 6*delta;
// plus the global Euler identity.  Empty result means conforming.
std::vector<std::string> validate_graph(const GeneralizedGraph& graph, int delta);

// Splits one genuine edge (or one vertexless loop) by a valence-2 vertex
// carrying angle pi on both sides; leaves sum_e and chi unchanged.
GeneralizedGraph subdivide_edge(const GeneralizedGraph& graph, std::size_t face_a,
                                std::size_t face_b);

} // namespace montesinos
