#include "montesinos/gauss_bonnet.hpp"

#include <stdexcept>

namespace montesinos {

Rational angled_euler(const AngledFace& face) {
    Rational deficit;
    for (const auto& alpha : face.corner_angles) {
        if (alpha < Rational(0) || alpha > Rational(1))
            throw GraphError("corner angle outside [0, 1] (units of pi): " + alpha.str());
        deficit += (Rational(1) - alpha) / Rational(2);
    }
    return Rational(face.euler_char) - deficit;
}

std::int64_t s_min(std::int64_t r, std::int64_t q, std::int64_t pbar_abs) {
    if (q < 2 || pbar_abs < 1 || 2 * pbar_abs > q || r < 0)
        throw std::invalid_argument("s_min: bad parameters");
    if (r == 0) return 2 * q;
    if (r % 2 == 1) return q;
    return 2 * pbar_abs;
}

Rational face_euler(const MontesinosKnot& knot, const Certificate& cert, const FaceType& type) {
    if (type.tangle_index < 1 || type.tangle_index > 3)
        throw std::invalid_argument("face_euler: tangle index must be 1..3");
    if (type.r < 0 || type.s < 0)
        throw std::invalid_argument("face_euler: negative corner count");
    (void)knot;
    int i = type.tangle_index - 1;
    Rational total = Rational(type.r) * cert.alpha_bar[i] + Rational(type.s) * cert.beta_bar[i];
    return Rational(1) - total / Rational(2);
}

CurvatureSpectrum curvature_spectrum(const MontesinosKnot& knot, const Certificate& cert,
                                     std::int64_t r_max, std::int64_t s_max) {
    CurvatureSpectrum spectrum;
    for (int idx = 1; idx <= 3; ++idx) {
        const auto& t = knot.tangles[idx - 1];
        for (std::int64_t r = 0; r <= r_max; ++r) {
            std::int64_t lo = s_min(r, t.q, t.pbar_abs());
            for (std::int64_t s = lo; s <= s_max; ++s) {
                SpectrumEntry entry{r, s, idx, face_euler(knot, cert, {r, s, idx})};
                if (entry.e > Rational(0)) {
                    spectrum.all_nonpositive = false;
                    spectrum.positives.push_back(entry);
                } else if (entry.e == Rational(0)) {
                    spectrum.zeros.push_back(entry);
                    bool flat = (r == 0 && s == 2 * t.q) || (r == 1 && s == t.q) ||
                                (r == 2 && s == 2 * t.pbar_abs());
                    if (!flat) spectrum.zeros_are_flat_types = false;
                }
                spectrum.entries.push_back(std::move(entry));
            }
        }
    }
    return spectrum;
}

GraphReport graph_euler_check(const GeneralizedGraph& graph) {
    GraphReport report;

    // Incidence discipline: every slot of every vertex used exactly once.
    std::vector<std::vector<int>> slot_use(graph.vertices.size());
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        if (graph.vertices[v].valence < 0)
            throw GraphError("vertices[" + std::to_string(v) + "]: negative valence");
        slot_use[v].assign(static_cast<std::size_t>(graph.vertices[v].valence), 0);
    }
    for (std::size_t f = 0; f < graph.faces.size(); ++f) {
        for (std::size_t c = 0; c < graph.faces[f].corners.size(); ++c) {
            const GraphCorner& corner = graph.faces[f].corners[c];
            std::string where = "faces[" + std::to_string(f) + "].corners[" +
                                std::to_string(c) + "]";
            if (corner.vertex < 0 || static_cast<std::size_t>(corner.vertex) >= graph.vertices.size())
                throw GraphError(where + ".vertex: no such vertex");
            if (corner.slot < 0 || corner.slot >= graph.vertices[corner.vertex].valence)
                throw GraphError(where + ".slot: no such slot on vertex " +
                                 std::to_string(corner.vertex));
            if (++slot_use[corner.vertex][corner.slot] > 1)
                throw GraphError(where + ": slot used by more than one corner");
            if (corner.angle < Rational(0) || corner.angle > Rational(1))
                throw GraphError(where + ".angle: outside [0, 1] (units of pi)");
        }
    }
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
        for (std::size_t s = 0; s < slot_use[v].size(); ++s)
            if (slot_use[v][s] == 0)
                throw GraphError("vertices[" + std::to_string(v) + "] slot " +
                                 std::to_string(s) + " is not used by any face corner");

    // A vertexless loop counts as one vertex and one edge; the two cancel.
    int chi = static_cast<int>(graph.vertices.size()) - static_cast<int>(graph.edges);
    for (const auto& face : graph.faces)
        chi += face.euler_char;
    report.chi_surface = chi;
    if (chi != graph.surface_euler_char)
        report.violations.push_back("declared surface_euler_char " +
                                    std::to_string(graph.surface_euler_char) +
                                    " != computed " + std::to_string(chi));

    report.vertex_angle_sums.assign(graph.vertices.size(), Rational(0));
    for (const auto& face : graph.faces) {
        AngledFace af{face.euler_char, {}};
        for (const auto& corner : face.corners) {
            af.corner_angles.push_back(corner.angle);
            report.vertex_angle_sums[static_cast<std::size_t>(corner.vertex)] += corner.angle;
        }
        report.sum_e += angled_euler(af);
    }

    bool all_exact = true;
    for (std::size_t v = 0; v < report.vertex_angle_sums.size(); ++v) {
        if (report.vertex_angle_sums[v] < Rational(2)) {
            report.violations.push_back("vertex " + std::to_string(v) + " angle sum " +
                                        report.vertex_angle_sums[v].str() + " < 2");
            all_exact = false;
        } else if (report.vertex_angle_sums[v] != Rational(2)) {
            all_exact = false;
        }
    }
    report.equality = all_exact && report.sum_e == Rational(report.chi_surface);
    return report;
}

std::vector<std::string> validate_graph(const GeneralizedGraph& graph, int delta) {
    std::vector<std::string> out;
    if (delta < 1) {
        out.push_back("delta must be >= 1");
        return out;
    }
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const auto& vx = graph.vertices[v];
        if (vx.kind == VertexKind::Small && vx.valence != 3)
            out.push_back("small vertex " + std::to_string(v) + " has valence " +
                          std::to_string(vx.valence) + ", expected 3");
        if (vx.kind == VertexKind::Large && vx.valence != 6 * delta)
            out.push_back("large vertex " + std::to_string(v) + " has valence " +
                          std::to_string(vx.valence) + ", expected " + std::to_string(6 * delta));
    }
    std::int64_t endpoint_sum = 0;
    for (const auto& vx : graph.vertices) endpoint_sum += vx.valence;
    if (endpoint_sum != 2 * graph.edges)
        out.push_back("valence sum " + std::to_string(endpoint_sum) +
                      " != 2 * edges = " + std::to_string(2 * graph.edges));
    int chi = static_cast<int>(graph.vertices.size()) - static_cast<int>(graph.edges);
    for (const auto& face : graph.faces) chi += face.euler_char;
    if (chi != graph.surface_euler_char)
        out.push_back("Euler identity fails: V - E + sum chi = " + std::to_string(chi) +
                      ", declared " + std::to_string(graph.surface_euler_char));
    return out;
}

GeneralizedGraph subdivide_edge(const GeneralizedGraph& graph, std::size_t face_a,
                                std::size_t face_b) {
    if (face_a >= graph.faces.size() || face_b >= graph.faces.size())
        throw GraphError("subdivide_edge: no such face");
    GeneralizedGraph out = graph;
    int v = static_cast<int>(out.vertices.size());
    out.vertices.push_back({VertexKind::Small, 2});
    out.edges += 1;
    out.faces[face_a].corners.push_back({v, 0, Rational(1)});
    out.faces[face_b].corners.push_back({v, 1, Rational(1)});
    return out;
}

} // namespace montesinos
