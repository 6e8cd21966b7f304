#include "montesinos/serialization.hpp"

namespace montesinos {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (!j.is_string())
        throw std::invalid_argument(where + ": expected \"num/den\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

json knot_to_json(const MontesinosKnot& knot) {
    json tangles = json::array();
    for (const auto& t : knot.tangles)
        tangles.push_back({t.p, t.q});
    return {{"tangles", tangles}, {"e0", knot.e0}};
}

MontesinosKnot knot_from_json(const json& j) {
    if (!j.contains("tangles") || !j["tangles"].is_array() || j["tangles"].size() != 3)
        throw TangleError("knot JSON needs a \"tangles\" array of three [p, q] pairs");
    std::array<Rational, 3> slopes;
    for (int i = 0; i < 3; ++i) {
        const auto& t = j["tangles"][static_cast<std::size_t>(i)];
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
            !t[1].is_number_integer())
            throw TangleError("tangles[" + std::to_string(i) + "]: expected [p, q]");
        slopes[i] = Rational(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
    }
    std::int64_t e0 = 0;
    if (j.contains("e0")) {
        if (!j["e0"].is_number_integer())
            throw TangleError("e0: expected integer");
        e0 = j["e0"].get<std::int64_t>();
    }
    return normalize(slopes, e0);
}

json certificate_to_json(const Certificate& cert) {
    json alpha = json::array(), beta = json::array();
    for (int i = 0; i < 3; ++i) {
        alpha.push_back(rational_to_json(cert.alpha_bar[i]));
        beta.push_back(rational_to_json(cert.beta_bar[i]));
    }
    json out = {{"alpha_bar", alpha}, {"beta_bar", beta}, {"units", "pi"}};
    out["regime"] = cert.regime ? json(*cert.regime) : json(nullptr);
    return out;
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    for (const char* key : {"alpha_bar", "beta_bar"}) {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
            throw std::invalid_argument(std::string(key) + ": expected three rationals");
    }
    if (j.contains("units") && j["units"] != "pi")
        throw std::invalid_argument("units: expected \"pi\"");
    for (int i = 0; i < 3; ++i) {
        cert.alpha_bar[i] = rational_from_json(j["alpha_bar"][static_cast<std::size_t>(i)],
                                               "alpha_bar[" + std::to_string(i) + "]");
        cert.beta_bar[i] = rational_from_json(j["beta_bar"][static_cast<std::size_t>(i)],
                                              "beta_bar[" + std::to_string(i) + "]");
    }
    if (j.contains("regime") && j["regime"].is_string())
        cert.regime = j["regime"].get<std::string>();
    return cert;
}

json farkas_to_json(const FarkasWitness& witness) {
    json mults = json::array();
    for (const auto& [idx, mult] : witness.multipliers)
        mults.push_back({idx, rational_to_json(mult)});
    return {{"multipliers", mults}, {"strict", witness.strict}};
}

json violations_to_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const auto& v : violations)
        out.push_back({{"constraint", v.provenance},
                       {"rendered", v.rendered},
                       {"slack", rational_to_json(v.slack)},
                       {"strict", v.strict}});
    return out;
}

json partial_fraction_to_json(const PartialFractionForm& form) {
    return {{"n", form.n},
            {"m", form.m},
            {"sign_outer", form.sign_outer},
            {"sign_inner", form.sign_inner},
            {"value", rational_to_json(form.reconstructed)}};
}

json classification_to_json(const MontesinosKnot& knot, const Classification& cls) {
    json out;
    out["knot"] = knot_to_json(knot);
    out["verdict"] = verdict_name(cls.kind);
    out["certificate"] = cls.certificate ? certificate_to_json(*cls.certificate) : json(nullptr);
    out["certificate_source"] = cls.source ? json(source_name(*cls.source)) : json(nullptr);
    out["family"] = cls.family ? json(cls.family->family) : json(nullptr);
    if (cls.family) {
        json rep = json::array();
        for (const auto& t : cls.family->element.tangles)
            rep.push_back({t.p, t.q});
        out["family_representative"] = rep;
        out["family_mirrored"] = cls.family->element.mirrored;
    }
    if (cls.farkas)
        out["farkas"] = farkas_to_json(*cls.farkas);
    if (!cls.note.empty())
        out["note"] = cls.note;
    out["disclaimer"] = "assumes K hyperbolic";
    return out;
}

json cross_check_to_json(const MontesinosKnot& knot, const CrossCheckReport& report) {
    json out;
    out["knot"] = knot_to_json(knot);
    out["preset"] = report.preset_regime ? json(*report.preset_regime) : json(nullptr);
    out["solver_feasible"] = report.solver_feasible;
    out["preset_implies_feasible"] = report.preset_implies_feasible;
    out["orbit_feasibility_uniform"] = report.orbit_feasibility_uniform;
    json decomp = json::array();
    for (const auto& [idx, form] : report.small_pbar_decompositions) {
        json entry = partial_fraction_to_json(form);
        entry["tangle"] = idx + 1;
        decomp.push_back(entry);
    }
    out["small_pbar_decompositions"] = decomp;
    return out;
}

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key))
        throw GraphError(where + ": missing \"" + key + "\"");
    return j[key];
}

int require_int(const json& j, const char* key, const std::string& where) {
    const json& v = require(j, key, where);
    if (!v.is_number_integer())
        throw GraphError(where + "." + key + ": expected integer");
    return v.get<int>();
}

} // namespace

GeneralizedGraph graph_from_json(const json& j) {
    GeneralizedGraph g;
    g.surface_euler_char = require_int(j, "surface_euler_char", "graph");
    g.edges = require_int(j, "edges", "graph");
    g.vertexless_loops = j.contains("vertexless_loops")
                             ? require_int(j, "vertexless_loops", "graph")
                             : 0;
    g.delta = j.contains("delta") ? require_int(j, "delta", "graph") : 1;

    const json& vertices = require(j, "vertices", "graph");
    if (!vertices.is_array())
        throw GraphError("graph.vertices: expected array");
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        std::string where = "vertices[" + std::to_string(v) + "]";
        GraphVertex vx;
        const json& kind = require(vertices[v], "kind", where);
        if (kind == "small") vx.kind = VertexKind::Small;
        else if (kind == "large") vx.kind = VertexKind::Large;
        else throw GraphError(where + ".kind: expected \"small\" or \"large\"");
        vx.valence = require_int(vertices[v], "valence", where);
        g.vertices.push_back(vx);
    }

    const json& faces = require(j, "faces", "graph");
    if (!faces.is_array())
        throw GraphError("graph.faces: expected array");
    for (std::size_t f = 0; f < faces.size(); ++f) {
        std::string where = "faces[" + std::to_string(f) + "]";
        GraphFace face;
        face.euler_char = require_int(faces[f], "euler_char", where);
        const json& corners = require(faces[f], "corners", where);
        if (!corners.is_array())
            throw GraphError(where + ".corners: expected array");
        for (std::size_t c = 0; c < corners.size(); ++c) {
            std::string cw = where + ".corners[" + std::to_string(c) + "]";
            GraphCorner corner;
            corner.vertex = require_int(corners[c], "vertex", cw);
            corner.slot = require_int(corners[c], "slot", cw);
            try {
                corner.angle = rational_from_json(require(corners[c], "angle", cw), cw + ".angle");
            } catch (const std::invalid_argument& e) {
                throw GraphError(e.what());
            }
            face.corners.push_back(corner);
        }
        g.faces.push_back(std::move(face));
    }
    return g;
}

json graph_to_json(const GeneralizedGraph& graph) {
    json vertices = json::array();
    for (const auto& v : graph.vertices)
        vertices.push_back({{"kind", v.kind == VertexKind::Small ? "small" : "large"},
                            {"valence", v.valence}});
    json faces = json::array();
    for (const auto& f : graph.faces) {
        json corners = json::array();
        for (const auto& c : f.corners)
            corners.push_back({{"vertex", c.vertex},
                               {"slot", c.slot},
                               {"angle", rational_to_json(c.angle)}});
        faces.push_back({{"euler_char", f.euler_char}, {"corners", corners}});
    }
    return {{"surface_euler_char", graph.surface_euler_char},
            {"edges", graph.edges},
            {"vertexless_loops", graph.vertexless_loops},
            {"delta", graph.delta},
            {"vertices", vertices},
            {"faces", faces}};
}

json graph_report_to_json(const GraphReport& report) {
    json sums = json::array();
    for (const auto& s : report.vertex_angle_sums)
        sums.push_back(rational_to_json(s));
    return {{"chi", report.chi_surface},
            {"sum_e", rational_to_json(report.sum_e)},
            {"equality", report.equality},
            {"vertex_angle_sums", sums},
            {"violations", report.violations}};
}

} // namespace montesinos
