#include "gorenstein/report.hpp"

#include <sstream>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

Json labels_of(const Multigraph& g, const std::vector<VertexId>& vs) {
    Json out = Json::array();
    for (VertexId v : vs) {
        out.push_back(g.label(v));
    }
    return out;
}

Json edge_ids_of(const Multigraph& g) {
    Json out = Json::array();
    for (const Edge& e : g.edges()) {
        out.push_back(e.id);
    }
    return out;
}

Json graph_summary(const Multigraph& input, std::size_t loops_removed) {
    return Json{{"vertices", input.vertex_count()},
                {"edges", input.edge_count()},
                {"loops_removed", loops_removed}};
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

const std::map<NodeKind, std::string>& op_names() {
    static const std::map<NodeKind, std::string> names{
        {NodeKind::SeedCycle, "seed_cycle"}, {NodeKind::SeedK4, "seed_k4"},   {NodeKind::SeedK2, "seed_k2"},
        {NodeKind::Glue, "glue"},            {NodeKind::Subdivide, "subdivide"}, {NodeKind::Collide, "collide"},
        {NodeKind::AttachCycle, "attach_cycle"}, {NodeKind::BlowUp, "blow_up"}};
    return names;
}

}  // namespace

std::string kind_name(PolytopeKind kind) { return kind == PolytopeKind::Base ? "base" : "independence"; }

PolytopeKind parse_kind(const std::string& text) {
    if (text == "base") {
        return PolytopeKind::Base;
    }
    if (text == "indep" || text == "independence") {
        return PolytopeKind::Independence;
    }
    throw ParseError(0, "unknown polytope kind '" + text + "' (expected base or indep)");
}

Json graph_json(const Multigraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back(Json{{"id", e.id}, {"u", g.label(e.u)}, {"v", g.label(e.v)}});
    }
    return Json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const Json& j) {
    try {
        Multigraph g;
        for (const auto& label : j.at("vertices")) {
            g.add_vertex(label.get<std::string>());
        }
        for (const auto& e : j.at("edges")) {
            auto u = g.find_vertex(e.at("u").get<std::string>());
            auto v = g.find_vertex(e.at("v").get<std::string>());
            if (!u || !v) {
                throw ParseError(0, "edge endpoint is not a listed vertex");
            }
            g.add_edge_with_id(e.at("id").get<EdgeId>(), *u, *v);
        }
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(0, std::string("malformed graph document: ") + ex.what());
    }
}

Json base_witness_json(const BaseWitness& w, const BaseVerdict& verdict) {
    return std::visit(
        [&](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NoCandidateDelta>) {
                return Json{{"type", "no_candidate_delta"}, {"block", x.block}};
            } else if constexpr (std::is_same_v<T, WeightConflict>) {
                return Json{{"type", "weight_conflict"}, {"block", x.block}, {"edge", x.edge}, {"delta", x.delta}};
            } else if constexpr (std::is_same_v<T, TotalWeightMismatch>) {
                return Json{{"type", "total_weight_mismatch"}, {"block", x.block}, {"delta", x.delta},
                            {"lhs", x.lhs}, {"rhs", x.rhs}};
            } else {
                return Json{{"type", "flat_equality_violated"},
                            {"block", x.block},
                            {"delta", x.delta},
                            {"flat", labels_of(verdict.blocks.at(x.block).block, x.flat)},
                            {"lhs", x.lhs},
                            {"rhs", x.rhs}};
            }
        },
        w);
}

Json indep_witness_json(const IndepWitness& w, const IndepVerdict& verdict) {
    return std::visit(
        [&](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NonUniformMultiplicity>) {
                return Json{{"type", "non_uniform_multiplicity"}, {"block", x.block}, {"expected", x.expected},
                            {"found", x.found}};
            } else if constexpr (std::is_same_v<T, ClubViolated>) {
                return Json{{"type", "club_violated"},
                            {"block", x.block},
                            {"flat", labels_of(verdict.blocks.at(x.block).base, x.flat)},
                            {"lhs", x.lhs},
                            {"rhs", x.rhs}};
            } else if constexpr (std::is_same_v<T, WrongChordlessCycle>) {
                return Json{{"type", "wrong_chordless_cycle"}, {"block", x.block}, {"length", x.length}};
            } else if constexpr (std::is_same_v<T, K4MinorFound>) {
                return Json{{"type", "k4_minor_found"}, {"block", x.block}};
            } else {
                return Json{{"type", "not_constructible"}, {"block", x.block}};
            }
        },
        w);
}

Json base_verdict_json(const BaseVerdict& v, const Multigraph& input) {
    Json blocks = Json::array();
    for (const auto& b : v.blocks) {
        Json weights = nullptr;
        if (b.weights) {
            weights = Json::object();
            for (const auto& [e, w] : b.weights->weights) {
                weights[std::to_string(e)] = w;
            }
        }
        blocks.push_back(Json{{"vertices", b.block.labels()},
                              {"edges", edge_ids_of(b.block)},
                              {"wildcard", b.wildcard},
                              {"candidate_deltas", b.candidate_deltas},
                              {"weights", std::move(weights)}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "base"},
                {"graph", graph_summary(input, v.loops_removed)},
                {"status", v.gorenstein ? "gorenstein" : "not_gorenstein"},
                {"delta", optional_int(v.delta)},
                {"blocks", std::move(blocks)},
                {"witness", v.witness ? base_witness_json(*v.witness, v) : Json(nullptr)}};
}

Json indep_verdict_json(const IndepVerdict& v, const Multigraph& input) {
    Json blocks = Json::array();
    for (const auto& b : v.blocks) {
        blocks.push_back(Json{{"vertices", b.block.labels()},
                              {"edges", edge_ids_of(b.block)},
                              {"multiplicity", b.multiplicity},
                              {"base_edges", edge_ids_of(b.base)},
                              {"certificate", b.certificate ? certificate_json(b.certificate->cert) : Json(nullptr)}});
    }
    Json club = nullptr;
    if (v.club_violation) {
        club = indep_witness_json(*v.club_violation, v);
    }
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "independence"},
                {"graph", graph_summary(input, v.loops_removed)},
                {"status", v.gorenstein ? "gorenstein" : "not_gorenstein"},
                {"delta", optional_int(v.delta)},
                {"m", v.multiplicity ? Json(*v.multiplicity) : Json(nullptr)},
                {"blocks", std::move(blocks)},
                {"witness", v.witness ? indep_witness_json(*v.witness, v) : Json(nullptr)},
                {"club_violation", std::move(club)},
                {"chordal_disagreements", v.chordal_disagreements}};
}

Json cert_node_json(const CertNode& node) {
    Json j{{"op", op_names().at(node.kind)}};
    if (node.kind == NodeKind::SeedCycle || node.kind == NodeKind::AttachCycle) {
        j["length"] = node.cycle_length;
    }
    if (node.kind == NodeKind::BlowUp) {
        j["multiplicity"] = node.multiplicity;
    }
    if (!node.edges.empty()) {
        Json edges = Json::array();
        for (const auto& e : node.edges) {
            edges.push_back(Json{{"edge", e.edge}, {"flip", e.flip}});
        }
        j["edges"] = std::move(edges);
    }
    if (!node.children.empty()) {
        Json children = Json::array();
        for (const auto& c : node.children) {
            children.push_back(cert_node_json(c));
        }
        j["children"] = std::move(children);
    }
    return j;
}

CertNode cert_node_from_json(const Json& j) {
    try {
        CertNode node;
        const auto op = j.at("op").get<std::string>();
        bool known = false;
        for (const auto& [kind, name] : op_names()) {
            if (name == op) {
                node.kind = kind;
                known = true;
            }
        }
        if (!known) {
            throw ParseError(0, "unknown certificate op '" + op + "'");
        }
        if (j.contains("length")) {
            node.cycle_length = j.at("length").get<std::size_t>();
        }
        if (j.contains("multiplicity")) {
            node.multiplicity = j.at("multiplicity").get<std::size_t>();
        }
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                node.edges.push_back(EdgeRef{e.at("edge").get<EdgeId>(), e.value("flip", false)});
            }
        }
        if (j.contains("children")) {
            for (const auto& c : j.at("children")) {
                node.children.push_back(cert_node_from_json(c));
            }
        }
        return node;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(0, std::string("malformed certificate node: ") + ex.what());
    }
}

Json certificate_json(const ConstructionCert& cert) {
    return Json{{"schema_version", kSchemaVersion},
                {"kind", kind_name(cert.kind)},
                {"delta", cert.delta},
                {"summary", cert_summary(cert.root)},
                {"root", cert_node_json(cert.root)}};
}

ConstructionCert certificate_from_json(const Json& j) {
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) {
            throw ParseError(0, "unsupported certificate schema version");
        }
        ConstructionCert cert;
        cert.kind = parse_kind(j.at("kind").get<std::string>());
        cert.delta = j.at("delta").get<int>();
        cert.root = cert_node_from_json(j.at("root"));
        return cert;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(0, std::string("malformed certificate: ") + ex.what());
    }
}

std::string cert_summary(const CertNode& node) {
    std::string inner;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        inner += (i ? "," : "") + cert_summary(node.children[i]);
    }
    switch (node.kind) {
        case NodeKind::SeedCycle: return "Seed(C" + std::to_string(node.cycle_length) + ")";
        case NodeKind::SeedK4: return "Seed(K4)";
        case NodeKind::SeedK2: return "Seed(K2)";
        case NodeKind::Glue: return "Glue(" + inner + ")";
        case NodeKind::Subdivide: return "Subdivide(" + inner + ")";
        case NodeKind::Collide: return "Collide(" + inner + ")";
        case NodeKind::AttachCycle: return "AttachCycle[" + std::to_string(node.cycle_length) + "](" + inner + ")";
        case NodeKind::BlowUp: return "BlowUp[" + std::to_string(node.multiplicity) + "](" + inner + ")";
    }
    return "?";
}

Json witness_point_json(const std::optional<GorensteinWitness>& w) {
    if (!w) {
        return nullptr;
    }
    return Json{{"delta", w->delta}, {"point", w->point}};
}

Json hstar_json(const HStarVector& h) {
    return Json{{"coefficients", h.coefficients}, {"ehrhart", h.ehrhart}, {"palindromic", h.palindromic}};
}

Json normality_json(const NormalityResult& r) {
    return Json{{"passed", r.passed},
                {"failing_k", r.failing_k ? Json(*r.failing_k) : Json(nullptr)},
                {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)}};
}

Json polytope_json(const LatticePolytope& p) {
    return Json{{"ambient_dim", p.ambient_dim},
                {"dim", p.dim},
                {"vertex_count", p.vertices.size()},
                {"facet_count", p.facets.size()},
                {"saturation_index", p.saturation_index ? Json(*p.saturation_index) : Json(nullptr)}};
}

std::string to_dot(const Multigraph& g, const WeightAssignment* weights) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& label : g.labels()) {
        out << "  \"" << label << "\";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [label=\"" << e.id;
        if (weights && weights->weights.contains(e.id)) {
            const int w = weights->at(e.id);
            out << " w=" << w << "\"";
            out << (w == 1 ? ", color=black" : ", color=red, penwidth=2");
        } else {
            out << "\"";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gorenstein
