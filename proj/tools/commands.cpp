#include "commands.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "gorenstein/base_checker.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/indep_checker.hpp"
#include "gorenstein/sweep.hpp"

namespace gorenstein::cli {

namespace {

constexpr std::size_t kIsomorphismCheckLimit = 10;
constexpr std::size_t kSweepCheckerLimit = 7;
constexpr std::size_t kSweepOracleLimit = 6;

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json limits_json(const OracleLimits& limits) {
    return Json{{"vertex_guard", limits.vertex_guard},
                {"subset_vertex_guard", limits.subset_vertex_guard},
                {"subset_guard", limits.subset_guard},
                {"node_guard", limits.node_guard}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw PreconditionError("cannot write '" + path + "'");
    }
    out << content;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(0, "'" + path + "' is not valid JSON: " + ex.what());
    }
}

WeightAssignment merged_weights(const BaseVerdict& v) {
    WeightAssignment all;
    all.delta = v.delta.value_or(0);
    for (const auto& b : v.blocks) {
        if (b.weights) {
            all.weights.insert(b.weights->weights.begin(), b.weights->weights.end());
        }
    }
    return all;
}

void write_dot(const CommonOptions& common, const Multigraph& g, const WeightAssignment* weights = nullptr) {
    if (!common.dot_path.empty()) {
        write_file(common.dot_path, to_dot(g, weights));
    }
}

Json check_document(PolytopeKind kind, const Multigraph& g, const CommonOptions& common) {
    if (kind == PolytopeKind::Base) {
        const BaseVerdict v = base_verdict(g);
        const WeightAssignment w = merged_weights(v);
        write_dot(common, normalize(g), &w);
        return base_verdict_json(v, g);
    }
    const IndepVerdict v = indep_verdict(g);
    write_dot(common, normalize(g));
    return indep_verdict_json(v, g);
}

std::string verdict_line(PolytopeKind kind, const Multigraph& g) {
    std::string line = "# verdict " + kind_name(kind) + ": ";
    try {
        bool gorenstein = false;
        std::optional<int> delta;
        if (kind == PolytopeKind::Base) {
            const auto v = base_verdict(g);
            gorenstein = v.gorenstein;
            delta = v.delta;
        } else {
            const auto v = indep_verdict(g);
            gorenstein = v.gorenstein;
            delta = v.delta;
        }
        line += gorenstein ? "gorenstein delta=" + std::to_string(*delta) : "not_gorenstein";
    } catch (const PreconditionError& ex) {
        line += ex.what();
    }
    return line + "\n";
}

Json replay_checks(const Decomposition& d, const Multigraph& block) {
    const Multigraph replayed = replay(d.cert);
    Json out{{"replay_matches_realization", replayed == d.realization.replayed},
             {"realization_is_isomorphism", realization_matches(d.realization, block)}};
    if (block.vertex_count() <= kIsomorphismCheckLimit) {
        out["replay_isomorphic"] = isomorphic(replayed, block);
    } else {
        out["replay_isomorphic"] = nullptr;
        out["fingerprint_match"] = fingerprint(replayed) == fingerprint(block);
    }
    return out;
}

bool checks_pass(const Json& checks) {
    for (const auto& [key, value] : checks.items()) {
        if (value.is_boolean() && !value.get<bool>()) {
            return false;
        }
    }
    return true;
}

EdgeId first_edge_with_weight(const Multigraph& g, int delta, int weight) {
    const auto w = weight_function(g, delta);
    if (const auto* conflict = std::get_if<WeightConflict>(&w)) {
        throw PreconditionError("edge " + std::to_string(conflict->edge) + " has no consistent weight at delta " +
                                std::to_string(delta));
    }
    for (const auto& [e, value] : std::get<WeightAssignment>(w).weights) {
        if (value == weight) {
            return e;
        }
    }
    throw PreconditionError("no edge of weight " + std::to_string(weight) + " at delta " + std::to_string(delta));
}

EdgeId edge_argument(const GenerateOptions& o, std::size_t i, const Multigraph& g, int delta, int weight) {
    if (i < o.edges.size()) {
        return o.edges[i];
    }
    if (weight == 0) {
        if (g.edge_count() == 0) {
            throw PreconditionError("graph has no edges");
        }
        return g.edges().front().id;
    }
    return first_edge_with_weight(g, delta, weight);
}

void require_inputs(const GenerateOptions& o, std::size_t lo, std::size_t hi) {
    if (o.inputs.size() < lo || o.inputs.size() > hi) {
        throw PreconditionError("generate " + o.op + " expects " +
                                (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") + " input file(s)");
    }
}

void require_delta(const GenerateOptions& o) {
    if (o.delta < 2) {
        throw PreconditionError("generate " + o.op + " needs --delta >= 2");
    }
}

Multigraph generate_graph(const GenerateOptions& o) {
    std::vector<Multigraph> in;
    for (const auto& path : o.inputs) {
        in.push_back(read_graph_file(path));
    }
    if (o.op == "seed") {
        const int chosen = (o.cycle ? 1 : 0) + (o.k4 ? 1 : 0) + (o.k2 ? 1 : 0);
        if (chosen != 1) {
            throw PreconditionError("generate seed needs exactly one of --cycle N, --k4, --k2");
        }
        if (o.cycle) {
            if (*o.cycle < 2) {
                throw PreconditionError("seed cycle length must be at least 2");
            }
            return cycle_graph(*o.cycle);
        }
        return complete_graph(o.k4 ? 4 : 2);
    }
    if (o.op == "glue") {
        require_inputs(o, 2, SIZE_MAX);
        require_delta(o);
        std::vector<GluePart> parts;
        for (std::size_t i = 0; i < in.size(); ++i) {
            const EdgeId e = edge_argument(o, i, in[i], o.delta, o.delta - 1);
            parts.push_back(GluePart{in[i], e, i < o.flips.size() && o.flips[i]});
        }
        return glue(parts, o.delta);
    }
    if (o.op == "subdivide") {
        require_inputs(o, 1, 1);
        require_delta(o);
        return subdivide(in[0], edge_argument(o, 0, in[0], o.delta, 1), o.delta);
    }
    if (o.op == "collide") {
        require_inputs(o, 2, 2);
        const bool flip = !o.flips.empty() && o.flips.back();
        return collide(in[0], edge_argument(o, 0, in[0], 2, 0), in[1], edge_argument(o, 1, in[1], 2, 0), flip);
    }
    if (o.op == "attach") {
        require_inputs(o, 1, 1);
        require_delta(o);
        return attach_cycle(in[0], edge_argument(o, 0, in[0], o.delta, 0), o.delta);
    }
    if (o.op == "blowup") {
        require_inputs(o, 1, 1);
        if (o.multiplicity < 1) {
            throw PreconditionError("generate blowup needs --m >= 1");
        }
        return blow_up(in[0], o.multiplicity);
    }
    throw PreconditionError("unknown generate operation '" + o.op + "'");
}

SweepKind parse_sweep_kind(const std::string& text) {
    if (text == "base") {
        return SweepKind::Base;
    }
    if (text == "indep" || text == "independence") {
        return SweepKind::Indep;
    }
    if (text == "indep-equivalence") {
        return SweepKind::IndepEquivalence;
    }
    throw ParseError(0, "unknown sweep kind '" + text + "' (expected base, indep or indep-equivalence)");
}

Json replay_document(const ConstructionCert& cert, const Multigraph* expected) {
    const Multigraph g = replay(cert);
    bool gorenstein = false;
    std::optional<int> delta;
    if (cert.kind == PolytopeKind::Base) {
        const auto v = base_verdict(g);
        gorenstein = v.gorenstein;
        delta = v.delta;
    } else {
        const auto v = indep_verdict(g);
        gorenstein = v.gorenstein;
        delta = v.delta;
    }
    Json out{{"summary", cert_summary(cert.root)},
             {"kind", kind_name(cert.kind)},
             {"delta", cert.delta},
             {"graph", graph_json(g)},
             {"checker_status", gorenstein ? "gorenstein" : "not_gorenstein"},
             {"checker_delta", delta ? Json(*delta) : Json(nullptr)},
             {"verdict_matches", gorenstein && delta == cert.delta}};
    if (expected) {
        out["isomorphic_to_graph"] = isomorphic(g, normalize(*expected));
    }
    return out;
}

}  // namespace

CommandOutput cmd_check(PolytopeKind kind, const std::string& file, const CommonOptions& common) {
    const Stopwatch clock;
    const Multigraph g = read_graph_file(file);
    Json doc = check_document(kind, g, common);
    doc["elapsed_ms"] = clock.elapsed_ms();
    return {std::move(doc), {}, kExitOk};
}

CommandOutput cmd_oracle(PolytopeKind kind, const std::string& file, const OracleOptions& options,
                         const CommonOptions& common) {
    const Stopwatch clock;
    const Multigraph input = read_graph_file(file);
    const Multigraph g = normalize(input);
    const LatticePolytope p = polytope_of(g, kind, common.limits);
    const auto witness = gorenstein_search(p, options.max_delta);

    Json edge_order = Json::array();
    for (const Edge& e : g.edges()) {
        edge_order.push_back(e.id);
    }
    Json doc{{"schema_version", kSchemaVersion},
             {"mode", "oracle"},
             {"kind", kind_name(kind)},
             {"graph", Json{{"vertices", input.vertex_count()},
                            {"edges", input.edge_count()},
                            {"loops_removed", g.loops_removed()}}},
             {"edge_order", std::move(edge_order)},
             {"polytope", polytope_json(p)},
             {"status", witness ? "gorenstein" : "not_gorenstein"},
             {"delta", witness ? Json(witness->delta) : Json(nullptr)},
             {"max_delta", options.max_delta.value_or(static_cast<int>(p.dim) + 1)},
             {"witness", witness_point_json(witness)}};
    if (options.hstar) {
        doc["hstar"] = hstar_json(hstar(p, common.limits));
    }
    if (options.normality) {
        doc["normality"] = normality_json(normality_probe(p, *options.normality, common.limits));
        doc["normality"]["kmax"] = *options.normality;
    }
    if (!options.dump_path.empty()) {
        write_file(options.dump_path, dump_polytope(p));
    }
    write_dot(common, g);
    doc["limits"] = limits_json(common.limits);
    doc["elapsed_ms"] = clock.elapsed_ms();
    return {std::move(doc), {}, kExitOk};
}

CommandOutput cmd_certify(PolytopeKind kind, const std::string& file, const CommonOptions& common) {
    const Stopwatch clock;
    const Multigraph input = read_graph_file(file);
    Json blocks = Json::array();
    bool all_pass = true;
    std::optional<int> delta;

    if (kind == PolytopeKind::Base) {
        const BaseVerdict v = base_verdict(input);
        if (!v.gorenstein) {
            Json doc = base_verdict_json(v, input);
            doc["elapsed_ms"] = clock.elapsed_ms();
            return {std::move(doc), {}, kExitNotGorenstein};
        }
        delta = v.delta;
        for (const auto& b : v.blocks) {
            Json entry{{"vertices", b.block.labels()}, {"wildcard", b.wildcard}};
            if (b.wildcard) {
                entry["certificate"] = nullptr;
            } else {
                const Decomposition d = decompose_base(b.block, *v.delta);
                entry["certificate"] = certificate_json(d.cert);
                entry["checks"] = replay_checks(d, b.block);
                all_pass = all_pass && checks_pass(entry["checks"]);
            }
            blocks.push_back(std::move(entry));
        }
        const WeightAssignment w = merged_weights(v);
        write_dot(common, normalize(input), &w);
    } else {
        const IndepVerdict v = indep_verdict(input);
        if (!v.gorenstein) {
            Json doc = indep_verdict_json(v, input);
            doc["elapsed_ms"] = clock.elapsed_ms();
            return {std::move(doc), {}, kExitNotGorenstein};
        }
        delta = v.delta;
        for (const auto& b : v.blocks) {
            Json entry{{"vertices", b.block.labels()}, {"wildcard", false}};
            entry["certificate"] = certificate_json(b.certificate->cert);
            entry["checks"] = replay_checks(*b.certificate, b.block);
            all_pass = all_pass && checks_pass(entry["checks"]);
            blocks.push_back(std::move(entry));
        }
        write_dot(common, normalize(input));
    }

    Json doc{{"schema_version", kSchemaVersion},
             {"mode", "certify"},
             {"kind", kind_name(kind)},
             {"status", "gorenstein"},
             {"delta", delta ? Json(*delta) : Json(nullptr)},
             {"blocks", std::move(blocks)},
             {"replay_verified", all_pass},
             {"elapsed_ms", clock.elapsed_ms()}};
    return {std::move(doc), {}, kExitOk};
}

CommandOutput cmd_generate(const GenerateOptions& options, const CommonOptions& common) {
    const Multigraph g = generate_graph(options);
    std::string text = format_graph(g);
    text += verdict_line(PolytopeKind::Base, g);
    text += verdict_line(PolytopeKind::Independence, g);
    write_dot(common, g);
    if (!options.output_path.empty()) {
        write_file(options.output_path, text);
    }
    return {nullptr, std::move(text), kExitOk};
}

CommandOutput cmd_sweep(const SweepCliOptions& options, const CommonOptions& common) {
    const Stopwatch clock;
    const SweepKind kind = parse_sweep_kind(options.kind);
    const std::size_t limit = options.cross_validate ? kSweepOracleLimit : kSweepCheckerLimit;
    if (options.max_vertices > limit) {
        throw ResourceError("sweep is limited to " + std::to_string(limit) + " vertices" +
                            (options.cross_validate ? " with --cross-validate" : ""));
    }
    if (options.cross_validate && kind == SweepKind::IndepEquivalence) {
        throw PreconditionError("--cross-validate applies to base and indep sweeps");
    }
    SweepOptions so;
    so.max_vertices = options.max_vertices;
    so.kind = kind;
    so.cross_validate = options.cross_validate;
    so.jobs = options.jobs;
    so.limits = common.limits;
    const SweepReport r = run_sweep(so);

    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back(Json{{"graph", m.graph}, {"detail", m.detail}});
    }
    Json census = Json::object();
    for (const auto& [key, count] : r.census) {
        census[key] = count;
    }
    Json doc{{"schema_version", kSchemaVersion},
             {"mode", "sweep"},
             {"kind", options.kind},
             {"max_vertices", options.max_vertices},
             {"cross_validate", options.cross_validate},
             {"jobs", options.jobs},
             {"graphs", r.graphs},
             {"census", std::move(census)},
             {"mismatch_count", r.mismatches.size()},
             {"mismatches", std::move(mismatches)},
             {"multi_delta", r.multi_delta},
             {"certificates_checked", r.certificates_checked},
             {"oracle_checked", r.oracle_checked},
             {"elapsed_ms", clock.elapsed_ms()}};
    return {std::move(doc), {}, kExitOk};
}

CommandOutput cmd_replay(const std::string& file, const std::string& graph_file, const CommonOptions& common) {
    const Json j = read_json_file(file);
    std::optional<Multigraph> expected;
    if (!graph_file.empty()) {
        expected = read_graph_file(graph_file);
    }
    Json certificates = Json::array();
    bool all_match = true;
    auto add = [&](const Json& cert_json, const Multigraph* target) {
        const ConstructionCert cert = certificate_from_json(cert_json);
        Json entry = replay_document(cert, target);
        all_match = all_match && entry["verdict_matches"].get<bool>() && entry.value("isomorphic_to_graph", true);
        certificates.push_back(std::move(entry));
    };
    if (j.contains("root")) {
        add(j, expected ? &*expected : nullptr);
        if (certificates.size() == 1) {
            write_dot(common, graph_from_json(certificates[0]["graph"]));
        }
    } else if (j.contains("blocks")) {
        for (const auto& b : j.at("blocks")) {
            if (b.contains("certificate") && !b.at("certificate").is_null()) {
                add(b.at("certificate"), nullptr);
            }
        }
    } else {
        throw ParseError(0, "'" + file + "' is neither a certificate nor a certify report");
    }
    Json doc{{"schema_version", kSchemaVersion},
             {"mode", "replay"},
             {"certificates", std::move(certificates)},
             {"all_match", all_match}};
    return {std::move(doc), {}, kExitOk};
}

}  // namespace gorenstein::cli
