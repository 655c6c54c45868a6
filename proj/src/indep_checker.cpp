#include "gorenstein/indep_checker.hpp"

#include <algorithm>

#include "gorenstein/errors.hpp"
#include "gorenstein/flats.hpp"
#include "gorenstein/graph_algorithms.hpp"

namespace gorenstein {

namespace {

void require_simple_two_connected(const Multigraph& h, int delta) {
    if (!h.is_simple()) {
        throw PreconditionError("base graph must be simple");
    }
    if (!is_two_connected(h)) {
        throw PreconditionError("base graph must be 2-connected");
    }
    if (delta < 2) {
        throw PreconditionError("delta must be at least 2");
    }
}

void set_block(IndepWitness& w, std::size_t block) {
    std::visit([block](auto& x) { x.block = block; }, w);
}

struct Removal {
    std::string u;
    std::string v;
    std::vector<std::string> inner;  // from u to v
    std::vector<EdgeId> path_edges;  // from u to v
};

/// One removable attached cycle: an ear with delta edges whose endpoints are adjacent.
std::optional<Removal> find_removal(const Multigraph& g, int delta) {
    const std::size_t len = static_cast<std::size_t>(delta);
    if (is_cycle_graph(g)) {
        if (g.vertex_count() != len + 1) {
            return std::nullopt;
        }
        // Keep the edge between vertex 0 and its smaller neighbour; walk the rest.
        const auto adj = g.simple_adjacency();
        Removal r;
        VertexId prev = 0;
        VertexId cur = adj[0][1];
        r.u = g.label(0);
        r.path_edges.push_back(g.edges_between(0, cur).at(0));
        while (cur != adj[0][0]) {
            r.inner.push_back(g.label(cur));
            VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            r.path_edges.push_back(g.edges_between(cur, next).at(0));
            prev = cur;
            cur = next;
        }
        r.v = g.label(cur);
        return r;
    }
    for (const Ear& ear : ears(g).ears) {
        if (ear.length() != len || g.multiplicity(ear.path.front(), ear.path.back()) == 0) {
            continue;
        }
        Removal r;
        r.u = g.label(ear.path.front());
        r.v = g.label(ear.path.back());
        for (std::size_t i = 1; i + 1 < ear.path.size(); ++i) {
            r.inner.push_back(g.label(ear.path[i]));
        }
        r.path_edges = ear.edges;
        return r;
    }
    return std::nullopt;
}

Decomposition blow_up_realized(const Decomposition& simple, const Multigraph& block, std::size_t m, int delta) {
    Decomposition d;
    d.cert.kind = PolytopeKind::Independence;
    d.cert.delta = delta;
    if (m == 1) {
        d.cert.root = simple.cert.root;
        d.realization = simple.realization;
        return d;
    }
    d.cert.root.kind = NodeKind::BlowUp;
    d.cert.root.multiplicity = m;
    d.cert.root.children = {simple.cert.root};
    d.realization.replayed = blow_up_step(simple.realization.replayed, m).graph;
    d.realization.vertex_label = simple.realization.vertex_label;
    for (const Edge& e : simple.realization.replayed.edges()) {
        const Edge original = *block.find_edge(simple.realization.edge_id.at(e.id));
        for (EdgeId copy : block.edges_between(original.u, original.v)) {
            d.realization.edge_id.push_back(copy);
        }
    }
    return d;
}

}  // namespace

std::optional<IndepWitness> check_club(const Multigraph& h, int delta) {
    require_simple_two_connected(h, delta);
    for (const auto& s : indecomposable_flats(h)) {
        const std::int64_t e = static_cast<std::int64_t>(induced_edges(h, s).size());
        const std::int64_t lhs = (delta - 1) * e + 1;
        const std::int64_t rhs = delta * (static_cast<std::int64_t>(s.size()) - 1);
        if (lhs != rhs) {
            return ClubViolated{0, s, lhs, rhs};
        }
    }
    return std::nullopt;
}

std::optional<IndepWitness> check_chordal_k4free(const Multigraph& h, int delta) {
    require_simple_two_connected(h, delta);
    for (std::size_t len : chordless_cycles(h)) {
        if (len != static_cast<std::size_t>(delta + 1)) {
            return WrongChordlessCycle{0, len};
        }
    }
    if (!is_k4_minor_free(h)) {
        return K4MinorFound{0};
    }
    return std::nullopt;
}

std::optional<Decomposition> recognize_cycle_construction_realized(const Multigraph& h, int delta) {
    require_simple_two_connected(h, delta);
    std::vector<Removal> removals;
    Multigraph g = h;
    while (g.vertex_count() > 2) {
        auto r = find_removal(g, delta);
        if (!r) {
            return std::nullopt;
        }
        std::vector<VertexId> drop;
        for (const auto& label : r->inner) {
            drop.push_back(*g.find_vertex(label));
        }
        g = remove_vertices(g, drop);
        removals.push_back(std::move(*r));
    }

    Decomposition d;
    d.cert.kind = PolytopeKind::Independence;
    d.cert.delta = delta;
    d.cert.root = seed_k2_node();
    d.realization.replayed = complete_graph(2);
    d.realization.vertex_label = {g.label(0), g.label(1)};
    d.realization.edge_id = {g.edges().front().id};

    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        const Realization& cur = d.realization;
        std::optional<Edge> target;
        for (const Edge& e : cur.replayed.edges()) {
            auto ends = std::minmax(cur.vertex_label[e.u], cur.vertex_label[e.v]);
            if (ends == std::minmax(it->u, it->v)) {
                target = e;
                break;
            }
        }
        if (!target) {
            throw InternalContradiction("attachment edge vanished during cycle recognition");
        }
        std::vector<std::string> fresh_labels = it->inner;
        std::vector<EdgeId> fresh_edges = it->path_edges;
        if (cur.vertex_label[target->u] != it->u) {
            std::reverse(fresh_labels.begin(), fresh_labels.end());
            std::reverse(fresh_edges.begin(), fresh_edges.end());
        }
        StepResult step = attach_cycle_step(cur.replayed, target->id, static_cast<std::size_t>(delta));
        Realization next;
        next.replayed = std::move(step.graph);
        for (const Origin& o : step.vertex_origin) {
            next.vertex_label.push_back(o.part == kFresh ? fresh_labels.at(o.index) : cur.vertex_label.at(o.index));
        }
        for (const Origin& o : step.edge_origin) {
            next.edge_id.push_back(o.part == kFresh ? fresh_edges.at(o.index) : cur.edge_id.at(o.index));
        }
        CertNode node;
        node.kind = NodeKind::AttachCycle;
        node.cycle_length = static_cast<std::size_t>(delta + 1);
        node.children = {std::move(d.cert.root)};
        node.edges = {EdgeRef{target->id, false}};
        d.cert.root = std::move(node);
        d.realization = std::move(next);
    }
    return d;
}

std::optional<ConstructionCert> recognize_cycle_construction(const Multigraph& h, int delta) {
    auto d = recognize_cycle_construction_realized(h, delta);
    if (!d) {
        return std::nullopt;
    }
    return d->cert;
}

IndepVerdict indep_verdict(const Multigraph& input) {
    const Multigraph g = normalize(input);
    IndepVerdict verdict;
    verdict.loops_removed = g.loops_removed();

    for (Multigraph& b : blocks(g)) {
        const std::size_t index = verdict.blocks.size();
        auto factor = blow_up_factor(b);
        if (!factor) {
            std::vector<std::size_t> sizes;
            for (const Edge& e : b.edges()) {
                sizes.push_back(b.multiplicity(e.u, e.v));
            }
            verdict.witness = NonUniformMultiplicity{index, sizes.front(),
                                                     *std::find_if(sizes.begin(), sizes.end(),
                                                                   [&](std::size_t s) { return s != sizes.front(); })};
            return verdict;
        }
        if (verdict.multiplicity && *verdict.multiplicity != factor->multiplicity) {
            verdict.witness = NonUniformMultiplicity{index, *verdict.multiplicity, factor->multiplicity};
            return verdict;
        }
        verdict.multiplicity = factor->multiplicity;
        IndepBlockReport report;
        report.block = std::move(b);
        report.multiplicity = factor->multiplicity;
        report.base = std::move(factor->base);
        verdict.blocks.push_back(std::move(report));
    }

    if (!verdict.multiplicity) {
        verdict.gorenstein = true;
        verdict.delta = 1;
        return verdict;
    }
    const int delta = static_cast<int>(*verdict.multiplicity) + 1;
    for (std::size_t i = 0; i < verdict.blocks.size(); ++i) {
        auto& report = verdict.blocks[i];
        auto club = check_club(report.base, delta);
        auto structural = check_chordal_k4free(report.base, delta);
        auto built = recognize_cycle_construction_realized(report.base, delta);
        if (club.has_value() == built.has_value()) {
            throw InternalContradiction("block " + std::to_string(i) + ": club equalities and cycle construction " +
                                        "disagree at delta " + std::to_string(delta));
        }
        if (club.has_value() != structural.has_value()) {
            verdict.chordal_disagreements.push_back(i);
        }
        if (club) {
            set_block(*club, i);
            if (structural) {
                set_block(*structural, i);
                verdict.witness = *structural;
            } else {
                verdict.witness = *club;
            }
            verdict.club_violation = std::get<ClubViolated>(*club);
            verdict.delta.reset();
            return verdict;
        }
        report.certificate = blow_up_realized(*built, report.block, report.multiplicity, delta);
    }
    verdict.gorenstein = true;
    verdict.delta = delta;
    return verdict;
}

}  // namespace gorenstein
