#include "gorenstein/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gorenstein/base_checker.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/flats.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/mask_graph.hpp"

namespace gorenstein {

namespace {

Multigraph labelled_vertices(std::size_t n) {
    Multigraph g;
    for (std::size_t v = 0; v < n; ++v) {
        g.add_vertex(std::to_string(v));
    }
    return g;
}

Edge require_edge(const Multigraph& g, EdgeId id) {
    auto e = g.find_edge(id);
    if (!e) {
        throw PreconditionError("unknown edge id " + std::to_string(id));
    }
    return *e;
}

/// 1 when G\e is 2-connected, delta-1 when G/e is; PreconditionError on a conflict.
int edge_weight(const Multigraph& g, EdgeId e, int delta) {
    const bool del = is_two_connected(minor_op(g, e, MinorKind::Delete));
    const bool con = is_two_connected(minor_op(g, e, MinorKind::Contract));
    if (del && con && delta != 2) {
        throw PreconditionError("edge " + std::to_string(e) + " has conflicting weights at delta " +
                                std::to_string(delta));
    }
    if (del) {
        return 1;
    }
    if (con) {
        return delta - 1;
    }
    throw PreconditionError("edge " + std::to_string(e) + " has no weight (graph not 2-connected)");
}

void require_spade(const Multigraph& g, int delta, const std::string& what) {
    if (!g.is_simple()) {
        throw PreconditionError(what + " must be a simple graph");
    }
    if (check_spade(g, delta)) {
        throw PreconditionError(what + " fails the base flat equalities at delta " + std::to_string(delta));
    }
}

std::string kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::SeedCycle: return "seed cycle";
        case NodeKind::SeedK4: return "seed K4";
        case NodeKind::SeedK2: return "seed K2";
        case NodeKind::Glue: return "glue";
        case NodeKind::Subdivide: return "subdivide";
        case NodeKind::Collide: return "collide";
        case NodeKind::AttachCycle: return "attach cycle";
        case NodeKind::BlowUp: return "blow up";
    }
    return "?";
}

void require(bool cond, NodeKind k, const std::string& what) {
    if (!cond) {
        throw PreconditionError("certificate " + kind_name(k) + " node: " + what);
    }
}

Multigraph replay_node(const CertNode& node, PolytopeKind kind, int delta) {
    const NodeKind k = node.kind;
    switch (k) {
        case NodeKind::SeedCycle:
            require(node.children.empty(), k, "seeds have no children");
            require(node.cycle_length >= 3, k, "cycle length must be at least 3");
            require(kind == PolytopeKind::Base && delta > 2 && node.cycle_length == static_cast<std::size_t>(delta),
                    k, "cycle seeds are delta-cycles of a base certificate with delta > 2");
            return cycle_graph(node.cycle_length);
        case NodeKind::SeedK4:
            require(node.children.empty(), k, "seeds have no children");
            require(kind == PolytopeKind::Base && delta == 2, k, "K4 seeds belong to base certificates with delta = 2");
            return complete_graph(4);
        case NodeKind::SeedK2:
            require(node.children.empty(), k, "seeds have no children");
            return complete_graph(2);
        case NodeKind::Glue: {
            require(kind == PolytopeKind::Base && delta > 2, k, "gluing needs a base certificate with delta > 2");
            require(node.children.size() == static_cast<std::size_t>(delta - 1), k, "needs exactly delta-1 children");
            require(node.edges.size() == node.children.size(), k, "needs one glued edge per child");
            std::vector<Multigraph> parts;
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                parts.push_back(replay_node(node.children[i], kind, delta));
                require(parts.back().has_edge(node.edges[i].edge), k, "glued edge missing from child");
                require(edge_weight(parts.back(), node.edges[i].edge, delta) == delta - 1, k,
                        "glued edge must have weight delta-1 in its child");
            }
            return glue_step(parts, node.edges, false).graph;
        }
        case NodeKind::Subdivide: {
            require(kind == PolytopeKind::Base && delta > 2, k, "subdivision needs a base certificate with delta > 2");
            require(node.children.size() == 1 && node.edges.size() == 1, k, "needs one child and one edge");
            Multigraph child = replay_node(node.children[0], kind, delta);
            require(child.has_edge(node.edges[0].edge), k, "edge missing from child");
            require(edge_weight(child, node.edges[0].edge, delta) == 1, k, "subdivided edge must have weight 1");
            return subdivide_step(child, node.edges[0].edge, static_cast<std::size_t>(delta - 1)).graph;
        }
        case NodeKind::Collide: {
            require(kind == PolytopeKind::Base && delta == 2, k, "collision needs a base certificate with delta = 2");
            require(node.children.size() == 2 && node.edges.size() == 2, k, "needs two children and two edges");
            std::vector<Multigraph> parts{replay_node(node.children[0], kind, delta),
                                          replay_node(node.children[1], kind, delta)};
            require(parts[0].has_edge(node.edges[0].edge) && parts[1].has_edge(node.edges[1].edge), k,
                    "edge missing from child");
            return glue_step(parts, node.edges, true).graph;
        }
        case NodeKind::AttachCycle: {
            require(kind == PolytopeKind::Independence, k, "cycle attachment belongs to independence certificates");
            require(node.children.size() == 1 && node.edges.size() == 1, k, "needs one child and one edge");
            require(node.cycle_length == static_cast<std::size_t>(delta + 1), k, "attached cycle must have length delta+1");
            Multigraph child = replay_node(node.children[0], kind, delta);
            require(child.has_edge(node.edges[0].edge), k, "edge missing from child");
            return attach_cycle_step(child, node.edges[0].edge, static_cast<std::size_t>(delta)).graph;
        }
        case NodeKind::BlowUp: {
            require(kind == PolytopeKind::Independence, k, "blow-ups belong to independence certificates");
            require(node.children.size() == 1, k, "needs one child");
            require(node.multiplicity >= 1 && node.multiplicity == static_cast<std::size_t>(delta - 1), k,
                    "multiplicity must equal delta-1");
            require(node.children[0].kind != NodeKind::BlowUp, k, "nested blow-ups");
            return blow_up_step(replay_node(node.children[0], kind, delta), node.multiplicity).graph;
        }
    }
    throw PreconditionError("unknown certificate node");
}

// --- decomposition helpers ---------------------------------------------------

struct DecomposeContext {
    int delta;
    EdgeId next_virtual;
};

Realization combine(const StepResult& step, std::span<const Realization> parts,
                    const std::vector<std::string>& fresh_labels, const std::vector<EdgeId>& fresh_edges) {
    Realization r;
    r.replayed = step.graph;
    for (const Origin& o : step.vertex_origin) {
        r.vertex_label.push_back(o.part == kFresh ? fresh_labels.at(o.index) : parts[o.part].vertex_label.at(o.index));
    }
    for (const Origin& o : step.edge_origin) {
        r.edge_id.push_back(o.part == kFresh ? fresh_edges.at(o.index) : parts[o.part].edge_id.at(o.index));
    }
    return r;
}

EdgeRef ref_for(const Realization& r, EdgeId target) {
    for (std::size_t k = 0; k < r.edge_id.size(); ++k) {
        if (r.edge_id[k] == target) {
            return EdgeRef{k, false};
        }
    }
    throw InternalContradiction("decomposition lost track of edge " + std::to_string(target));
}

const std::string& first_label(const Realization& r, EdgeId replay_edge) {
    return r.vertex_label.at(require_edge(r.replayed, replay_edge).u);
}

Multigraph with_virtual_edge(Multigraph g, const std::string& a, const std::string& b, EdgeId id) {
    g.add_edge_with_id(id, *g.find_vertex(a), *g.find_vertex(b));
    return g;
}

/// Connected components of G minus `drop`, as vertex index lists of G.
std::vector<std::vector<VertexId>> components_without(const Multigraph& g, VertexMask drop) {
    const MaskGraph mg(g);
    VertexMask rest = mg.all() & ~drop;
    std::vector<std::vector<VertexId>> out;
    while (rest != 0) {
        VertexMask comp = mg.reach(lowest(rest), rest);
        rest &= ~comp;
        out.push_back(mask_to_vertices(comp));
    }
    return out;
}

std::vector<VertexId> with_vertices(std::vector<VertexId> vs, std::initializer_list<VertexId> extra) {
    vs.insert(vs.end(), extra);
    std::sort(vs.begin(), vs.end());
    return vs;
}

Decomposition decompose_rec(const Multigraph& g, DecomposeContext& ctx, bool top);

Decomposition seed_cycle_decomposition(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const auto adj = g.simple_adjacency();
    std::vector<VertexId> walk{0};
    VertexId prev = 0;
    VertexId cur = 0;
    for (std::size_t i = 1; i < n; ++i) {
        VertexId next = (i == 1) ? adj[cur][0] : (adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    Decomposition d;
    d.cert.root = seed_cycle_node(n);
    d.realization.replayed = cycle_graph(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.realization.vertex_label.push_back(g.label(walk[i]));
        d.realization.edge_id.push_back(g.edges_between(walk[i], walk[(i + 1) % n]).at(0));
    }
    return d;
}

Decomposition seed_k4_decomposition(const Multigraph& g) {
    Decomposition d;
    d.cert.root = seed_k4_node();
    d.realization.replayed = complete_graph(4);
    for (VertexId v = 0; v < 4; ++v) {
        d.realization.vertex_label.push_back(g.label(v));
    }
    for (const Edge& e : d.realization.replayed.edges()) {
        d.realization.edge_id.push_back(g.edges_between(e.u, e.v).at(0));
    }
    return d;
}

Decomposition decompose_collision(const Multigraph& g, DecomposeContext& ctx) {
    if (is_three_connected(g)) {
        if (g.vertex_count() != 4 || g.edge_count() != 6) {
            throw InternalContradiction("3-connected graph satisfying the delta=2 equalities is not K4");
        }
        return seed_k4_decomposition(g);
    }
    const std::size_t n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            auto comps = components_without(g, bit(a) | bit(b));
            if (comps.size() < 2) {
                continue;
            }
            if (comps.size() != 2) {
                throw InternalContradiction("separating pair leaves more than two components");
            }
            if (g.multiplicity(a, b) != 0) {
                throw InternalContradiction("separating pair is joined by an edge");
            }
            const EdgeId x = ctx.next_virtual++;
            std::vector<Decomposition> parts;
            for (std::size_t i = 0; i < 2; ++i) {
                Multigraph side = induced_subgraph(g, with_vertices(comps[1 - i], {a, b}));
                parts.push_back(decompose_rec(with_virtual_edge(side, g.label(a), g.label(b), x), ctx, false));
            }
            std::vector<EdgeRef> refs{ref_for(parts[0].realization, x), ref_for(parts[1].realization, x)};
            refs[1].flip = first_label(parts[1].realization, refs[1].edge) != first_label(parts[0].realization, refs[0].edge);
            std::vector<Multigraph> graphs{parts[0].realization.replayed, parts[1].realization.replayed};
            std::vector<Realization> reals{parts[0].realization, parts[1].realization};
            Decomposition d;
            d.realization = combine(glue_step(graphs, refs, true), reals, {}, {});
            d.cert.root.kind = NodeKind::Collide;
            d.cert.root.children = {parts[0].cert.root, parts[1].cert.root};
            d.cert.root.edges = refs;
            return d;
        }
    }
    throw InternalContradiction("graph is neither 3-connected nor has a separating pair");
}

Decomposition decompose_weight_one_edge(const Multigraph& g, const Edge& e, DecomposeContext& ctx) {
    auto comps = components_without(g, bit(e.u) | bit(e.v));
    if (comps.size() != static_cast<std::size_t>(ctx.delta - 1)) {
        throw InternalContradiction("weight-1 edge splits the graph into " + std::to_string(comps.size()) +
                                    " parts instead of delta-1");
    }
    std::vector<Decomposition> parts;
    for (const auto& comp : comps) {
        parts.push_back(decompose_rec(induced_subgraph(g, with_vertices(comp, {e.u, e.v})), ctx, false));
    }
    std::vector<EdgeRef> refs;
    std::vector<Multigraph> graphs;
    std::vector<Realization> reals;
    for (const auto& p : parts) {
        refs.push_back(ref_for(p.realization, e.id));
        refs.back().flip = first_label(p.realization, refs.back().edge) != first_label(parts[0].realization, refs[0].edge);
        graphs.push_back(p.realization.replayed);
        reals.push_back(p.realization);
    }
    Decomposition d;
    d.realization = combine(glue_step(graphs, refs, false), reals, {}, {});
    d.cert.root.kind = NodeKind::Glue;
    for (auto& p : parts) {
        d.cert.root.children.push_back(std::move(p.cert.root));
    }
    d.cert.root.edges = refs;
    return d;
}

Decomposition decompose_ear(const Multigraph& g, DecomposeContext& ctx) {
    const std::size_t want = static_cast<std::size_t>(ctx.delta - 1);
    const EarList list = ears(g);
    auto it = std::find_if(list.ears.begin(), list.ears.end(), [want](const Ear& ear) { return ear.length() == want; });
    if (it == list.ears.end()) {
        throw InternalContradiction("no (delta-1)-ear in a graph with all weights delta-1");
    }
    const Ear& ear = *it;
    const VertexId p0 = ear.path.front();
    const VertexId ps = ear.path.back();
    if (g.multiplicity(p0, ps) != 0) {
        throw InternalContradiction("endpoints of a (delta-1)-ear are adjacent");
    }
    if (is_two_connected(contract_edges(g, ear.edges).graph)) {
        throw InternalContradiction("contracting a (delta-1)-ear leaves a 2-connected graph");
    }
    std::vector<VertexId> inner(ear.path.begin() + 1, ear.path.end() - 1);
    const EdgeId x = ctx.next_virtual++;
    Multigraph reduced = with_virtual_edge(remove_vertices(g, inner), g.label(p0), g.label(ps), x);
    Decomposition child = decompose_rec(reduced, ctx, false);

    const EdgeRef ref = ref_for(child.realization, x);
    std::vector<std::string> fresh_labels;
    for (VertexId v : inner) {
        fresh_labels.push_back(g.label(v));
    }
    std::vector<EdgeId> fresh_edges = ear.edges;
    if (first_label(child.realization, ref.edge) != g.label(p0)) {
        std::reverse(fresh_labels.begin(), fresh_labels.end());
        std::reverse(fresh_edges.begin(), fresh_edges.end());
    }
    std::vector<Realization> reals{child.realization};
    Decomposition d;
    d.realization = combine(subdivide_step(child.realization.replayed, ref.edge, want), reals, fresh_labels, fresh_edges);
    d.cert.root.kind = NodeKind::Subdivide;
    d.cert.root.children = {std::move(child.cert.root)};
    d.cert.root.edges = {ref};
    return d;
}

Decomposition decompose_rec(const Multigraph& g, DecomposeContext& ctx, bool top) {
    if (check_spade(g, ctx.delta)) {
        if (top) {
            throw PreconditionError("graph fails the base flat equalities at delta " + std::to_string(ctx.delta));
        }
        throw InternalContradiction("decomposition produced a part failing the flat equalities");
    }
    if (ctx.delta == 2) {
        return decompose_collision(g, ctx);
    }
    if (is_cycle_graph(g)) {
        if (g.vertex_count() != static_cast<std::size_t>(ctx.delta)) {
            throw InternalContradiction("cycle of the wrong length satisfies the flat equalities");
        }
        return seed_cycle_decomposition(g);
    }
    const auto w = std::get<WeightAssignment>(weight_function(g, ctx.delta));
    for (const Edge& e : g.edges()) {
        if (w.at(e.id) == 1) {
            return decompose_weight_one_edge(g, e, ctx);
        }
    }
    return decompose_ear(g, ctx);
}

}  // namespace

// --- seeds and steps ----------------------------------------------------------

CertNode seed_cycle_node(std::size_t length) {
    CertNode n;
    n.kind = NodeKind::SeedCycle;
    n.cycle_length = length;
    return n;
}

CertNode seed_k4_node() {
    CertNode n;
    n.kind = NodeKind::SeedK4;
    return n;
}

CertNode seed_k2_node() {
    CertNode n;
    n.kind = NodeKind::SeedK2;
    return n;
}

Multigraph cycle_graph(std::size_t n) {
    if (n < 2) {
        throw PreconditionError("cycle needs at least two vertices");
    }
    Multigraph g = labelled_vertices(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

Multigraph complete_graph(std::size_t n) {
    Multigraph g = labelled_vertices(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

StepResult glue_step(std::span<const Multigraph> parts, std::span<const EdgeRef> edges, bool drop_glued) {
    if (parts.empty() || parts.size() != edges.size()) {
        throw PreconditionError("glue needs one edge per part");
    }
    StepResult r;
    std::vector<std::vector<VertexId>> vmap(parts.size());
    const Edge e0 = require_edge(parts[0], edges[0].edge);
    for (VertexId v = 0; v < parts[0].vertex_count(); ++v) {
        vmap[0].push_back(r.graph.add_vertex(std::to_string(v)));
        r.vertex_origin.push_back({0, v});
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Edge ei = require_edge(parts[i], edges[i].edge);
        const VertexId to_u = edges[i].flip ? e0.v : e0.u;
        const VertexId to_v = edges[i].flip ? e0.u : e0.v;
        vmap[i].resize(parts[i].vertex_count());
        for (VertexId v = 0; v < parts[i].vertex_count(); ++v) {
            if (v == ei.u) {
                vmap[i][v] = to_u;
            } else if (v == ei.v) {
                vmap[i][v] = to_v;
            } else {
                vmap[i][v] = r.graph.add_vertex(std::to_string(r.graph.vertex_count()));
                r.vertex_origin.push_back({i, v});
            }
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const Edge& e : parts[i].edges()) {
            if (e.id == edges[i].edge && (i > 0 || drop_glued)) {
                continue;
            }
            r.graph.add_edge(vmap[i][e.u], vmap[i][e.v]);
            r.edge_origin.push_back({i, e.id});
        }
    }
    return r;
}

StepResult subdivide_step(const Multigraph& g, EdgeId id, std::size_t path_edges) {
    if (path_edges < 1) {
        throw PreconditionError("subdivision path needs at least one edge");
    }
    const Edge target = require_edge(g, id);
    StepResult r;
    r.graph = labelled_vertices(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        r.vertex_origin.push_back({0, v});
    }
    for (const Edge& e : g.edges()) {
        if (e.id != id) {
            r.graph.add_edge(e.u, e.v);
            r.edge_origin.push_back({0, e.id});
        }
    }
    VertexId prev = target.u;
    for (std::size_t k = 0; k < path_edges; ++k) {
        VertexId next = target.v;
        if (k + 1 < path_edges) {
            next = r.graph.add_vertex(std::to_string(r.graph.vertex_count()));
            r.vertex_origin.push_back({kFresh, k});
        }
        r.graph.add_edge(prev, next);
        r.edge_origin.push_back({kFresh, k});
        prev = next;
    }
    return r;
}

StepResult attach_cycle_step(const Multigraph& g, EdgeId id, std::size_t path_edges) {
    if (path_edges < 1) {
        throw PreconditionError("attached path needs at least one edge");
    }
    const Edge target = require_edge(g, id);
    StepResult r;
    r.graph = labelled_vertices(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        r.vertex_origin.push_back({0, v});
    }
    for (const Edge& e : g.edges()) {
        r.graph.add_edge(e.u, e.v);
        r.edge_origin.push_back({0, e.id});
    }
    VertexId prev = target.u;
    for (std::size_t k = 0; k < path_edges; ++k) {
        VertexId next = target.v;
        if (k + 1 < path_edges) {
            next = r.graph.add_vertex(std::to_string(r.graph.vertex_count()));
            r.vertex_origin.push_back({kFresh, k});
        }
        r.graph.add_edge(prev, next);
        r.edge_origin.push_back({kFresh, k});
        prev = next;
    }
    return r;
}

StepResult blow_up_step(const Multigraph& g, std::size_t m) {
    if (m < 1) {
        throw PreconditionError("blow-up multiplicity must be at least 1");
    }
    StepResult r;
    r.graph = labelled_vertices(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        r.vertex_origin.push_back({0, v});
    }
    for (const Edge& e : g.edges()) {
        for (std::size_t k = 0; k < m; ++k) {
            r.graph.add_edge(e.u, e.v);
            r.edge_origin.push_back({0, e.id});
        }
    }
    return r;
}

Multigraph replay(const ConstructionCert& cert) {
    if (cert.delta < 2) {
        throw PreconditionError("certificate delta must be at least 2");
    }
    return replay_node(cert.root, cert.kind, cert.delta);
}

std::size_t cert_depth(const CertNode& node) {
    std::size_t d = 0;
    for (const auto& c : node.children) {
        d = std::max(d, cert_depth(c) + 1);
    }
    return d;
}

// --- generative operations ----------------------------------------------------

Multigraph glue(std::span<const GluePart> parts, int delta) {
    if (delta < 3) {
        throw PreconditionError("gluing is defined for delta > 2");
    }
    if (parts.size() != static_cast<std::size_t>(delta - 1)) {
        throw PreconditionError("glue at delta " + std::to_string(delta) + " needs exactly " +
                                std::to_string(delta - 1) + " parts, got " + std::to_string(parts.size()));
    }
    std::vector<Multigraph> graphs;
    std::vector<EdgeRef> refs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string what = "glue part " + std::to_string(i);
        require_edge(parts[i].graph, parts[i].edge);
        require_spade(parts[i].graph, delta, what);
        if (edge_weight(parts[i].graph, parts[i].edge, delta) != delta - 1) {
            throw PreconditionError(what + ": glued edge has weight 1, needs delta-1");
        }
        graphs.push_back(canonical_copy(parts[i].graph));
        refs.push_back({edge_index(parts[i].graph, parts[i].edge), parts[i].flip});
    }
    return glue_step(graphs, refs, false).graph;
}

Multigraph subdivide(const Multigraph& g, EdgeId e, int delta) {
    require_edge(g, e);
    if (delta < 2) {
        throw PreconditionError("delta must be at least 2");
    }
    if (delta == 2) {
        return g;
    }
    require_spade(g, delta, "subdivided graph");
    if (edge_weight(g, e, delta) != 1) {
        throw PreconditionError("target edge has weight delta-1; only weight-1 edges can be subdivided");
    }
    return subdivide_step(canonical_copy(g), edge_index(g, e), static_cast<std::size_t>(delta - 1)).graph;
}

Multigraph collide(const Multigraph& g1, EdgeId e1, const Multigraph& g2, EdgeId e2, bool flip) {
    require_edge(g1, e1);
    require_edge(g2, e2);
    require_spade(g1, 2, "first collided graph");
    require_spade(g2, 2, "second collided graph");
    std::vector<Multigraph> graphs{canonical_copy(g1), canonical_copy(g2)};
    std::vector<EdgeRef> refs{{edge_index(g1, e1), false}, {edge_index(g2, e2), flip}};
    return glue_step(graphs, refs, true).graph;
}

Multigraph attach_cycle(const Multigraph& h, EdgeId e, int delta) {
    require_edge(h, e);
    if (!h.is_simple()) {
        throw PreconditionError("cycle attachment needs a simple graph");
    }
    if (delta < 2) {
        throw PreconditionError("delta must be at least 2");
    }
    return attach_cycle_step(canonical_copy(h), edge_index(h, e), static_cast<std::size_t>(delta)).graph;
}

Multigraph blow_up(const Multigraph& h, std::size_t m) {
    if (m < 1) {
        throw PreconditionError("blow-up multiplicity must be at least 1");
    }
    Multigraph out;
    for (const auto& label : h.labels()) {
        out.add_vertex(label);
    }
    for (const Edge& e : h.edges()) {
        for (std::size_t k = 0; k < m; ++k) {
            out.add_edge(e.u, e.v);
        }
    }
    out.set_loops_removed(h.loops_removed());
    return out;
}

// --- inverse direction -----------------------------------------------------------

Decomposition decompose_base(const Multigraph& g, int delta) {
    if (delta < 2) {
        throw PreconditionError("delta must be at least 2");
    }
    if (!g.is_simple()) {
        throw NotSimpleError();
    }
    if (!is_two_connected(g) || g.edge_count() < 2) {
        throw PreconditionError("decomposition needs a 2-connected graph with at least two edges");
    }
    DecomposeContext ctx{delta, g.next_edge_id()};
    Decomposition d = decompose_rec(g, ctx, true);
    d.cert.kind = PolytopeKind::Base;
    d.cert.delta = delta;
    return d;
}

bool realization_matches(const Realization& r, const Multigraph& g) {
    const Multigraph& h = r.replayed;
    if (h.vertex_count() != g.vertex_count() || h.edge_count() != g.edge_count() ||
        r.vertex_label.size() != h.vertex_count() || r.edge_id.size() != h.edge_count()) {
        return false;
    }
    std::vector<VertexId> image;
    std::vector<bool> hit(g.vertex_count(), false);
    for (const auto& label : r.vertex_label) {
        auto v = g.find_vertex(label);
        if (!v || hit[*v]) {
            return false;
        }
        hit[*v] = true;
        image.push_back(*v);
    }
    std::vector<EdgeId> seen;
    for (const Edge& e : h.edges()) {
        const EdgeId target = r.edge_id.at(e.id);
        auto ge = g.find_edge(target);
        if (!ge) {
            return false;
        }
        auto want = std::minmax(image[e.u], image[e.v]);
        auto got = std::minmax(ge->u, ge->v);
        if (want != got) {
            return false;
        }
        seen.push_back(target);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::string fingerprint(const Multigraph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << ";m=" << g.edge_count() << ";deg=";
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    for (auto d : deg) {
        out << d << ',';
    }
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (const auto& b : blocks(g)) {
        sizes.emplace_back(b.vertex_count(), b.edge_count());
    }
    std::sort(sizes.begin(), sizes.end());
    out << ";blocks=";
    for (auto [v, e] : sizes) {
        out << v << '/' << e << ',';
    }
    if (is_two_connected(g) && g.vertex_count() <= kFlatVertexGuard) {
        std::map<std::size_t, std::size_t> census;
        for (const auto& f : good_flats(g)) {
            ++census[f.vertices.size()];
        }
        out << ";flats=";
        for (auto [size, count] : census) {
            out << size << ':' << count << ',';
        }
    }
    return out.str();
}

}  // namespace gorenstein
