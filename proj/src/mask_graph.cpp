#include "gorenstein/mask_graph.hpp"

#include "gorenstein/errors.hpp"

namespace gorenstein {

std::vector<VertexId> mask_to_vertices(VertexMask m) {
    std::vector<VertexId> out;
    while (m != 0) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

VertexMask vertices_to_mask(const std::vector<VertexId>& vs) {
    VertexMask m = 0;
    for (VertexId v : vs) {
        m |= bit(v);
    }
    return m;
}

MaskGraph::MaskGraph(const Multigraph& g) : adj_(g.vertex_count(), 0) {
    if (g.vertex_count() > 64) {
        throw ResourceError("bitmask graph supports at most 64 vertices");
    }
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            continue;
        }
        adj_[e.u] |= bit(e.v);
        adj_[e.v] |= bit(e.u);
    }
}

VertexMask MaskGraph::reach(std::size_t start, VertexMask within) const {
    VertexMask seen = bit(start) & within;
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) {
            next |= adj_[lowest(f)];
        }
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool MaskGraph::connected(VertexMask within) const {
    if (within == 0) {
        return true;
    }
    return reach(lowest(within), within) == within;
}

bool MaskGraph::two_connected(VertexMask within) const {
    int n = popcount(within);
    if (n < 2 || !connected(within)) {
        return false;
    }
    if (n == 2) {
        return true;
    }
    for (VertexMask w = within; w != 0; w &= w - 1) {
        if (!connected(within & ~bit(lowest(w)))) {
            return false;
        }
    }
    return true;
}

std::size_t MaskGraph::block_count(VertexMask within) const {
    // Block-cut tree identity per component: blocks = 1 + sum over vertices of (pieces after removal - 1).
    std::size_t blocks = 0;
    VertexMask remaining = within;
    while (remaining != 0) {
        VertexMask comp = reach(lowest(remaining), within);
        remaining &= ~comp;
        if (popcount(comp) < 2) {
            continue;
        }
        ++blocks;
        for (VertexMask w = comp; w != 0; w &= w - 1) {
            VertexMask rest = comp & ~bit(lowest(w));
            std::size_t pieces = 0;
            while (rest != 0) {
                rest &= ~reach(lowest(rest), rest);
                ++pieces;
            }
            if (pieces > 1) {
                blocks += pieces - 1;
            }
        }
    }
    return blocks;
}

std::pair<MaskGraph, VertexMask> MaskGraph::contract(VertexMask s) const {
    if (s == 0) {
        return {*this, all()};
    }
    std::size_t rep = lowest(s);
    std::vector<VertexMask> adj = adj_;
    VertexMask merged = 0;
    for (VertexMask w = s; w != 0; w &= w - 1) {
        merged |= adj_[lowest(w)];
    }
    merged &= ~s;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if ((s >> v) & 1U) {
            adj[v] = 0;
        } else if (adj[v] & s) {
            adj[v] = (adj[v] & ~s) | bit(rep);
        }
    }
    adj[rep] = merged;
    VertexMask vertices = (all() & ~s) | bit(rep);
    return {MaskGraph(std::move(adj)), vertices};
}

}  // namespace gorenstein
