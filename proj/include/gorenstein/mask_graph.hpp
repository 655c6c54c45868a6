#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

using VertexMask = std::uint64_t;

inline VertexMask bit(std::size_t v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

std::vector<VertexId> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(const std::vector<VertexId>& vs);

// Underlying simple graph as neighbour bitmasks, for graphs with at most 64
// vertices. Multiplicities and loops are dropped: vertex 2-connectivity and
// block counts do not depend on them.
class MaskGraph {
public:
    MaskGraph() = default;
    explicit MaskGraph(const Multigraph& g);
    explicit MaskGraph(std::vector<VertexMask> adjacency) : adj_(std::move(adjacency)) {}

    std::size_t size() const { return adj_.size(); }
    VertexMask all() const { return adj_.size() == 64 ? ~VertexMask{0} : bit(adj_.size()) - 1; }
    VertexMask neighbours(std::size_t v) const { return adj_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }

    /// Vertices of `within` reachable from `start` inside `within`.
    VertexMask reach(std::size_t start, VertexMask within) const;
    bool connected(VertexMask within) const;
    /// At least two vertices, connected, no cut vertex. K2 qualifies.
    bool two_connected(VertexMask within) const;
    /// Number of blocks of the induced subgraph; isolated vertices contribute none.
    std::size_t block_count(VertexMask within) const;
    /// Graph with all of `s` merged into its lowest vertex; returns the new graph and its vertex set.
    std::pair<MaskGraph, VertexMask> contract(VertexMask s) const;

private:
    std::vector<VertexMask> adj_;
};

}  // namespace gorenstein
