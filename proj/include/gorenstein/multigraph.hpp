#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gorenstein {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

// Undirected multigraph with labelled vertices and stable edge ids.
//
// Vertices are indexed 0..n-1 in insertion order; every vertex carries a unique
// label. Edge ids are never reused: deleting an edge leaves a gap, and
// add_edge() always hands out an id larger than any id seen so far.
class Multigraph {
public:
    Multigraph() = default;

    VertexId add_vertex(std::string label);
    /// Returns the existing vertex with this label, or adds one.
    VertexId vertex(std::string_view label);
    EdgeId add_edge(VertexId u, VertexId v);
    void add_edge_with_id(EdgeId id, VertexId u, VertexId v);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view label) const;

    /// Edges ordered by id.
    std::span<const Edge> edges() const { return edges_; }
    std::optional<Edge> find_edge(EdgeId id) const;
    bool has_edge(EdgeId id) const { return find_edge(id).has_value(); }
    std::vector<EdgeId> edge_ids() const;
    EdgeId next_edge_id() const { return next_edge_id_; }

    std::size_t loops_removed() const { return loops_removed_; }
    void set_loops_removed(std::size_t n) { loops_removed_ = n; }

    bool has_loops() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

    /// Degree counting parallel edges; a loop adds 2.
    std::vector<std::size_t> degrees() const;
    /// Neighbour lists of the underlying simple graph (loops dropped, parallels merged), sorted.
    std::vector<std::vector<VertexId>> simple_adjacency() const;
    /// Number of edges joining u and v.
    std::size_t multiplicity(VertexId u, VertexId v) const;
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

    bool operator==(const Multigraph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::size_t loops_removed_ = 0;
    EdgeId next_edge_id_ = 0;
};

}  // namespace gorenstein
