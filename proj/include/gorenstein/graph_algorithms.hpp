#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

inline constexpr std::size_t kDefaultEnumerationGuard = 1'000'000;

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   one edge per line: "u v" or "u v m" (m >= 1 parallel copies)
//   '#' starts a comment; labels are arbitrary non-whitespace tokens.
//
// Vertices are numbered in order of first appearance; the k-th edge read
// (after multiplicity expansion) gets id k.
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::string& path);
std::string format_graph(const Multigraph& g);

/// Drops loops and records how many were dropped.
Multigraph normalize(const Multigraph& g);

/// Same graph with vertex labels "0".."n-1" and edge ids 0..m-1 (in id order).
Multigraph canonical_copy(const Multigraph& g);
/// Position of edge `id` in id order, i.e. its id in canonical_copy().
std::size_t edge_index(const Multigraph& g, EdgeId id);

bool is_connected(const Multigraph& g);
/// At least two vertices, connected, no cut vertex. K2 and the doubled edge qualify.
bool is_two_connected(const Multigraph& g);
/// No pair of vertices whose removal disconnects the graph; requires at least 4 vertices.
bool is_three_connected(const Multigraph& g);

/// Vertex sets of the blocks of the underlying simple graph (isolated vertices omitted).
std::vector<std::vector<VertexId>> block_vertex_sets(const Multigraph& g);
/// Block decomposition. Bridges come out as K2 blocks; every non-loop edge lies in exactly
/// one block. Blocks keep the original labels and edge ids, ordered by smallest edge id.
std::vector<Multigraph> blocks(const Multigraph& g);

/// Induced subgraph; keeps labels and edge ids, vertices in original order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices);
Multigraph remove_vertices(const Multigraph& g, std::span<const VertexId> vertices);
/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

struct Contraction {
    Multigraph graph;
    /// old vertex index -> vertex index in `graph`
    std::vector<VertexId> vertex_map;
};

/// Contracts every edge of `edges`. Edges that become loops are dropped and counted
/// in loops_removed(); parallel edges are kept. Merged vertices get "a+b" labels.
Contraction contract_edges(const Multigraph& g, std::span<const EdgeId> edges);
Multigraph delete_edge(const Multigraph& g, EdgeId e);

enum class MinorKind { Delete, Contract };
Multigraph minor_op(const Multigraph& g, EdgeId e, MinorKind kind);

struct Ear {
    std::vector<VertexId> path;  // v_0 .. v_s
    std::vector<EdgeId> edges;   // s edges along the path
    std::size_t length() const { return edges.size(); }
};

struct EarList {
    bool is_cycle = false;
    std::vector<Ear> ears;
};

/// Maximal paths with at least one inner vertex whose inner vertices all have degree 2.
/// A cycle has no such path with distinct branch endpoints and is reported as `is_cycle`.
EarList ears(const Multigraph& g);

bool is_cycle_graph(const Multigraph& g);

struct ChordlessOptions {
    std::size_t guard = kDefaultEnumerationGuard;
    /// When set, every pair of parallel edges also counts as a 2-cycle.
    bool count_parallel_pairs = false;
};

/// Lengths of all induced cycles of the underlying simple graph, sorted.
std::vector<std::size_t> chordless_cycles(const Multigraph& g, ChordlessOptions options = {});

/// Series-parallel reduction: delete vertices of degree <= 1, suppress degree-2
/// vertices, merge parallel edges. The graph has no K4 minor iff nothing remains.
bool is_k4_minor_free(const Multigraph& g);

enum class ForestKind { SpanningTrees, Forests };

/// Calls `visit` with each edge subset (ids ascending). SpanningTrees yields the maximal
/// spanning forests; Forests yields every acyclic subset including the empty one.
void for_each_forest(const Multigraph& g, ForestKind kind, std::size_t guard,
                     const std::function<void(const std::vector<EdgeId>&)>& visit);
std::vector<std::vector<EdgeId>> bases_and_forests(const Multigraph& g, ForestKind kind,
                                                   std::size_t guard = kDefaultEnumerationGuard);

struct BlowUpFactor {
    std::size_t multiplicity;
    Multigraph base;  // simple; one edge per parallel class, keeping the smallest id
};

/// (m, H) when all parallel classes have the same size m; nullopt otherwise.
std::optional<BlowUpFactor> blow_up_factor(const Multigraph& g);

/// |V(F)| minus the number of components of (V(F), F).
std::size_t graphic_rank(const Multigraph& g, std::span<const EdgeId> edges);

/// Vertex bijection a -> b preserving all edge multiplicities, by backtracking.
/// Throws ResourceError above `max_vertices`.
std::optional<std::vector<VertexId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                      std::size_t max_vertices = 10);
bool isomorphic(const Multigraph& a, const Multigraph& b, std::size_t max_vertices = 10);

}  // namespace gorenstein
