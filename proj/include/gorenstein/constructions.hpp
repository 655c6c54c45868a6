#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

enum class PolytopeKind { Base, Independence };

// ---------------------------------------------------------------------------
// Construction certificates
//
// A certificate is a tree whose leaves are seeds (a cycle, K4 or K2) and whose
// inner nodes are the generative operations. Every node replays to a graph in
// canonical form: vertices labelled "0".."n-1" and edge ids 0..m-1. Edge
// references inside a node are edge ids of the child's replayed graph.
//
// Replay allocation rules:
//   Glue/Collide  vertices of child 0, then the non-glued vertices of each
//                 further child in order; edges of child 0 (minus the glued
//                 edge for Collide), then each further child's edges minus
//                 its glued edge. Child i's glued edge (a, b) is identified
//                 with child 0's (a0, b0), or (b0, a0) when `flip` is set.
//   Subdivide     child's vertices then the new path vertices; child's edges
//                 minus the subdivided one, then the path edges, both walked
//                 from the subdivided edge's first endpoint.
//   AttachCycle   child's vertices then the new path vertices; child's edges
//                 then the new path edges from the edge's first endpoint.
//   BlowUp        same vertices; each edge becomes m consecutive copies.

enum class NodeKind { SeedCycle, SeedK4, SeedK2, Glue, Subdivide, Collide, AttachCycle, BlowUp };

struct EdgeRef {
    EdgeId edge = 0;
    bool flip = false;
    bool operator==(const EdgeRef&) const = default;
};

struct CertNode {
    NodeKind kind = NodeKind::SeedK2;
    std::size_t cycle_length = 0;  // SeedCycle: cycle length; AttachCycle: length of the closed cycle
    std::size_t multiplicity = 0;  // BlowUp
    std::vector<CertNode> children;
    std::vector<EdgeRef> edges;

    bool operator==(const CertNode&) const = default;
};

struct ConstructionCert {
    PolytopeKind kind = PolytopeKind::Base;
    int delta = 0;
    CertNode root;

    bool operator==(const ConstructionCert&) const = default;
};

CertNode seed_cycle_node(std::size_t length);
CertNode seed_k4_node();
CertNode seed_k2_node();

/// Replays a certificate, checking its structural invariants (arity, edge weights,
/// seed shapes). Throws PreconditionError naming the violated invariant.
Multigraph replay(const ConstructionCert& cert);
std::size_t cert_depth(const CertNode& node);

// ---------------------------------------------------------------------------
// Single construction steps on canonical graphs, with provenance of every
// vertex and edge of the result.

inline constexpr std::size_t kFresh = std::numeric_limits<std::size_t>::max();

struct Origin {
    std::size_t part = kFresh;  // input graph index, or kFresh for new items
    std::size_t index = 0;      // vertex index / edge id in that input, or position among new items
};

struct StepResult {
    Multigraph graph;
    std::vector<Origin> vertex_origin;
    std::vector<Origin> edge_origin;
};

Multigraph cycle_graph(std::size_t n);
Multigraph complete_graph(std::size_t n);

StepResult glue_step(std::span<const Multigraph> parts, std::span<const EdgeRef> edges, bool drop_glued);
StepResult subdivide_step(const Multigraph& g, EdgeId e, std::size_t path_edges);
StepResult attach_cycle_step(const Multigraph& g, EdgeId e, std::size_t path_edges);
StepResult blow_up_step(const Multigraph& g, std::size_t m);

// ---------------------------------------------------------------------------
// Generative operations with their preconditions checked. Outputs are canonical.

struct GluePart {
    Multigraph graph;
    EdgeId edge = 0;
    bool flip = false;
};

/// Identifies one weight-(delta-1) edge from each of delta-1 parts into a single edge.
Multigraph glue(std::span<const GluePart> parts, int delta);
/// Replaces a weight-1 edge by a path of delta-1 edges. delta = 2 returns the input unchanged.
Multigraph subdivide(const Multigraph& g, EdgeId e, int delta);
/// Glues two (delta=2) graphs along an edge and removes that edge.
Multigraph collide(const Multigraph& g1, EdgeId e1, const Multigraph& g2, EdgeId e2, bool flip = false);
/// Adds a new path of delta edges between the endpoints of e.
Multigraph attach_cycle(const Multigraph& h, EdgeId e, int delta);
/// Replaces every edge by m parallel copies; keeps vertex labels.
Multigraph blow_up(const Multigraph& h, std::size_t m);

// ---------------------------------------------------------------------------
// Inverse direction

/// Replayed graph plus, for each of its vertices and edges, the matching label
/// and edge id of the graph that was decomposed. This is an explicit isomorphism.
struct Realization {
    Multigraph replayed;
    std::vector<std::string> vertex_label;
    std::vector<EdgeId> edge_id;
};

struct Decomposition {
    ConstructionCert cert;
    Realization realization;
};

/// Certificate for a 2-connected simple graph satisfying the base flat equalities at delta.
/// Throws PreconditionError when the input fails them, InternalContradiction if a step
/// that the structure theory guarantees is unavailable.
Decomposition decompose_base(const Multigraph& g, int delta);

/// True when the realization's maps form an isomorphism onto `g`.
bool realization_matches(const Realization& r, const Multigraph& g);

/// Degree sequence, block sizes and good-flat census; equal for isomorphic graphs.
std::string fingerprint(const Multigraph& g);

}  // namespace gorenstein
