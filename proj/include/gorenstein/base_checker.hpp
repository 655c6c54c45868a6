#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

struct EdgeFlags {
    bool deletion_two_connected = false;
    bool contraction_two_connected = false;
};

/// Per edge: is G\e 2-connected, is G/e 2-connected. For a 2-connected simple graph with
/// at least two edges one of the two always holds; InternalContradiction otherwise.
std::map<EdgeId, EdgeFlags> edge_facet_profile(const Multigraph& g);

// Forced edge labelling w: E -> {1, delta-1}. Doubles as the Gorenstein witness
// point of the base polytope when the flat equalities hold.
struct WeightAssignment {
    int delta = 0;
    std::map<EdgeId, int> weights;

    std::int64_t total() const;
    std::int64_t sum(const std::vector<EdgeId>& edges) const;
    int at(EdgeId e) const { return weights.at(e); }
};

// Violation witnesses. `block` indexes blocks() of the checked graph; a direct
// call on a single 2-connected graph reports block 0.
struct NoCandidateDelta {
    std::size_t block = 0;
};
struct WeightConflict {
    std::size_t block = 0;
    EdgeId edge = 0;
    int delta = 0;
};
struct TotalWeightMismatch {
    std::size_t block = 0;
    int delta = 0;
    std::int64_t lhs = 0;  // w(E)
    std::int64_t rhs = 0;  // delta * (|V| - 1)
};
struct FlatEqualityViolated {
    std::size_t block = 0;
    int delta = 0;
    std::vector<VertexId> flat;  // vertex indices in the checked (block) graph
    std::int64_t lhs = 0;        // w(E(S)) + 1, or w(E(S)) + k(S) for the block-count form
    std::int64_t rhs = 0;        // delta * (|S| - 1)
};

using BaseWitness = std::variant<NoCandidateDelta, WeightConflict, TotalWeightMismatch, FlatEqualityViolated>;

/// Weight function at `delta`, or the first edge whose flags force two different weights.
std::variant<WeightAssignment, WeightConflict> weight_function(const Multigraph& g, int delta);

/// All delta in [2, |E|+1] admitting a weight function with w(E) = delta(|V|-1).
/// K2 yields std::nullopt, meaning every delta is compatible.
std::optional<std::set<int>> candidate_deltas(const Multigraph& g);

/// w(E) = delta(|V|-1) and w(E(S)) + 1 = delta(|S|-1) over all good flats; first failure wins.
std::optional<BaseWitness> check_spade(const Multigraph& g, int delta);

/// w(E(S)) + k(S) = delta(|S|-1) over every S inducing a 2-connected subgraph (S = V included).
/// A failing set with k(S) <= 1 (a good flat or V) is reported in preference to the others.
std::optional<BaseWitness> check_heart(const Multigraph& g, int delta);

struct BaseBlockReport {
    Multigraph block;
    bool wildcard = false;               // K2: its base polytope is a point
    std::set<int> candidate_deltas;      // empty for wildcards
    std::optional<WeightAssignment> weights;
};

struct BaseVerdict {
    bool gorenstein = false;
    /// Gorenstein index. 1 only when every block is a bridge (the polytope is a point).
    std::optional<int> delta;
    std::vector<BaseBlockReport> blocks;
    std::optional<BaseWitness> witness;
    std::size_t loops_removed = 0;
};

/// Classifies B(M(G)) for a simple graph; throws NotSimpleError on parallel edges.
BaseVerdict base_verdict(const Multigraph& g);

}  // namespace gorenstein
