#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gorenstein/constructions.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

// Violation witnesses for the independence polytope. `block` indexes blocks()
// of the checked graph; direct calls on a single graph report block 0.
struct NonUniformMultiplicity {
    std::size_t block = 0;
    std::size_t expected = 0;  // multiplicity seen first
    std::size_t found = 0;     // conflicting multiplicity
};
struct ClubViolated {
    std::size_t block = 0;
    std::vector<VertexId> flat;  // vertex indices in the base graph H
    std::int64_t lhs = 0;        // (delta-1)|E(S)| + 1
    std::int64_t rhs = 0;        // delta(|S|-1)
};
struct WrongChordlessCycle {
    std::size_t block = 0;
    std::size_t length = 0;
};
struct K4MinorFound {
    std::size_t block = 0;
};
struct NotConstructible {
    std::size_t block = 0;
};

using IndepWitness =
    std::variant<NonUniformMultiplicity, ClubViolated, WrongChordlessCycle, K4MinorFound, NotConstructible>;

/// (delta-1)|E(S)| + 1 = delta(|S|-1) over every S inducing a 2-connected subgraph, S = V included.
std::optional<IndepWitness> check_club(const Multigraph& h, int delta);

/// Every chordless cycle has delta+1 edges and H has no K4 minor.
/// Cycle lengths are checked first, in ascending order.
std::optional<IndepWitness> check_chordal_k4free(const Multigraph& h, int delta);

/// Inverse cycle attachment: strips (delta+1)-cycles hanging off an edge until K2 remains.
std::optional<ConstructionCert> recognize_cycle_construction(const Multigraph& h, int delta);
/// Same, with the explicit isomorphism between the replayed graph and `h`.
std::optional<Decomposition> recognize_cycle_construction_realized(const Multigraph& h, int delta);

struct IndepBlockReport {
    Multigraph block;
    std::size_t multiplicity = 0;
    Multigraph base;  // H with block = multiplicity-fold blow-up of H
    std::optional<Decomposition> certificate;
};

struct IndepVerdict {
    bool gorenstein = false;
    /// delta = m + 1; 1 only for an edgeless graph (the polytope is a point).
    std::optional<int> delta;
    std::optional<std::size_t> multiplicity;
    std::vector<IndepBlockReport> blocks;
    std::optional<IndepWitness> witness;
    /// For a failing block, the club equality violation reported alongside the primary witness.
    std::optional<ClubViolated> club_violation;
    /// Blocks whose base graph passes the chordal/K4-minor test but not the club equalities, or
    /// the reverse. The club equalities decide the verdict.
    std::vector<std::size_t> chordal_disagreements;
    std::size_t loops_removed = 0;
};

/// Classifies P(M(G)) for a multigraph. Throws InternalContradiction if the club equalities
/// and the cycle construction disagree on a block's base graph.
IndepVerdict indep_verdict(const Multigraph& g);

}  // namespace gorenstein
