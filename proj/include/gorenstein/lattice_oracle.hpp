#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/constructions.hpp"
#include "gorenstein/integer_linalg.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

// ---------------------------------------------------------------------------
// Lattice polytopes
//
// A polytope P is stored by its vertices together with the affine lattice
// they span: origin + Z-span of the HNF rows b_1..b_d. Every point of that
// lattice has integer coordinates c with x = origin + sum c_i b_i. The cone
// over P lives in Z^{d+1} with points (t, c); a facet functional h acts as
// h[0] * t + sum h[i] * c[i-1] and is primitive in Z^{d+1}.

struct OracleLimits {
    std::size_t vertex_guard = 1'000'000;       // polytope vertices enumerated from forests
    std::size_t subset_vertex_guard = 40;       // vertex count for facets_by_subsets
    std::size_t subset_guard = 2'000'000;       // candidate subsets for facets_by_subsets
    std::size_t node_guard = 10'000'000;        // recursion nodes for lattice point enumeration
};

struct Facet {
    IntVector h;  // size d+1, h[0] is the height coefficient
    auto operator<=>(const Facet&) const = default;
};

struct LatticePolytope {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> vertices;       // sorted, distinct
    std::size_t dim = 0;
    IntVector origin;                      // = vertices.front()
    std::vector<IntVector> lattice_basis;  // HNF rows
    std::vector<std::size_t> pivots;
    std::vector<IntVector> vertex_coords;  // lattice coordinates, parallel to vertices
    std::vector<Facet> facets;             // sorted
    /// Index of the vertex lattice inside the integer points of its linear span; nullopt if not computed.
    std::optional<Int> saturation_index;
};

/// Builds the polytope from its vertex list: lattice, coordinates and facets (exact double description).
LatticePolytope polytope_from_vertices(std::vector<IntVector> vertices);

/// B(M(G)) or P(M(G)) over the edges of the normalized graph in id order.
LatticePolytope polytope_of(const Multigraph& g, PolytopeKind kind, const OracleLimits& limits = {});

/// Cartesian product, coordinates concatenated.
LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b);

/// Ambient point of height t with lattice coordinates c.
IntVector ambient_point(const LatticePolytope& p, Int t, const IntVector& c);

/// Facets of the cone spanned by the given points of Z^{D} (which must span R^D), by double description.
std::vector<Facet> hull_facets(const std::vector<IntVector>& cone_generators);

/// Independent facet computation: hyperplanes through (d)-subsets of cone generators that support the cone.
/// Throws ResourceError past the subset guards.
std::vector<Facet> facets_by_subsets(const LatticePolytope& p, const OracleLimits& limits = {});

/// Primitive lattice functional of the ambient inequality a.x + a0 * t >= 0.
Facet lattice_functional(const LatticePolytope& p, const IntVector& a, Int a0);

// Facets predicted for the base polytope of a 2-connected graph: x_e >= 0 for each edge whose
// deletion stays 2-connected, and r(F) * sum_E x - r(E) * sum_F x >= 0 for each good flat.
struct PredictedFacet {
    enum class Type { Nonnegativity, GoodFlat } type = Type::Nonnegativity;
    EdgeId edge = 0;              // Nonnegativity
    std::vector<VertexId> flat;   // GoodFlat
    Facet facet;
    /// The unreduced form (x_e, or (|S|-1) t - sum_{E(S)} x) was already primitive.
    bool reduced_form_primitive = false;
};
std::vector<PredictedFacet> predicted_base_facets(const Multigraph& g, const LatticePolytope& p);

struct GorensteinWitness {
    int delta = 0;
    IntVector coords;  // lattice coordinates of v
    IntVector point;   // ambient coordinates of v in delta * P
};

/// Solves h(delta, c) = 1 over all facets exactly. Present iff the polytope is Gorenstein
/// with index delta <= max_delta (default d + 1, the codegree bound).
std::optional<GorensteinWitness> gorenstein_search(const LatticePolytope& p, std::optional<int> max_delta = {});
bool is_delta_gorenstein(const LatticePolytope& p, int delta);
/// Same verdict by scanning interior lattice points of delta P for delta = 1..max_delta.
std::optional<GorensteinWitness> gorenstein_search_enumerative(const LatticePolytope& p,
                                                               std::optional<int> max_delta = {},
                                                               const OracleLimits& limits = {});

/// Lattice coordinates of all points c of kP with h(k, c) >= min_value for every facet.
std::vector<IntVector> lattice_points(const LatticePolytope& p, Int k, Int min_value = 0,
                                      const OracleLimits& limits = {});

struct HStarVector {
    std::vector<Int> coefficients;  // trailing zeros trimmed
    std::vector<Int> ehrhart;       // L(0) .. L(d)
    bool palindromic = false;
};
HStarVector hstar(const LatticePolytope& p, const OracleLimits& limits = {});

struct NormalityResult {
    bool passed = true;
    std::optional<Int> failing_k;
    std::optional<IntVector> counterexample;  // ambient coordinates
};
/// Checks that every lattice point of kP is a sum of k lattice points of P, k = 2..kmax.
NormalityResult normality_probe(const LatticePolytope& p, Int kmax, const OracleLimits& limits = {});

/// Vertices, one per line; "%lattice" origin and basis rows; "%facets" functional rows.
std::string dump_polytope(const LatticePolytope& p);

}  // namespace gorenstein
