#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

/// Largest vertex count for which flat families are enumerated over all vertex subsets.
inline constexpr std::size_t kFlatVertexGuard = 24;

// A vertex set S whose induced subgraph and whose contraction G/E(S) are both
// 2-connected (1 < |S| < |V|). These index the non-trivial facets of the base
// polytope of a 2-connected graph.
struct GoodFlat {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> induced_edges;
    std::optional<std::int64_t> weight_sum;
};

/// All good flats, ordered by size and then lexicographically. Requires a 2-connected graph.
std::vector<GoodFlat> good_flats(const Multigraph& g);

/// Every vertex set of size >= 2 inducing a 2-connected subgraph (the whole vertex set included).
std::vector<std::vector<VertexId>> indecomposable_flats(const Multigraph& g);

/// Number of blocks of G after contracting E(S) to a point; 0 when S = V.
/// Throws PreconditionError when S does not induce a connected subgraph.
std::size_t block_count_after_contraction(const Multigraph& g, std::span<const VertexId> s);

/// Edge ids with both endpoints in `vertices`.
std::vector<EdgeId> induced_edges(const Multigraph& g, std::span<const VertexId> vertices);

/// Calls `visit` for every vertex subset of size in [lo, hi], by size then lexicographically.
void for_each_subset_by_size(std::size_t n, std::size_t lo, std::size_t hi,
                             const std::function<void(std::uint64_t)>& visit);

}  // namespace gorenstein
