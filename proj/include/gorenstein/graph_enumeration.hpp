#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

/// Largest vertex count supported by the small-graph enumerator.
inline constexpr std::size_t kEnumerationMaxVertices = 8;

/// One representative of every isomorphism class of simple graphs on exactly n vertices,
/// labelled "0".."n-1", ordered by edge count and then by canonical code. Results are cached.
const std::vector<Multigraph>& all_simple_graphs(std::size_t n);

/// The 2-connected members of all_simple_graphs(n) (K2 for n = 2).
std::vector<Multigraph> two_connected_graphs(std::size_t n);

/// two_connected_graphs(n) for n = 2 .. max_n, concatenated.
std::vector<Multigraph> two_connected_graphs_up_to(std::size_t max_n);

/// Canonical code of a simple graph with at most kEnumerationMaxVertices vertices:
/// equal for two graphs iff they are isomorphic.
std::uint32_t canonical_code(const Multigraph& g);

}  // namespace gorenstein
