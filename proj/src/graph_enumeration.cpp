#include "gorenstein/graph_enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>

#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"

namespace gorenstein {

namespace {

using Code = std::uint32_t;
using Adjacency = std::array<std::uint8_t, kEnumerationMaxVertices>;

/// Bit position of the pair i < j; pair (0,1) is the most significant.
int pair_bit(std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    // index of (i, j) in row-major order over the upper triangle of an 8 x 8 matrix
    const int index = static_cast<int>(i * (2 * kEnumerationMaxVertices - i - 1) / 2 + (j - i - 1));
    return 27 - index;
}

Code encode(std::size_t n, const Adjacency& adj, const std::vector<std::size_t>& order) {
    Code code = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if ((adj[order[a]] >> order[b]) & 1U) {
                code |= Code{1} << pair_bit(a, b);
            }
        }
    }
    return code;
}

/// Maximum encoding over all vertex orders that list vertices by non-increasing degree.
Code canonical(std::size_t n, const Adjacency& adj) {
    std::vector<int> degree(n);
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = std::popcount(static_cast<unsigned>(adj[v]));
    }
    std::vector<std::size_t> by_degree(n);
    for (std::size_t v = 0; v < n; ++v) {
        by_degree[v] = v;
    }
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    std::vector<std::size_t> order(n);
    std::vector<bool> used(n, false);
    Code best = 0;
    auto place = [&](auto&& self, std::size_t slot) -> void {
        if (slot == n) {
            best = std::max(best, encode(n, adj, order));
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!used[v] && degree[v] == degree[by_degree[slot]]) {
                used[v] = true;
                order[slot] = v;
                self(self, slot + 1);
                used[v] = false;
            }
        }
    };
    place(place, 0);
    return best;
}

Multigraph decode(std::size_t n, Code code) {
    Multigraph g;
    for (std::size_t v = 0; v < n; ++v) {
        g.add_vertex(std::to_string(v));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if ((code >> pair_bit(a, b)) & 1U) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

Adjacency adjacency_of(std::size_t n, Code code) {
    Adjacency adj{};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if ((code >> pair_bit(a, b)) & 1U) {
                adj[a] |= static_cast<std::uint8_t>(1U << b);
                adj[b] |= static_cast<std::uint8_t>(1U << a);
            }
        }
    }
    return adj;
}

std::vector<Multigraph> enumerate(std::size_t n) {
    std::vector<Multigraph> out;
    std::set<Code> level{0};
    while (!level.empty()) {
        std::set<Code> next;
        for (Code code : level) {
            out.push_back(decode(n, code));
            const Adjacency adj = adjacency_of(n, code);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (!((adj[a] >> b) & 1U)) {
                        Adjacency child = adj;
                        child[a] |= static_cast<std::uint8_t>(1U << b);
                        child[b] |= static_cast<std::uint8_t>(1U << a);
                        next.insert(canonical(n, child));
                    }
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace

std::uint32_t canonical_code(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kEnumerationMaxVertices) {
        throw ResourceError("canonical codes limited to " + std::to_string(kEnumerationMaxVertices) + " vertices");
    }
    if (!g.is_simple()) {
        throw PreconditionError("canonical codes need a simple graph");
    }
    Adjacency adj{};
    for (const Edge& e : g.edges()) {
        adj[e.u] |= static_cast<std::uint8_t>(1U << e.v);
        adj[e.v] |= static_cast<std::uint8_t>(1U << e.u);
    }
    return canonical(n, adj);
}

const std::vector<Multigraph>& all_simple_graphs(std::size_t n) {
    if (n > kEnumerationMaxVertices) {
        throw ResourceError("graph enumeration limited to " + std::to_string(kEnumerationMaxVertices) + " vertices");
    }
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<Multigraph>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, enumerate(n)).first;
    }
    return it->second;
}

std::vector<Multigraph> two_connected_graphs(std::size_t n) {
    std::vector<Multigraph> out;
    for (const auto& g : all_simple_graphs(n)) {
        if (is_two_connected(g)) {
            out.push_back(g);
        }
    }
    return out;
}

std::vector<Multigraph> two_connected_graphs_up_to(std::size_t max_n) {
    std::vector<Multigraph> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        auto part = two_connected_graphs(n);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace gorenstein
