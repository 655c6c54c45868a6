#include "gorenstein/flats.hpp"

#include <functional>

#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/mask_graph.hpp"

namespace gorenstein {

namespace {

void require_small(const Multigraph& g) {
    if (g.vertex_count() > kFlatVertexGuard) {
        throw ResourceError("flat enumeration limited to " + std::to_string(kFlatVertexGuard) + " vertices");
    }
}

}  // namespace

void for_each_subset_by_size(std::size_t n, std::size_t lo, std::size_t hi,
                             const std::function<void(std::uint64_t)>& visit) {
    std::vector<std::size_t> idx;
    for (std::size_t k = lo; k <= hi && k <= n; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            idx[i] = i;
        }
        while (true) {
            std::uint64_t mask = 0;
            for (std::size_t i : idx) {
                mask |= bit(i);
            }
            visit(mask);
            // next combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

std::vector<EdgeId> induced_edges(const Multigraph& g, std::span<const VertexId> vertices) {
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v : vertices) {
        in.at(v) = true;
    }
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v]) {
            out.push_back(e.id);
        }
    }
    return out;
}

std::vector<GoodFlat> good_flats(const Multigraph& g) {
    require_small(g);
    if (!is_two_connected(g)) {
        throw PreconditionError("good_flats requires a 2-connected graph");
    }
    const MaskGraph mg(g);
    const std::size_t n = g.vertex_count();
    std::vector<GoodFlat> out;
    for_each_subset_by_size(n, 2, n - 1, [&](std::uint64_t s) {
        if (!mg.two_connected(s)) {
            return;
        }
        auto [contracted, vertices] = mg.contract(s);
        if (!contracted.two_connected(vertices)) {
            return;
        }
        GoodFlat flat;
        flat.vertices = mask_to_vertices(s);
        flat.induced_edges = induced_edges(g, flat.vertices);
        out.push_back(std::move(flat));
    });
    return out;
}

std::vector<std::vector<VertexId>> indecomposable_flats(const Multigraph& g) {
    require_small(g);
    const MaskGraph mg(g);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> out;
    for_each_subset_by_size(n, 2, n, [&](std::uint64_t s) {
        if (mg.two_connected(s)) {
            out.push_back(mask_to_vertices(s));
        }
    });
    return out;
}

std::size_t block_count_after_contraction(const Multigraph& g, std::span<const VertexId> s) {
    const MaskGraph mg(g);
    std::uint64_t mask = 0;
    for (VertexId v : s) {
        if (v >= g.vertex_count()) {
            throw PreconditionError("vertex index out of range");
        }
        mask |= bit(v);
    }
    if (mask == 0 || !mg.connected(mask)) {
        throw PreconditionError("vertex set does not induce a connected subgraph");
    }
    auto [contracted, vertices] = mg.contract(mask);
    return contracted.block_count(vertices);
}

}  // namespace gorenstein
