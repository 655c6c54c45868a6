#include "gorenstein/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gorenstein/errors.hpp"

namespace gorenstein {

VertexId Multigraph::add_vertex(std::string label) {
    if (find_vertex(label)) {
        throw PreconditionError("duplicate vertex label '" + label + "'");
    }
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
}

VertexId Multigraph::vertex(std::string_view label) {
    if (auto v = find_vertex(label)) {
        return *v;
    }
    return add_vertex(std::string(label));
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    EdgeId id = next_edge_id_;
    add_edge_with_id(id, u, v);
    return id;
}

void Multigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
    if (u >= labels_.size() || v >= labels_.size()) {
        throw PreconditionError("edge endpoint is not a declared vertex");
    }
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), id,
                                [](const Edge& e, EdgeId key) { return e.id < key; });
    if (pos != edges_.end() && pos->id == id) {
        throw PreconditionError("duplicate edge id " + std::to_string(id));
    }
    edges_.insert(pos, Edge{id, u, v});
    next_edge_id_ = std::max(next_edge_id_, id + 1);
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<VertexId>(it - labels_.begin());
}

std::optional<Edge> Multigraph::find_edge(EdgeId id) const {
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), id,
                                [](const Edge& e, EdgeId key) { return e.id < key; });
    if (pos == edges_.end() || pos->id != id) {
        return std::nullopt;
    }
    return *pos;
}

std::vector<EdgeId> Multigraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) {
        ids.push_back(e.id);
    }
    return ids;
}

bool Multigraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const {
    std::map<std::pair<VertexId, VertexId>, int> seen;
    for (const Edge& e : edges_) {
        if (e.is_loop()) {
            continue;
        }
        auto key = std::minmax(e.u, e.v);
        if (++seen[{key.first, key.second}] > 1) {
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> Multigraph::degrees() const {
    std::vector<std::size_t> deg(labels_.size(), 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<std::vector<VertexId>> Multigraph::simple_adjacency() const {
    std::vector<std::vector<VertexId>> adj(labels_.size());
    for (const Edge& e : edges_) {
        if (e.is_loop()) {
            continue;
        }
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

std::size_t Multigraph::multiplicity(VertexId u, VertexId v) const {
    return edges_between(u, v).size();
}

std::vector<EdgeId> Multigraph::edges_between(VertexId u, VertexId v) const {
    std::vector<EdgeId> out;
    for (const Edge& e : edges_) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            out.push_back(e.id);
        }
    }
    return out;
}

}  // namespace gorenstein
