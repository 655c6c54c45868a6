#include "gorenstein/graph_algorithms.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gorenstein/errors.hpp"

namespace gorenstein {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::vector<std::vector<EdgeId>> incidence(const Multigraph& g) {
    std::vector<std::vector<EdgeId>> inc(g.vertex_count());
    for (const Edge& e : g.edges()) {
        inc[e.u].push_back(e.id);
        if (!e.is_loop()) {
            inc[e.v].push_back(e.id);
        }
    }
    return inc;
}

}  // namespace

// --- text format ------------------------------------------------------------

Multigraph parse_graph(std::string_view text) {
    Multigraph g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw ParseError(line_no, "expected 'u v' or 'u v m'");
        }
        std::size_t copies = 1;
        if (tokens.size() == 3) {
            long long m = 0;
            auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), m);
            if (ec != std::errc() || ptr != tokens[2].data() + tokens[2].size()) {
                throw ParseError(line_no, "multiplicity '" + std::string(tokens[2]) + "' is not an integer");
            }
            if (m < 1) {
                throw ParseError(line_no, "multiplicity must be positive");
            }
            copies = static_cast<std::size_t>(m);
        }
        VertexId u = g.vertex(tokens[0]);
        VertexId v = g.vertex(tokens[1]);
        for (std::size_t k = 0; k < copies; ++k) {
            g.add_edge(u, v);
        }
        if (end == text.size()) {
            break;
        }
    }
    if (g.edge_count() == 0) {
        throw ParseError(std::max<std::size_t>(line_no, 1), "empty document: no edges");
    }
    return g;
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i + 1;
        while (j < edges.size() && edges[j].u == edges[i].u && edges[j].v == edges[i].v) {
            ++j;
        }
        out << g.label(edges[i].u) << ' ' << g.label(edges[i].v);
        if (j - i > 1) {
            out << ' ' << (j - i);
        }
        out << '\n';
        i = j;
    }
    return out.str();
}

// --- basic transforms -------------------------------------------------------

Multigraph normalize(const Multigraph& g) {
    Multigraph out;
    for (const auto& label : g.labels()) {
        out.add_vertex(label);
    }
    std::size_t loops = g.loops_removed();
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            ++loops;
        } else {
            out.add_edge_with_id(e.id, e.u, e.v);
        }
    }
    out.set_loops_removed(loops);
    return out;
}

Multigraph canonical_copy(const Multigraph& g) {
    Multigraph out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out.add_vertex(std::to_string(v));
    }
    for (const Edge& e : g.edges()) {
        out.add_edge(e.u, e.v);
    }
    out.set_loops_removed(g.loops_removed());
    return out;
}

std::size_t edge_index(const Multigraph& g, EdgeId id) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].id == id) {
            return i;
        }
    }
    throw PreconditionError("unknown edge id " + std::to_string(id));
}

// --- connectivity -----------------------------------------------------------

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) {
        uf.unite(e.u, e.v);
    }
    std::map<std::size_t, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        groups[uf.find(v)].push_back(v);
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Multigraph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<std::vector<VertexId>> block_vertex_sets(const Multigraph& g) {
    const auto adj = g.simple_adjacency();
    const std::size_t n = g.vertex_count();
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<std::pair<VertexId, VertexId>> edge_stack;
    std::vector<std::vector<VertexId>> result;
    int timer = 0;

    // Iterative Hopcroft-Tarjan over the simple graph.
    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != -1) {
            continue;
        }
        std::vector<Frame> stack{{root, root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                VertexId w = adj[f.v][f.next++];
                if (w == f.parent && f.v != root) {
                    continue;
                }
                if (disc[w] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            VertexId v = f.v;
            VertexId parent = f.parent;
            stack.pop_back();
            if (stack.empty()) {
                break;
            }
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                std::set<VertexId> members;
                while (!edge_stack.empty()) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    members.insert(a);
                    members.insert(b);
                    if (a == parent && b == v) {
                        break;
                    }
                }
                result.emplace_back(members.begin(), members.end());
            }
        }
    }
    return result;
}

bool is_two_connected(const Multigraph& g) {
    if (g.vertex_count() < 2) {
        return false;
    }
    auto sets = block_vertex_sets(g);
    return sets.size() == 1 && sets[0].size() == g.vertex_count();
}

bool is_three_connected(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 4 || !is_two_connected(g)) {
        return false;
    }
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            std::vector<VertexId> drop{a, b};
            if (!is_connected(remove_vertices(g, drop))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Multigraph> blocks(const Multigraph& g) {
    auto sets = block_vertex_sets(g);
    std::vector<std::pair<EdgeId, Multigraph>> keyed;
    for (const auto& s : sets) {
        Multigraph b = induced_subgraph(g, s);
        EdgeId key = b.edges().empty() ? 0 : b.edges().front().id;
        keyed.emplace_back(key, std::move(b));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Multigraph> out;
    for (auto& [key, b] : keyed) {
        out.push_back(std::move(b));
    }
    return out;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices) {
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::optional<VertexId>> remap(g.vertex_count());
    Multigraph out;
    for (VertexId v : sorted) {
        remap.at(v) = out.add_vertex(g.label(v));
    }
    for (const Edge& e : g.edges()) {
        if (remap[e.u] && remap[e.v]) {
            out.add_edge_with_id(e.id, *remap[e.u], *remap[e.v]);
        }
    }
    return out;
}

Multigraph remove_vertices(const Multigraph& g, std::span<const VertexId> vertices) {
    std::vector<bool> drop(g.vertex_count(), false);
    for (VertexId v : vertices) {
        drop.at(v) = true;
    }
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!drop[v]) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

// --- minors -----------------------------------------------------------------

Contraction contract_edges(const Multigraph& g, std::span<const EdgeId> edges) {
    UnionFind uf(g.vertex_count());
    std::set<EdgeId> contracted;
    for (EdgeId id : edges) {
        auto e = g.find_edge(id);
        if (!e) {
            throw PreconditionError("unknown edge id " + std::to_string(id));
        }
        uf.unite(e->u, e->v);
        contracted.insert(id);
    }
    std::map<std::size_t, std::vector<VertexId>> classes;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        classes[uf.find(v)].push_back(v);
    }
    Contraction result;
    result.vertex_map.assign(g.vertex_count(), 0);
    for (auto& [root, members] : classes) {
        std::string label = g.label(members.front());
        for (std::size_t i = 1; i < members.size(); ++i) {
            label += "+" + g.label(members[i]);
        }
        VertexId nv = result.graph.add_vertex(label);
        for (VertexId v : members) {
            result.vertex_map[v] = nv;
        }
    }
    std::size_t loops = g.loops_removed();
    for (const Edge& e : g.edges()) {
        if (contracted.contains(e.id)) {
            continue;
        }
        VertexId a = result.vertex_map[e.u];
        VertexId b = result.vertex_map[e.v];
        if (a == b) {
            ++loops;
            continue;
        }
        result.graph.add_edge_with_id(e.id, a, b);
    }
    result.graph.set_loops_removed(loops);
    return result;
}

Multigraph delete_edge(const Multigraph& g, EdgeId id) {
    if (!g.has_edge(id)) {
        throw PreconditionError("unknown edge id " + std::to_string(id));
    }
    Multigraph out;
    for (const auto& label : g.labels()) {
        out.add_vertex(label);
    }
    for (const Edge& e : g.edges()) {
        if (e.id != id) {
            out.add_edge_with_id(e.id, e.u, e.v);
        }
    }
    out.set_loops_removed(g.loops_removed());
    return out;
}

Multigraph minor_op(const Multigraph& g, EdgeId e, MinorKind kind) {
    if (kind == MinorKind::Delete) {
        return delete_edge(g, e);
    }
    std::vector<EdgeId> one{e};
    return contract_edges(g, one).graph;
}

// --- ears -------------------------------------------------------------------

bool is_cycle_graph(const Multigraph& g) {
    if (g.vertex_count() < 2 || g.edge_count() != g.vertex_count() || !is_connected(g)) {
        return false;
    }
    auto deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
}

EarList ears(const Multigraph& g) {
    EarList out;
    if (is_cycle_graph(g)) {
        out.is_cycle = true;
        return out;
    }
    const auto deg = g.degrees();
    const auto inc = incidence(g);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (deg[start] == 2) {
            continue;
        }
        for (EdgeId first : inc[start]) {
            Ear ear;
            ear.path.push_back(start);
            VertexId cur = start;
            EdgeId via = first;
            while (true) {
                Edge e = *g.find_edge(via);
                VertexId next = e.other(cur);
                ear.edges.push_back(via);
                ear.path.push_back(next);
                if (deg[next] != 2 || next == start) {
                    break;
                }
                const auto& around = inc[next];
                via = around[0] == via ? around[1] : around[0];
                cur = next;
            }
            if (ear.edges.size() < 2 || ear.edges.front() > ear.edges.back()) {
                continue;
            }
            if (ear.path.back() < ear.path.front()) {
                std::reverse(ear.path.begin(), ear.path.end());
                std::reverse(ear.edges.begin(), ear.edges.end());
            }
            out.ears.push_back(std::move(ear));
        }
    }
    std::sort(out.ears.begin(), out.ears.end(), [](const Ear& a, const Ear& b) {
        return std::tie(a.path, a.edges) < std::tie(b.path, b.edges);
    });
    return out;
}

// --- cycles and minors ------------------------------------------------------

std::vector<std::size_t> chordless_cycles(const Multigraph& g, ChordlessOptions options) {
    const std::size_t n = g.vertex_count();
    const auto adj_list = g.simple_adjacency();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : adj_list[v]) {
            adj[v][w] = true;
        }
    }
    std::vector<std::size_t> lengths;
    std::size_t nodes = 0;
    auto check_guard = [&] {
        if (lengths.size() > options.guard || nodes > 10 * options.guard) {
            throw ResourceError("chordless cycle enumeration exceeded guard");
        }
    };

    std::vector<VertexId> path;
    std::vector<bool> on_path(n, false);
    std::function<void()> extend = [&] {
        ++nodes;
        check_guard();
        const VertexId s = path.front();
        const VertexId last = path.back();
        for (VertexId x : adj_list[last]) {
            if (x <= s || on_path[x]) {
                continue;
            }
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (adj[x][path[i]]) {
                    chord = true;
                    break;
                }
            }
            if (chord) {
                continue;
            }
            if (path.size() >= 2 && adj[x][s]) {
                if (path[1] < x) {
                    lengths.push_back(path.size() + 1);
                    check_guard();
                }
                continue;
            }
            path.push_back(x);
            on_path[x] = true;
            extend();
            on_path[x] = false;
            path.pop_back();
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = true;
        extend();
        on_path[s] = false;
    }
    if (options.count_parallel_pairs) {
        std::map<std::pair<VertexId, VertexId>, std::size_t> mult;
        for (const Edge& e : g.edges()) {
            if (!e.is_loop()) {
                auto key = std::minmax(e.u, e.v);
                ++mult[{key.first, key.second}];
            }
        }
        for (const auto& [pair, m] : mult) {
            for (std::size_t k = 0; k < m * (m - 1) / 2; ++k) {
                lengths.push_back(2);
            }
        }
        check_guard();
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool is_k4_minor_free(const Multigraph& g) {
    std::vector<std::set<VertexId>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
    }
    std::vector<bool> alive(g.vertex_count(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < adj.size(); ++v) {
            if (!alive[v]) {
                continue;
            }
            if (adj[v].size() <= 1) {
                for (VertexId w : adj[v]) {
                    adj[w].erase(v);
                }
                adj[v].clear();
                alive[v] = false;
                changed = true;
            } else if (adj[v].size() == 2) {
                VertexId a = *adj[v].begin();
                VertexId b = *std::next(adj[v].begin());
                adj[a].erase(v);
                adj[b].erase(v);
                adj[a].insert(b);
                adj[b].insert(a);
                adj[v].clear();
                alive[v] = false;
                changed = true;
            }
        }
    }
    return std::none_of(alive.begin(), alive.end(), [](bool a) { return a; });
}

// --- forests ----------------------------------------------------------------

void for_each_forest(const Multigraph& g, ForestKind kind, std::size_t guard,
                     const std::function<void(const std::vector<EdgeId>&)>& visit) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) {
            edges.push_back(e);
        }
    }
    std::vector<EdgeId> all_ids;
    for (const Edge& e : edges) {
        all_ids.push_back(e.id);
    }
    const std::size_t rank = graphic_rank(g, all_ids);
    std::size_t produced = 0;
    std::size_t nodes = 0;
    std::vector<EdgeId> chosen;

    std::function<void(std::size_t, const std::vector<std::size_t>&)> recurse =
        [&](std::size_t i, const std::vector<std::size_t>& comp) {
            if (++nodes > 20 * guard) {
                throw ResourceError("forest enumeration exceeded node guard");
            }
            if (kind == ForestKind::SpanningTrees && chosen.size() + (edges.size() - i) < rank) {
                return;
            }
            if (i == edges.size()) {
                if (kind == ForestKind::SpanningTrees && chosen.size() != rank) {
                    return;
                }
                if (++produced > guard) {
                    throw ResourceError("forest enumeration exceeded guard of " + std::to_string(guard));
                }
                visit(chosen);
                return;
            }
            const Edge& e = edges[i];
            if (comp[e.u] != comp[e.v]) {
                std::vector<std::size_t> merged = comp;
                std::size_t from = comp[e.v];
                std::size_t to = comp[e.u];
                for (auto& c : merged) {
                    if (c == from) {
                        c = to;
                    }
                }
                chosen.push_back(e.id);
                recurse(i + 1, merged);
                chosen.pop_back();
            }
            recurse(i + 1, comp);
        };
    std::vector<std::size_t> comp(g.vertex_count());
    std::iota(comp.begin(), comp.end(), 0);
    recurse(0, comp);
}

std::vector<std::vector<EdgeId>> bases_and_forests(const Multigraph& g, ForestKind kind, std::size_t guard) {
    std::vector<std::vector<EdgeId>> out;
    for_each_forest(g, kind, guard, [&](const std::vector<EdgeId>& f) { out.push_back(f); });
    return out;
}

// --- blow-ups and rank ------------------------------------------------------

std::optional<BlowUpFactor> blow_up_factor(const Multigraph& g) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            throw PreconditionError("blow_up_factor expects a loopless graph");
        }
        auto key = std::minmax(e.u, e.v);
        classes[{key.first, key.second}].push_back(e.id);
    }
    if (classes.empty()) {
        throw PreconditionError("blow_up_factor expects at least one edge");
    }
    const std::size_t m = classes.begin()->second.size();
    for (const auto& [pair, ids] : classes) {
        if (ids.size() != m) {
            return std::nullopt;
        }
    }
    BlowUpFactor out{m, Multigraph{}};
    for (const auto& label : g.labels()) {
        out.base.add_vertex(label);
    }
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (classes[{key.first, key.second}].front() == e.id) {
            out.base.add_edge_with_id(e.id, e.u, e.v);
        }
    }
    return out;
}

std::size_t graphic_rank(const Multigraph& g, std::span<const EdgeId> edges) {
    UnionFind uf(g.vertex_count());
    std::size_t rank = 0;
    for (EdgeId id : edges) {
        auto e = g.find_edge(id);
        if (!e) {
            throw PreconditionError("unknown edge id " + std::to_string(id));
        }
        if (uf.unite(e->u, e->v)) {
            ++rank;
        }
    }
    return rank;
}

// --- isomorphism ------------------------------------------------------------

std::optional<std::vector<VertexId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                      std::size_t max_vertices) {
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    if (n > max_vertices) {
        throw ResourceError("isomorphism search limited to " + std::to_string(max_vertices) + " vertices");
    }
    auto matrix = [n](const Multigraph& g) {
        std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
        for (const Edge& e : g.edges()) {
            ++m[e.u][e.v];
            if (!e.is_loop()) {
                ++m[e.v][e.u];
            }
        }
        return m;
    };
    const auto ma = matrix(a);
    const auto mb = matrix(b);
    const auto da = a.degrees();
    const auto db = b.degrees();
    {
        auto sa = da;
        auto sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
            return std::nullopt;
        }
    }
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) { return da[x] > da[y]; });

    std::vector<VertexId> image(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == n) {
            return true;
        }
        VertexId x = order[k];
        for (VertexId y = 0; y < n; ++y) {
            if (used[y] || db[y] != da[x] || mb[y][y] != ma[x][x]) {
                continue;
            }
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                VertexId px = order[j];
                ok = ma[x][px] == mb[y][image[px]];
            }
            if (!ok) {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if (place(k + 1)) {
                return true;
            }
            used[y] = false;
        }
        return false;
    };
    if (!place(0)) {
        return std::nullopt;
    }
    return image;
}

bool isomorphic(const Multigraph& a, const Multigraph& b, std::size_t max_vertices) {
    return find_isomorphism(a, b, max_vertices).has_value();
}

}  // namespace gorenstein
