#pragma once

// Test-side brute-force oracles. They work on plain adjacency matrices and use
// nothing from the library except Multigraph for input conversion.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/multigraph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Mat {
    int n = 0;
    std::vector<std::vector<int>> m;  // edge multiplicities, loops ignored

    explicit Mat(int size = 0) : n(size), m(size, std::vector<int>(size, 0)) {}
    void add(int u, int v, int k = 1) {
        m[u][v] += k;
        m[v][u] += k;
    }
    int edge_count() const {
        int total = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                total += m[i][j];
            }
        }
        return total;
    }
    Mask all() const { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }
};

inline Mat from_graph(const gorenstein::Multigraph& g) {
    Mat a(static_cast<int>(g.vertex_count()));
    for (const auto& e : g.edges()) {
        if (e.u != e.v) {
            a.add(static_cast<int>(e.u), static_cast<int>(e.v));
        }
    }
    return a;
}

/// Parses "0-1 1-2 2-0" into a simple Multigraph with labels as given.
inline gorenstein::Multigraph graph(const std::string& spec) {
    std::string text = spec;
    std::replace(text.begin(), text.end(), '-', ' ');
    std::string lines;
    std::size_t i = 0;
    int field = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') {
            ++i;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ') {
            ++j;
        }
        if (j > i) {
            lines += text.substr(i, j - i);
            lines += (field++ % 2 == 0) ? " " : "\n";
        }
        i = j;
    }
    return gorenstein::parse_graph(lines);
}

inline int popcount(Mask s) { return std::popcount(s); }

inline int components(const Mat& a, Mask alive) {
    int count = 0;
    Mask seen = 0;
    for (int s = 0; s < a.n; ++s) {
        if (!(alive >> s & 1) || (seen >> s & 1)) {
            continue;
        }
        ++count;
        std::vector<int> stack{s};
        seen |= Mask{1} << s;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < a.n; ++y) {
                if ((alive >> y & 1) && !(seen >> y & 1) && a.m[x][y] > 0) {
                    seen |= Mask{1} << y;
                    stack.push_back(y);
                }
            }
        }
    }
    return count;
}

inline bool two_connected(const Mat& a, Mask alive) {
    const int k = popcount(alive);
    if (k < 2 || components(a, alive) != 1) {
        return false;
    }
    if (k == 2) {
        return true;
    }
    for (int v = 0; v < a.n; ++v) {
        if ((alive >> v & 1) && components(a, alive & ~(Mask{1} << v)) != 1) {
            return false;
        }
    }
    return true;
}
inline bool two_connected(const Mat& a) { return two_connected(a, a.all()); }

inline Mat induced(const Mat& a, Mask s) {
    std::vector<int> idx;
    for (int v = 0; v < a.n; ++v) {
        if (s >> v & 1) {
            idx.push_back(v);
        }
    }
    Mat b(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            b.m[i][j] = a.m[idx[i]][idx[j]];
        }
    }
    return b;
}

/// G / E(S): S becomes vertex 0, edges inside S disappear.
inline Mat contract(const Mat& a, Mask s) {
    std::vector<int> to(a.n);
    int next = 1;
    for (int v = 0; v < a.n; ++v) {
        to[v] = (s >> v & 1) ? 0 : next++;
    }
    Mat b(next);
    for (int u = 0; u < a.n; ++u) {
        for (int v = u + 1; v < a.n; ++v) {
            if (a.m[u][v] > 0 && to[u] != to[v]) {
                b.add(to[u], to[v], a.m[u][v]);
            }
        }
    }
    return b;
}

inline int induced_edges(const Mat& a, Mask s) { return induced(a, s).edge_count(); }

/// Number of blocks of a connected graph: 1 + sum over v of (components of G - v) - 1.
inline int block_count(const Mat& a) {
    if (a.n <= 1) {
        return 0;
    }
    int b = 1;
    for (int v = 0; v < a.n; ++v) {
        b += components(a, a.all() & ~(Mask{1} << v)) - 1;
    }
    return b;
}

inline std::vector<Mask> good_flats(const Mat& a) {
    std::vector<Mask> out;
    for (Mask s = 1; s < a.all(); ++s) {
        if (popcount(s) >= 2 && two_connected(a, s) && two_connected(contract(a, s))) {
            out.push_back(s);
        }
    }
    return out;
}

inline std::vector<Mask> indecomposable_flats(const Mat& a) {
    std::vector<Mask> out;
    for (Mask s = 1; s <= a.all(); ++s) {
        if (popcount(s) >= 2 && two_connected(a, s)) {
            out.push_back(s);
        }
    }
    return out;
}

inline Mask to_mask(const std::vector<std::size_t>& vs) {
    Mask s = 0;
    for (auto v : vs) {
        s |= Mask{1} << v;
    }
    return s;
}

// Edge weights from the definition: 1 if G \ e is 2-connected, delta - 1 if G / e is.
// nullopt when neither or conflicting.
inline std::optional<int> edge_weight(const Mat& a, int u, int v, int delta) {
    Mat del = a;
    del.m[u][v]--;
    del.m[v][u]--;
    const bool d = two_connected(del);
    const bool c = two_connected(contract(a, (Mask{1} << u) | (Mask{1} << v)));
    if (d && c) {
        return delta == 2 ? std::optional<int>(1) : std::nullopt;
    }
    if (d) {
        return 1;
    }
    if (c) {
        return delta - 1;
    }
    return std::nullopt;
}

/// Weight sum of E(S), or nullopt if some edge has no weight.
inline std::optional<long> weight_sum(const Mat& a, Mask s, int delta) {
    long total = 0;
    for (int u = 0; u < a.n; ++u) {
        for (int v = u + 1; v < a.n; ++v) {
            if ((s >> u & 1) && (s >> v & 1) && a.m[u][v] > 0) {
                auto w = edge_weight(a, u, v, delta);
                if (!w) {
                    return std::nullopt;
                }
                total += static_cast<long>(*w) * a.m[u][v];
            }
        }
    }
    return total;
}

inline bool spade(const Mat& a, int delta) {
    auto total = weight_sum(a, a.all(), delta);
    if (!total || *total != static_cast<long>(delta) * (a.n - 1)) {
        return false;
    }
    for (Mask s : good_flats(a)) {
        if (*weight_sum(a, s, delta) + 1 != static_cast<long>(delta) * (popcount(s) - 1)) {
            return false;
        }
    }
    return true;
}

inline bool heart(const Mat& a, int delta) {
    if (!weight_sum(a, a.all(), delta)) {
        return false;
    }
    for (Mask s : indecomposable_flats(a)) {
        const int k = s == a.all() ? 0 : block_count(contract(a, s));
        if (*weight_sum(a, s, delta) + k != static_cast<long>(delta) * (popcount(s) - 1)) {
            return false;
        }
    }
    return true;
}

inline bool club(const Mat& a, int delta) {
    for (Mask s : indecomposable_flats(a)) {
        if (static_cast<long>(delta - 1) * induced_edges(a, s) + 1 != static_cast<long>(delta) * (popcount(s) - 1)) {
            return false;
        }
    }
    return true;
}

/// Induced cycle lengths over vertex subsets.
inline std::vector<std::size_t> chordless_cycles(const Mat& a) {
    std::vector<std::size_t> out;
    for (Mask s = 1; s <= a.all(); ++s) {
        if (popcount(s) < 3) {
            continue;
        }
        bool ok = components(a, s) == 1;
        for (int v = 0; ok && v < a.n; ++v) {
            if (!(s >> v & 1)) {
                continue;
            }
            int deg = 0;
            for (int y = 0; y < a.n; ++y) {
                deg += (s >> y & 1) && a.m[v][y] > 0;
            }
            ok = deg == 2;
        }
        if (ok) {
            out.push_back(static_cast<std::size_t>(popcount(s)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// K4 minor: four disjoint connected branch sets, pairwise adjacent.
inline bool has_k4_minor(const Mat& a) {
    const long total = static_cast<long>(std::pow(5, a.n));
    for (long code = 0; code < total; ++code) {
        long c = code;
        Mask sets[4] = {0, 0, 0, 0};
        for (int v = 0; v < a.n; ++v) {
            const int k = static_cast<int>(c % 5);
            c /= 5;
            if (k < 4) {
                sets[k] |= Mask{1} << v;
            }
        }
        bool ok = true;
        for (int i = 0; ok && i < 4; ++i) {
            ok = sets[i] != 0 && components(a, sets[i]) == 1;
        }
        for (int i = 0; ok && i < 4; ++i) {
            for (int j = i + 1; ok && j < 4; ++j) {
                bool adjacent = false;
                for (int u = 0; u < a.n && !adjacent; ++u) {
                    for (int v = 0; v < a.n && !adjacent; ++v) {
                        adjacent = (sets[i] >> u & 1) && (sets[j] >> v & 1) && a.m[u][v] > 0;
                    }
                }
                ok = adjacent;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

inline bool isomorphic(const Mat& a, const Mat& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<int> p(a.n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; ok && u < a.n; ++u) {
            for (int v = 0; ok && v < a.n; ++v) {
                ok = a.m[u][v] == b.m[p[u]][p[v]];
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Lexicographically smallest relabelled adjacency matrix.
inline std::vector<int> canonical(const Mat& a) {
    std::vector<int> p(a.n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> code;
        code.reserve(static_cast<std::size_t>(a.n * a.n));
        for (int u = 0; u < a.n; ++u) {
            for (int v = 0; v < a.n; ++v) {
                code.push_back(a.m[p[u]][p[v]]);
            }
        }
        if (best.empty() || code < best) {
            best = std::move(code);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    best.insert(best.begin(), a.n);
    return best;
}

/// Every graph with at most max_n vertices obtainable from K2 by repeatedly adding a path
/// of delta edges between the two ends of an existing edge. Canonical forms.
inline std::set<std::vector<int>> cycle_construction_closure(int delta, int max_n) {
    std::set<std::vector<int>> seen;
    Mat k2(2);
    k2.add(0, 1);
    std::vector<Mat> frontier{k2};
    seen.insert(canonical(k2));
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& g : frontier) {
            const int n2 = g.n + delta - 1;
            if (n2 > max_n) {
                continue;
            }
            for (int u = 0; u < g.n; ++u) {
                for (int v = u + 1; v < g.n; ++v) {
                    if (g.m[u][v] == 0) {
                        continue;
                    }
                    Mat h(n2);
                    for (int x = 0; x < g.n; ++x) {
                        for (int y = 0; y < g.n; ++y) {
                            h.m[x][y] = g.m[x][y];
                        }
                    }
                    int prev = u;
                    for (int k = g.n; k < n2; ++k) {
                        h.add(prev, k);
                        prev = k;
                    }
                    h.add(prev, v);
                    if (seen.insert(canonical(h)).second) {
                        next.push_back(h);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// ---------------------------------------------------------------------------
// Matroid polytopes through Edmonds' rank inequalities.

struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> e;
};

inline EdgeList edge_list(const gorenstein::Multigraph& g) {
    EdgeList out;
    out.n = static_cast<int>(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (e.u != e.v) {
            out.e.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
        }
    }
    return out;
}

inline int rank(const EdgeList& g, Mask f) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int r = 0;
    for (std::size_t i = 0; i < g.e.size(); ++i) {
        if (f >> i & 1) {
            int a = find(g.e[i].first);
            int b = find(g.e[i].second);
            if (a != b) {
                parent[a] = b;
                ++r;
            }
        }
    }
    return r;
}

inline long count_forests(const EdgeList& g, bool spanning) {
    const int full = rank(g, static_cast<Mask>((std::uint64_t{1} << g.e.size()) - 1));
    long count = 0;
    for (Mask f = 0; f < (Mask{1} << g.e.size()); ++f) {
        const int r = rank(g, f);
        if (r == popcount(f) && (!spanning || r == full)) {
            ++count;
        }
    }
    return count;
}

struct EhrhartBrute {
    std::vector<long> points;    // L(k)
    std::vector<long> interior;  // interior lattice points of kP
};

/// Lattice points of kP (k = 0..kmax), where P is the base (base = true) or independence polytope,
/// enumerated in the box [0, k]^E and filtered by x(F) <= k r(F). Interior points satisfy strictly
/// every inequality that is not an equality on all of P.
inline EhrhartBrute ehrhart(const EdgeList& g, bool base, int kmax) {
    const int m = static_cast<int>(g.e.size());
    const Mask full = static_cast<Mask>((std::uint64_t{1} << m) - 1);
    std::vector<int> ranks(std::size_t{1} << m);
    for (Mask f = 0; f <= full; ++f) {
        ranks[f] = rank(g, f);
    }
    // Inequalities: x(F) <= r(F) for F != 0, and x_e >= 0 (encoded as F with bit 31).
    std::vector<Mask> ineqs;
    for (Mask f = 1; f <= full; ++f) {
        ineqs.push_back(f);
    }
    for (int i = 0; i < m; ++i) {
        ineqs.push_back((Mask{1} << 31) | (Mask{1} << i));
    }
    auto sum = [&](const std::vector<int>& x, Mask f) {
        long s = 0;
        for (int i = 0; i < m; ++i) {
            s += (f >> i & 1) ? x[i] : 0;
        }
        return s;
    };
    auto slack = [&](const std::vector<int>& x, Mask q, int k) -> long {
        if (q >> 31 & 1) {
            return sum(x, q & ~(Mask{1} << 31));
        }
        return static_cast<long>(k) * ranks[q] - sum(x, q);
    };
    auto member = [&](const std::vector<int>& x, int k) {
        if (base && sum(x, full) != static_cast<long>(k) * ranks[full]) {
            return false;
        }
        for (Mask f = 1; f <= full; ++f) {
            if (sum(x, f) > static_cast<long>(k) * ranks[f]) {
                return false;
            }
        }
        return true;
    };
    // Inequalities tight on every vertex of P are implicit equalities.
    std::vector<std::vector<int>> vertices;
    std::vector<bool> implicit(ineqs.size(), true);
    for (Mask f = 0; f <= full; ++f) {
        std::vector<int> x(m);
        for (int i = 0; i < m; ++i) {
            x[i] = f >> i & 1;
        }
        if (member(x, 1)) {
            for (std::size_t q = 0; q < ineqs.size(); ++q) {
                if (slack(x, ineqs[q], 1) != 0) {
                    implicit[q] = false;
                }
            }
        }
    }
    EhrhartBrute out;
    for (int k = 0; k <= kmax; ++k) {
        long points = 0;
        long interior = 0;
        std::vector<int> x(m, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == m) {
                if (!member(x, k)) {
                    return;
                }
                ++points;
                bool strict = true;
                for (std::size_t q = 0; q < ineqs.size() && strict; ++q) {
                    strict = implicit[q] || slack(x, ineqs[q], k) > 0;
                }
                interior += strict ? 1 : 0;
                return;
            }
            for (int v = 0; v <= k; ++v) {
                x[i] = v;
                // prune: singleton upper bound
                if (v > k * ranks[Mask{1} << i]) {
                    break;
                }
                rec(i + 1);
            }
            x[i] = 0;
        };
        rec(0);
        out.points.push_back(points);
        out.interior.push_back(interior);
    }
    return out;
}

/// Gorenstein index by reciprocity: interior(k) = 0 for k < delta and interior(k) = L(k - delta)
/// for delta <= k <= delta + dim. nullopt if no delta <= dim + 1 works.
inline std::optional<int> gorenstein_index(const EdgeList& g, bool base, int dim) {
    if (dim == 0) {
        return 1;  // a point: the cone is a ray and t itself is the only facet
    }
    const EhrhartBrute e = ehrhart(g, base, 2 * dim + 1);
    for (int delta = 1; delta <= dim + 1; ++delta) {
        bool ok = true;
        for (int k = 0; k < delta && ok; ++k) {
            ok = e.interior[k] == 0;
        }
        for (int k = delta; k <= delta + dim && ok; ++k) {
            ok = e.interior[k] == e.points[k - delta];
        }
        if (ok) {
            return delta;
        }
    }
    return std::nullopt;
}

}  // namespace oracle
