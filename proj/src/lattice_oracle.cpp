#include "gorenstein/lattice_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "gorenstein/errors.hpp"
#include "gorenstein/flats.hpp"
#include "gorenstein/graph_algorithms.hpp"

namespace gorenstein {

namespace {

using Bits = boost::dynamic_bitset<>;

IntVector homogenize(Int t, const IntVector& c) {
    IntVector out{t};
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

Int ceil_div(Int a, Int b) {  // b > 0
    Int q = a / b;
    if (a % b != 0 && a > 0) {
        ++q;
    }
    return q;
}

Int floor_div(Int a, Int b) {  // b > 0
    Int q = a / b;
    if (a % b != 0 && a < 0) {
        --q;
    }
    return q;
}

Int binomial(Int n, Int k) {
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

IntVector to_integer(const std::vector<Rational>& v) {
    // scale by the lcm of denominators, then make primitive
    boost::multiprecision::cpp_int l = 1;
    for (const auto& x : v) {
        const auto d = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    IntVector out;
    for (const auto& x : v) {
        const boost::multiprecision::cpp_int n = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
        if (n > std::numeric_limits<Int>::max() || n < std::numeric_limits<Int>::min()) {
            throw ResourceError("integer overflow in exact arithmetic");
        }
        out.push_back(static_cast<Int>(n));
    }
    make_primitive(out);
    return out;
}

std::vector<std::size_t> independent_subset(const std::vector<IntVector>& gens, std::size_t target) {
    std::vector<std::size_t> chosen;
    IntMatrix rows;
    for (std::size_t i = 0; i < gens.size() && chosen.size() < target; ++i) {
        rows.push_back(gens[i]);
        if (rank(rows) == rows.size()) {
            chosen.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    return chosen;
}

}  // namespace

std::vector<Facet> hull_facets(const std::vector<IntVector>& gens) {
    if (gens.empty()) {
        throw PreconditionError("hull of an empty point set");
    }
    const std::size_t dim = gens[0].size();
    const std::size_t count = gens.size();
    const auto basis = independent_subset(gens, dim);
    if (basis.size() != dim) {
        throw PreconditionError("cone generators do not span the space");
    }

    IntMatrix a;
    for (std::size_t i : basis) {
        a.push_back(gens[i]);
    }
    const auto inv = inverse(a);
    std::vector<IntVector> rays;
    std::vector<Bits> zeros;
    Bits processed(count);
    for (std::size_t i : basis) {
        processed.set(i);
    }
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Rational> column(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            column[i] = inv[i][j];
        }
        rays.push_back(to_integer(column));
        Bits z(count);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i != j) {
                z.set(basis[i]);
            }
        }
        zeros.push_back(std::move(z));
    }

    for (std::size_t t = 0; t < count; ++t) {
        if (processed.test(t)) {
            continue;
        }
        processed.set(t);
        const IntVector& w = gens[t];
        std::vector<Int> value(rays.size());
        std::vector<std::size_t> pos;
        std::vector<std::size_t> neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(rays[r], w);
            if (value[r] > 0) {
                pos.push_back(r);
            } else if (value[r] < 0) {
                neg.push_back(r);
            }
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r) {
                if (value[r] == 0) {
                    zeros[r].set(t);
                }
            }
            continue;
        }
        std::vector<IntVector> next_rays;
        std::vector<Bits> next_zeros;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] >= 0) {
                next_rays.push_back(rays[r]);
                next_zeros.push_back(zeros[r]);
                if (value[r] == 0) {
                    next_zeros.back().set(t);
                }
            }
        }
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bits common = zeros[p] & zeros[n];
                if (common.count() + 2 < dim) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r != p && r != n && common.is_subset_of(zeros[r])) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                IntVector h(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    h[i] = checked_sub(checked_mul(value[p], rays[n][i]), checked_mul(value[n], rays[p][i]));
                }
                make_primitive(h);
                common.set(t);
                next_rays.push_back(std::move(h));
                next_zeros.push_back(std::move(common));
            }
        }
        rays = std::move(next_rays);
        zeros = std::move(next_zeros);
    }

    std::vector<Facet> out;
    for (auto& r : rays) {
        out.push_back(Facet{std::move(r)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LatticePolytope polytope_from_vertices(std::vector<IntVector> vertices) {
    if (vertices.empty()) {
        throw PreconditionError("polytope needs at least one vertex");
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    LatticePolytope p;
    p.ambient_dim = vertices.front().size();
    p.vertices = std::move(vertices);
    p.origin = p.vertices.front();

    IntMatrix diffs;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        IntVector d(p.ambient_dim);
        for (std::size_t j = 0; j < p.ambient_dim; ++j) {
            d[j] = checked_sub(p.vertices[i][j], p.origin[j]);
        }
        diffs.push_back(std::move(d));
    }
    Hnf hnf = hermite_normal_form(std::move(diffs));
    p.lattice_basis = hnf.rows;
    p.pivots = hnf.pivots;
    p.dim = hnf.rows.size();

    std::vector<IntVector> gens;
    for (const auto& v : p.vertices) {
        IntVector rel(p.ambient_dim);
        for (std::size_t j = 0; j < p.ambient_dim; ++j) {
            rel[j] = v[j] - p.origin[j];
        }
        auto c = lattice_coordinates(hnf, rel);
        if (!c) {
            throw InternalContradiction("vertex outside the lattice spanned by the vertices");
        }
        gens.push_back(homogenize(1, *c));
        p.vertex_coords.push_back(std::move(*c));
    }
    p.facets = hull_facets(gens);
    p.saturation_index = gcd_of_maximal_minors(p.lattice_basis);
    return p;
}

LatticePolytope polytope_of(const Multigraph& input, PolytopeKind kind, const OracleLimits& limits) {
    const Multigraph g = normalize(input);
    const std::size_t m = g.edge_count();
    std::vector<IntVector> vertices;
    for_each_forest(g, kind == PolytopeKind::Base ? ForestKind::SpanningTrees : ForestKind::Forests,
                    limits.vertex_guard, [&](const std::vector<EdgeId>& forest) {
                        IntVector x(m, 0);
                        for (EdgeId e : forest) {
                            x[edge_index(g, e)] = 1;
                        }
                        vertices.push_back(std::move(x));
                    });
    return polytope_from_vertices(std::move(vertices));
}

LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b) {
    std::vector<IntVector> vertices;
    for (const auto& u : a.vertices) {
        for (const auto& v : b.vertices) {
            IntVector w = u;
            w.insert(w.end(), v.begin(), v.end());
            vertices.push_back(std::move(w));
        }
    }
    return polytope_from_vertices(std::move(vertices));
}

IntVector ambient_point(const LatticePolytope& p, Int t, const IntVector& c) {
    IntVector x(p.ambient_dim);
    for (std::size_t j = 0; j < p.ambient_dim; ++j) {
        x[j] = checked_mul(t, p.origin[j]);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < p.ambient_dim; ++j) {
            x[j] = checked_add(x[j], checked_mul(c[i], p.lattice_basis[i][j]));
        }
    }
    return x;
}

std::vector<Facet> facets_by_subsets(const LatticePolytope& p, const OracleLimits& limits) {
    const std::size_t k = p.vertices.size();
    const std::size_t dim = p.dim + 1;
    if (p.dim == 0) {
        return {Facet{IntVector{1}}};
    }
    if (k > limits.subset_vertex_guard) {
        throw ResourceError("subset facet enumeration limited to " + std::to_string(limits.subset_vertex_guard) +
                            " vertices, polytope has " + std::to_string(k));
    }
    double combos = 1;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        combos = combos * static_cast<double>(k - i) / static_cast<double>(i + 1);
    }
    if (combos > static_cast<double>(limits.subset_guard)) {
        throw ResourceError("subset facet enumeration exceeds the subset guard");
    }
    std::vector<IntVector> gens;
    for (const auto& c : p.vertex_coords) {
        gens.push_back(homogenize(1, c));
    }
    std::set<Facet> found;
    for_each_subset_by_size(k, dim - 1, dim - 1, [&](std::uint64_t mask) {
        IntMatrix rows;
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) {
                rows.push_back(gens[i]);
            }
        }
        IntVector h = kernel_vector(rows);
        if (gcd_of(h) == 0) {
            return;
        }
        bool has_pos = false;
        bool has_neg = false;
        for (const auto& g : gens) {
            const Int v = dot(h, g);
            has_pos = has_pos || v > 0;
            has_neg = has_neg || v < 0;
        }
        if (has_pos && has_neg) {
            return;
        }
        if (has_neg) {
            for (Int& x : h) {
                x = -x;
            }
        }
        found.insert(Facet{std::move(h)});
    });
    return {found.begin(), found.end()};
}

Facet lattice_functional(const LatticePolytope& p, const IntVector& a, Int a0) {
    Facet f;
    f.h.push_back(checked_add(dot(a, p.origin), a0));
    for (const auto& b : p.lattice_basis) {
        f.h.push_back(dot(a, b));
    }
    make_primitive(f.h);
    return f;
}

std::vector<PredictedFacet> predicted_base_facets(const Multigraph& input, const LatticePolytope& p) {
    const Multigraph g = normalize(input);
    if (!is_two_connected(g)) {
        throw PreconditionError("predicted base facets need a 2-connected graph");
    }
    const std::size_t m = g.edge_count();
    if (p.ambient_dim != m) {
        throw PreconditionError("polytope does not match the graph");
    }
    std::vector<PredictedFacet> out;
    if (m < 2) {
        return out;
    }
    for (const Edge& e : g.edges()) {
        if (!is_two_connected(minor_op(g, e.id, MinorKind::Delete))) {
            continue;
        }
        IntVector a(m, 0);
        a[edge_index(g, e.id)] = 1;
        PredictedFacet pf;
        pf.type = PredictedFacet::Type::Nonnegativity;
        pf.edge = e.id;
        pf.facet = lattice_functional(p, a, 0);
        const std::size_t idx = edge_index(g, e.id);
        IntVector raw{p.origin[idx]};
        for (const auto& b : p.lattice_basis) {
            raw.push_back(b[idx]);
        }
        pf.reduced_form_primitive = gcd_of(raw) == 1;
        out.push_back(std::move(pf));
    }
    const std::vector<EdgeId> all_edges = g.edge_ids();
    const Int rank_e = static_cast<Int>(graphic_rank(g, all_edges));
    for (const GoodFlat& flat : good_flats(g)) {
        const Int rank_f = static_cast<Int>(graphic_rank(g, flat.induced_edges));
        IntVector a(m, rank_f);
        IntVector reduced(m, 0);
        for (EdgeId e : flat.induced_edges) {
            a[edge_index(g, e)] -= rank_e;
            reduced[edge_index(g, e)] = -1;
        }
        PredictedFacet pf;
        pf.type = PredictedFacet::Type::GoodFlat;
        pf.flat = flat.vertices;
        pf.facet = lattice_functional(p, a, 0);
        const Int size_term = static_cast<Int>(flat.vertices.size()) - 1;
        IntVector raw{checked_add(dot(reduced, p.origin), size_term)};
        for (const auto& b : p.lattice_basis) {
            raw.push_back(dot(reduced, b));
        }
        pf.reduced_form_primitive = gcd_of(raw) == 1;
        if (lattice_functional(p, reduced, size_term) != pf.facet) {
            throw InternalContradiction("reduced and rank-ratio forms of a flat inequality differ");
        }
        out.push_back(std::move(pf));
    }
    return out;
}

// The codegree of a d-dimensional lattice polytope is at most d + 1, so a
// Gorenstein index, when it exists, lies in [1, d + 1].
std::optional<GorensteinWitness> gorenstein_search(const LatticePolytope& p, std::optional<int> max_delta) {
    const int bound = max_delta.value_or(static_cast<int>(p.dim) + 1);
    IntMatrix h;
    for (const auto& f : p.facets) {
        h.push_back(f.h);
    }
    auto y = solve_full_column_rank(h, IntVector(h.size(), 1));
    if (!y) {
        return std::nullopt;
    }
    IntVector v;
    for (const auto& x : *y) {
        if (boost::multiprecision::denominator(x) != 1) {
            return std::nullopt;
        }
        v.push_back(static_cast<Int>(boost::multiprecision::numerator(x)));
    }
    if (v[0] < 1 || v[0] > bound) {
        return std::nullopt;
    }
    GorensteinWitness w;
    w.delta = static_cast<int>(v[0]);
    w.coords.assign(v.begin() + 1, v.end());
    w.point = ambient_point(p, v[0], w.coords);
    return w;
}

bool is_delta_gorenstein(const LatticePolytope& p, int delta) {
    auto w = gorenstein_search(p, delta);
    return w && w->delta == delta;
}

std::optional<GorensteinWitness> gorenstein_search_enumerative(const LatticePolytope& p, std::optional<int> max_delta,
                                                               const OracleLimits& limits) {
    const int bound = max_delta.value_or(static_cast<int>(p.dim) + 1);
    for (int delta = 1; delta <= bound; ++delta) {
        for (const auto& c : lattice_points(p, delta, 1, limits)) {
            const IntVector y = homogenize(delta, c);
            if (std::all_of(p.facets.begin(), p.facets.end(), [&](const Facet& f) { return dot(f.h, y) == 1; })) {
                return GorensteinWitness{delta, c, ambient_point(p, delta, c)};
            }
        }
    }
    return std::nullopt;
}

std::vector<IntVector> lattice_points(const LatticePolytope& p, Int k, Int min_value, const OracleLimits& limits) {
    if (k < 0) {
        throw PreconditionError("dilation factor must be nonnegative");
    }
    const std::size_t d = p.dim;
    // facets grouped by the last lattice coordinate they involve
    std::vector<std::vector<const Facet*>> by_level(d + 1);
    for (const auto& f : p.facets) {
        std::size_t level = 0;
        for (std::size_t i = 1; i <= d; ++i) {
            if (f.h[i] != 0) {
                level = i;
            }
        }
        by_level[level].push_back(&f);
    }
    IntVector lo(p.ambient_dim);
    IntVector hi(p.ambient_dim);
    for (std::size_t j = 0; j < p.ambient_dim; ++j) {
        lo[j] = hi[j] = p.vertices.front()[j];
        for (const auto& v : p.vertices) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }

    std::vector<IntVector> out;
    for (const Facet* f : by_level[0]) {
        if (checked_mul(f->h[0], k) < min_value) {
            return out;
        }
    }
    IntVector c(d, 0);
    std::size_t nodes = 0;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (++nodes > limits.node_guard) {
            throw ResourceError("lattice point enumeration exceeded " + std::to_string(limits.node_guard) + " nodes");
        }
        if (i == d) {
            out.push_back(c);
            return;
        }
        const std::size_t col = p.pivots[i];
        Int partial = checked_mul(k, p.origin[col]);
        for (std::size_t j = 0; j < i; ++j) {
            partial = checked_add(partial, checked_mul(c[j], p.lattice_basis[j][col]));
        }
        const Int piv = p.lattice_basis[i][col];
        const Int from = ceil_div(checked_sub(checked_mul(k, lo[col]), partial), piv);
        const Int to = floor_div(checked_sub(checked_mul(k, hi[col]), partial), piv);
        for (Int x = from; x <= to; ++x) {
            c[i] = x;
            bool ok = true;
            for (const Facet* f : by_level[i + 1]) {
                Int s = checked_mul(f->h[0], k);
                for (std::size_t j = 0; j <= i; ++j) {
                    s = checked_add(s, checked_mul(f->h[j + 1], c[j]));
                }
                if (s < min_value) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                self(self, i + 1);
            }
        }
        c[i] = 0;
    };
    recurse(recurse, 0);
    return out;
}

HStarVector hstar(const LatticePolytope& p, const OracleLimits& limits) {
    HStarVector out;
    const Int d = static_cast<Int>(p.dim);
    for (Int k = 0; k <= d; ++k) {
        out.ehrhart.push_back(static_cast<Int>(lattice_points(p, k, 0, limits).size()));
    }
    for (Int i = 0; i <= d; ++i) {
        Int s = 0;
        for (Int j = 0; j <= i; ++j) {
            const Int term = checked_mul(binomial(d + 1, j), out.ehrhart[static_cast<std::size_t>(i - j)]);
            s = (j % 2 == 0) ? checked_add(s, term) : checked_sub(s, term);
        }
        out.coefficients.push_back(s);
    }
    while (out.coefficients.size() > 1 && out.coefficients.back() == 0) {
        out.coefficients.pop_back();
    }
    out.palindromic = std::equal(out.coefficients.begin(), out.coefficients.end(), out.coefficients.rbegin());
    return out;
}

NormalityResult normality_probe(const LatticePolytope& p, Int kmax, const OracleLimits& limits) {
    if (kmax < 2) {
        throw PreconditionError("normality probe needs kmax >= 2");
    }
    NormalityResult result;
    const auto base = lattice_points(p, 1, 0, limits);
    std::set<IntVector> sums(base.begin(), base.end());
    for (Int k = 2; k <= kmax; ++k) {
        std::set<IntVector> next;
        for (const auto& s : sums) {
            for (const auto& b : base) {
                IntVector v(s.size());
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v[i] = checked_add(s[i], b[i]);
                }
                next.insert(std::move(v));
            }
            if (next.size() > limits.node_guard) {
                throw ResourceError("normality probe exceeded the node guard");
            }
        }
        sums = std::move(next);
        for (const auto& c : lattice_points(p, k, 0, limits)) {
            if (!sums.contains(c)) {
                result.passed = false;
                result.failing_k = k;
                result.counterexample = ambient_point(p, k, c);
                return result;
            }
        }
    }
    return result;
}

std::string dump_polytope(const LatticePolytope& p) {
    std::ostringstream out;
    auto row = [&out](const IntVector& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << (i ? " " : "") << v[i];
        }
        out << '\n';
    };
    out << "# ambient " << p.ambient_dim << ", dim " << p.dim << ", " << p.vertices.size() << " vertices, "
        << p.facets.size() << " facets\n";
    for (const auto& v : p.vertices) {
        row(v);
    }
    out << "%lattice\n";
    row(p.origin);
    for (const auto& b : p.lattice_basis) {
        row(b);
    }
    out << "%facets\n";
    for (const auto& f : p.facets) {
        row(f.h);
    }
    return out.str();
}

}  // namespace gorenstein
