#include <doctest.h>

#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/graph_enumeration.hpp"
#include "gorenstein/integer_linalg.hpp"
#include "gorenstein/lattice_oracle.hpp"
#include "oracles.hpp"

using namespace gorenstein;
using oracle::graph;

namespace {

const char* kC3 = "0-1 1-2 2-0";
const char* kK4 = "0-1 0-2 0-3 1-2 1-3 2-3";
const char* kC4 = "0-1 1-2 2-3 3-0";
const char* kC5Chord = "1-2 2-3 3-4 4-5 5-1 1-3";

std::vector<Multigraph> small_graphs(std::size_t max_edges) {
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Multigraph& g : all_simple_graphs(n)) {
            if (g.edge_count() <= max_edges) {
                out.push_back(g);
            }
        }
    }
    for (const char* text : {"0 1 2\n", "0 1 3\n", "0 1 2\n1 2\n", "0 1 2\n1 2 2\n2 0\n", "0 1 2\n1 2 2\n", "0 1\n1 1\n1 2\n"}) {
        out.push_back(parse_graph(text));
    }
    return out;
}

}  // namespace

TEST_CASE("polytopes of named graphs") {
    const LatticePolytope c3 = polytope_of(graph(kC3), PolytopeKind::Base);
    CHECK(c3.vertices == std::vector<IntVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(c3.dim == 2);
    CHECK(c3.facets.size() == 3);

    const LatticePolytope k2 = polytope_of(graph("0-1"), PolytopeKind::Independence);
    CHECK(k2.vertices == std::vector<IntVector>{{0}, {1}});
    CHECK(k2.dim == 1);
    CHECK(k2.facets.size() == 2);

    const LatticePolytope k4 = polytope_of(graph(kK4), PolytopeKind::Base);
    CHECK(k4.vertices.size() == 16);
    CHECK(k4.dim == 5);
    CHECK(k4.facets.size() == 16);
    CHECK(k4.saturation_index == 1);

    const LatticePolytope loops = polytope_of(parse_graph("0 1\n1 1\n"), PolytopeKind::Base);
    CHECK(loops.ambient_dim == 1);
}

TEST_CASE("predicted facets of named graphs") {
    for (const char* text : {kC3, kK4, kC4, kC5Chord}) {
        const Multigraph g = graph(text);
        const LatticePolytope p = polytope_of(g, PolytopeKind::Base);
        std::vector<Facet> predicted;
        for (const auto& f : predicted_base_facets(g, p)) {
            predicted.push_back(f.facet);
        }
        std::sort(predicted.begin(), predicted.end());
        CAPTURE(text);
        CHECK(predicted == p.facets);
    }
    const Multigraph k4 = graph(kK4);
    const auto kinds = predicted_base_facets(k4, polytope_of(k4, PolytopeKind::Base));
    CHECK(std::count_if(kinds.begin(), kinds.end(), [](const PredictedFacet& f) {
              return f.type == PredictedFacet::Type::Nonnegativity;
          }) == 6);
}

TEST_CASE("Gorenstein search on named graphs") {
    const auto c3 = gorenstein_search(polytope_of(graph(kC3), PolytopeKind::Base));
    REQUIRE(c3);
    CHECK(c3->delta == 3);
    CHECK(c3->point == IntVector{2, 2, 2});

    CHECK_FALSE(gorenstein_search(polytope_of(graph(kC5Chord), PolytopeKind::Base)));

    const auto k2 = gorenstein_search(polytope_of(graph("0-1"), PolytopeKind::Independence));
    REQUIRE(k2);
    CHECK(k2->delta == 2);
    CHECK(k2->point == IntVector{1});

    const LatticePolytope k4 = polytope_of(graph(kK4), PolytopeKind::Base);
    CHECK(is_delta_gorenstein(k4, 2));
    CHECK_FALSE(is_delta_gorenstein(k4, 3));
    CHECK_FALSE(gorenstein_search(k4, 1));
}

TEST_CASE("lattice points of dilates") {
    const LatticePolytope c3 = polytope_of(graph(kC3), PolytopeKind::Base);
    CHECK(lattice_points(c3, 1).size() == 3);
    CHECK(lattice_points(c3, 2).size() == 6);
    CHECK(lattice_points(c3, 3, 1).size() == 1);
    CHECK(lattice_points(polytope_of(graph("0-1"), PolytopeKind::Independence), 3).size() == 4);

    OracleLimits tight;
    tight.node_guard = 5;
    CHECK_THROWS_AS(lattice_points(polytope_of(graph(kK4), PolytopeKind::Base), 3, 0, tight), ResourceError);
}

TEST_CASE("h-star vectors") {
    const HStarVector c5 = hstar(polytope_of(graph(kC5Chord), PolytopeKind::Base));
    CHECK(c5.coefficients == std::vector<Int>{1, 5, 3});
    CHECK_FALSE(c5.palindromic);

    const HStarVector c3 = hstar(polytope_of(graph(kC3), PolytopeKind::Base));
    CHECK(c3.coefficients == std::vector<Int>{1});
    CHECK(c3.palindromic);
    CHECK(c3.ehrhart == std::vector<Int>{1, 3, 6});

    const HStarVector k4 = hstar(polytope_of(graph(kK4), PolytopeKind::Base));
    CHECK(k4.palindromic);
    CHECK(k4.coefficients.front() == 1);
    CHECK(k4.coefficients.size() == 5);
    CHECK(k4.ehrhart.at(1) == 16);
}

TEST_CASE("normality probe") {
    for (const char* text : {kC3, kK4, kC5Chord}) {
        for (PolytopeKind kind : {PolytopeKind::Base, PolytopeKind::Independence}) {
            const NormalityResult r = normality_probe(polytope_of(graph(text), kind), 3);
            CHECK(r.passed);
            CHECK_FALSE(r.failing_k);
        }
    }
    const LatticePolytope segment2 = polytope_from_vertices({{0, 0}, {2, 0}, {0, 2}});
    CHECK(normality_probe(segment2, 3).passed);
}

TEST_CASE("dump format") {
    const std::string dump = dump_polytope(polytope_of(graph(kC3), PolytopeKind::Base));
    CHECK(dump.find("%lattice") != std::string::npos);
    CHECK(dump.find("%facets") != std::string::npos);
    CHECK(dump.rfind("# ambient 3, dim 2, 3 vertices, 3 facets\n0 1 1\n", 0) == 0);
}

TEST_CASE("products") {
    const LatticePolytope c3 = polytope_of(graph(kC3), PolytopeKind::Base);
    const LatticePolytope k2 = polytope_of(graph("0-1"), PolytopeKind::Independence);
    const LatticePolytope prism = product(c3, k2);
    CHECK(prism.dim == 3);
    CHECK(prism.vertices.size() == 6);
    CHECK(prism.facets.size() == 5);
    CHECK_FALSE(gorenstein_search(prism));
    const LatticePolytope square = product(k2, k2);
    const auto w = gorenstein_search(square);
    REQUIRE(w);
    CHECK(w->delta == 2);
}

TEST_CASE("facet computations agree") {
    for (const Multigraph& g : small_graphs(5)) {
        for (PolytopeKind kind : {PolytopeKind::Base, PolytopeKind::Independence}) {
            const LatticePolytope p = polytope_of(g, kind);
            if (p.dim == 0) {
                continue;
            }
            CAPTURE(format_graph(g));
            auto by_subsets = facets_by_subsets(p);
            std::sort(by_subsets.begin(), by_subsets.end());
            CHECK(by_subsets == p.facets);
        }
    }
}

TEST_CASE("lattice oracle against brute-force Ehrhart counts") {
    for (const Multigraph& g : small_graphs(5)) {
        const oracle::EdgeList edges = oracle::edge_list(normalize(g));
        for (PolytopeKind kind : {PolytopeKind::Base, PolytopeKind::Independence}) {
            const bool base = kind == PolytopeKind::Base;
            const LatticePolytope p = polytope_of(g, kind);
            CAPTURE(format_graph(g));
            CAPTURE(base);
            CHECK(static_cast<long>(p.vertices.size()) == oracle::count_forests(edges, base));
            const oracle::EhrhartBrute brute = oracle::ehrhart(edges, base, 3);
            for (Int k = 0; k <= 3; ++k) {
                CHECK(static_cast<long>(lattice_points(p, k).size()) == brute.points[k]);
            }
            const auto expected = oracle::gorenstein_index(edges, base, static_cast<int>(p.dim));
            const auto search = gorenstein_search(p);
            CHECK(search.has_value() == expected.has_value());
            if (search && expected) {
                CHECK(search->delta == *expected);
            }
            const auto scan = gorenstein_search_enumerative(p);
            CHECK(scan.has_value() == search.has_value());
            if (scan && search) {
                CHECK(scan->delta == search->delta);
                CHECK(scan->point == search->point);
            }
            CHECK(hstar(p).palindromic == search.has_value());
        }
    }
}

TEST_CASE("overflow-checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_mul(Int{1} << 62, 4), ResourceError);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), 1), ResourceError);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), ResourceError);
    CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
    IntVector v{4, -6, 8};
    CHECK(make_primitive(v) == 2);
    CHECK(v == IntVector{2, -3, 4});
    CHECK(gcd_of({0, 0}) == 0);
}

TEST_CASE("Hermite normal form and lattice coordinates") {
    const Hnf h = hermite_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    REQUIRE(h.rows.size() == 3);
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        CHECK(h.rows[i][h.pivots[i]] > 0);
        for (std::size_t j = 0; j < i; ++j) {
            CHECK(h.rows[j][h.pivots[i]] >= 0);
            CHECK(h.rows[j][h.pivots[i]] < h.rows[i][h.pivots[i]]);
        }
    }
    const auto c = lattice_coordinates(h, {2, 4, 4});
    REQUIRE(c);
    IntVector back(3, 0);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            back[j] += (*c)[i] * h.rows[i][j];
        }
    }
    CHECK(back == IntVector{2, 4, 4});
    CHECK_FALSE(lattice_coordinates(hermite_normal_form({{2, 0}, {0, 2}}), {1, 0}));
    CHECK(hermite_normal_form({{1, 1}, {2, 2}}).rows.size() == 1);
}

TEST_CASE("determinants, minors, kernels and solves") {
    CHECK(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
    CHECK(gcd_of_maximal_minors({{2, 0, 0}, {0, 2, 0}}) == 4);
    CHECK(gcd_of_maximal_minors({{1, 0, 0}, {0, 1, 0}}) == 1);
    const IntVector k = kernel_vector({{1, 1, 0}, {0, 1, 1}});
    CHECK((k == IntVector{1, -1, 1} || k == IntVector{-1, 1, -1}));
    const auto inv = inverse({{2, 1}, {1, 1}});
    CHECK(inv[0][0] == 1);
    CHECK(inv[0][1] == -1);
    CHECK(inv[1][1] == 2);
    const auto y = solve_full_column_rank({{1, 0}, {0, 2}, {1, 1}}, {1, 1, 1});
    CHECK_FALSE(y);
    const auto z = solve_full_column_rank({{1, 0}, {0, 2}, {1, 1}}, {1, 4, 3});
    REQUIRE(z);
    CHECK((*z)[0] == 1);
    CHECK((*z)[1] == 2);
}
