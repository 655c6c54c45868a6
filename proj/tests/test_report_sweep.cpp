#include <doctest.h>

#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/graph_enumeration.hpp"
#include "gorenstein/report.hpp"
#include "gorenstein/sweep.hpp"
#include "oracles.hpp"

using namespace gorenstein;
using oracle::graph;

TEST_CASE("graph JSON round trip") {
    const Multigraph g = parse_graph("a b 2\nb c\nc a\nc c\n");
    const Multigraph back = graph_from_json(graph_json(g));
    CHECK(back == g);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2})")), ParseError);
}

TEST_CASE("kind names") {
    CHECK(kind_name(PolytopeKind::Base) == "base");
    CHECK(kind_name(PolytopeKind::Independence) == "independence");
    CHECK(parse_kind("indep") == PolytopeKind::Independence);
    CHECK_THROWS_AS(parse_kind("matroid"), ParseError);
}

TEST_CASE("base verdict JSON") {
    const Multigraph g = graph("1-2 2-3 3-4 4-5 5-1 1-3");
    const Json j = base_verdict_json(base_verdict(g), g);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["status"] == "not_gorenstein");
    CHECK(j["delta"].is_null());
    CHECK(j["witness"]["type"] == "flat_equality_violated");
    CHECK(j["witness"]["flat"] == Json::array({"1", "3", "4", "5"}));
    CHECK(j["witness"]["lhs"] == 11);
    CHECK(j["witness"]["rhs"] == 12);

    const Multigraph k4 = graph("0-1 0-2 0-3 1-2 1-3 2-3");
    const Json pos = base_verdict_json(base_verdict(k4), k4);
    CHECK(pos["status"] == "gorenstein");
    CHECK(pos["delta"] == 2);
}

TEST_CASE("independence verdict JSON") {
    const Multigraph g = blow_up(graph("0-2 0-3 0-4 1-2 1-3 1-4"), 2);
    const Json j = indep_verdict_json(indep_verdict(g), g);
    CHECK(j["status"] == "not_gorenstein");
    CHECK(j["chordal_disagreements"] == Json::array({0}));
    CHECK(j["witness"]["type"] == "club_violated");

    const Multigraph c4 = parse_graph("0 1 2\n1 2 2\n2 3 2\n3 0 2\n");
    const Json pos = indep_verdict_json(indep_verdict(c4), c4);
    CHECK(pos["delta"] == 3);
    CHECK(pos["m"] == 2);
}

TEST_CASE("certificate JSON") {
    const ConstructionCert cert{PolytopeKind::Base, 3, seed_cycle_node(3)};
    const Json j = certificate_json(cert);
    CHECK(j["kind"] == "base");
    CHECK(certificate_from_json(j) == cert);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"kind": "base"})")), ParseError);
    Json bad = j;
    bad["root"]["op"] = "Explode";
    CHECK_THROWS_AS(certificate_from_json(bad), ParseError);
}

TEST_CASE("oracle result JSON") {
    const LatticePolytope p = polytope_of(graph("0-1 1-2 2-0"), PolytopeKind::Base);
    const Json w = witness_point_json(gorenstein_search(p));
    CHECK(w["delta"] == 3);
    CHECK(w["point"] == Json::array({2, 2, 2}));
    CHECK(witness_point_json(std::nullopt).is_null());
    const Json h = hstar_json(hstar(p));
    CHECK(h["palindromic"] == true);
    CHECK(polytope_json(p)["dim"] == 2);
}

TEST_CASE("DOT output") {
    const Multigraph g = graph("a-b a-c a-d b-c b-d");
    const auto w = std::get<WeightAssignment>(weight_function(g, 3));
    const std::string dot = to_dot(g, &w);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("red") != std::string::npos);
    CHECK(to_dot(g).find("red") == std::string::npos);
}

TEST_CASE("sweeps") {
    SweepOptions options;
    options.max_vertices = 5;
    const SweepReport base = run_sweep(options);
    CHECK(base.graphs == two_connected_graphs_up_to(5).size());
    CHECK(base.mismatches.empty());
    std::size_t total = 0;
    for (const auto& [key, count] : base.census) {
        total += count;
    }
    CHECK(total == base.graphs);

    std::size_t positive = 0;
    for (const Multigraph& g : two_connected_graphs_up_to(5)) {
        const oracle::Mat a = oracle::from_graph(g);
        for (int delta = 1; delta <= static_cast<int>(g.edge_count()) + 1; ++delta) {
            if (delta >= 2 ? oracle::spade(a, delta) && g.edge_count() >= 2 : g.edge_count() == 1) {
                ++positive;
                break;
            }
        }
    }
    CHECK(base.graphs - base.census.at("none") == positive);

    options.cross_validate = true;
    options.jobs = 3;
    const SweepReport checked = run_sweep(options);
    CHECK(checked.mismatches.empty());
    CHECK(checked.oracle_checked == checked.graphs);
    CHECK(checked.census == base.census);

    options.kind = SweepKind::Indep;
    options.cross_validate = false;
    CHECK(run_sweep(options).mismatches.empty());

    options.kind = SweepKind::IndepEquivalence;
    options.max_vertices = 5;
    const SweepReport equivalence = run_sweep(options);
    CHECK(equivalence.mismatches.size() == 1);
    CHECK(equivalence.mismatches.at(0).graph == "0-2 0-3 0-4 1-2 1-3 1-4");
}

TEST_CASE("compact edge lists") {
    CHECK(compact_edges(graph("0-1 1-2 2-0")) == "0-1 1-2 2-0");
}
