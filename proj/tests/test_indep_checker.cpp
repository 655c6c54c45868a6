#include <doctest.h>

#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/graph_enumeration.hpp"
#include "gorenstein/indep_checker.hpp"
#include "gorenstein/report.hpp"
#include "oracles.hpp"

using namespace gorenstein;
using oracle::graph;

namespace {

const char* kK4 = "0-1 0-2 0-3 1-2 1-3 2-3";
const char* kK4e = "a-b a-c a-d b-c b-d";
const char* kC4 = "0-1 1-2 2-3 3-0";
const char* kK23 = "0-2 0-3 0-4 1-2 1-3 1-4";

}  // namespace

TEST_CASE("club equalities") {
    CHECK_FALSE(check_club(graph(kK4e), 2));
    CHECK_FALSE(check_club(graph(kC4), 3));
    const Multigraph c3 = graph("0-1 1-2 2-0");
    const auto w = check_club(c3, 3);
    REQUIRE(w);
    const auto& club = std::get<ClubViolated>(*w);
    CHECK(club.flat.size() == 3);
    CHECK(club.lhs == 7);
    CHECK(club.rhs == 6);
    CHECK_THROWS_AS(check_club(parse_graph("0 1 2"), 2), PreconditionError);
    CHECK_THROWS_AS(check_club(graph("0-1 1-2"), 2), PreconditionError);
}

TEST_CASE("chordal and K4-minor test") {
    CHECK_FALSE(check_chordal_k4free(graph(kK4e), 2));
    const auto k4 = check_chordal_k4free(graph(kK4), 2);
    REQUIRE(k4);
    CHECK(std::holds_alternative<K4MinorFound>(*k4));
    const auto c4 = check_chordal_k4free(graph(kC4), 2);
    REQUIRE(c4);
    CHECK(std::get<WrongChordlessCycle>(*c4).length == 4);
}

TEST_CASE("cycle construction recognition") {
    const auto c4 = recognize_cycle_construction(graph(kC4), 3);
    REQUIRE(c4);
    CHECK(cert_summary(c4->root) == "AttachCycle[4](Seed(K2))");
    const auto k4e = recognize_cycle_construction_realized(graph(kK4e), 2);
    REQUIRE(k4e);
    CHECK(cert_summary(k4e->cert.root) == "AttachCycle[3](AttachCycle[3](Seed(K2)))");
    CHECK(realization_matches(k4e->realization, graph(kK4e)));
    CHECK_FALSE(recognize_cycle_construction(graph(kK4), 2));
}

TEST_CASE("independence verdicts of named graphs") {
    const auto c4 = indep_verdict(parse_graph("0 1 2\n1 2 2\n2 3 2\n3 0 2\n"));
    CHECK(c4.gorenstein);
    CHECK(c4.delta == 3);
    CHECK(c4.multiplicity == 2);
    REQUIRE(c4.blocks.size() == 1);
    CHECK(c4.blocks[0].base.edge_count() == 4);
    REQUIRE(c4.blocks[0].certificate);
    CHECK(cert_summary(c4.blocks[0].certificate->cert.root) == "BlowUp[2](AttachCycle[4](Seed(K2)))");
    CHECK(realization_matches(c4.blocks[0].certificate->realization, c4.blocks[0].block));

    const auto k4 = indep_verdict(graph(kK4));
    CHECK_FALSE(k4.gorenstein);
    REQUIRE(k4.witness);
    CHECK(std::holds_alternative<K4MinorFound>(*k4.witness));
    REQUIRE(k4.club_violation);
    CHECK(k4.club_violation->lhs == 7);
    CHECK(k4.club_violation->rhs == 6);
    CHECK(k4.club_violation->flat.size() == 4);

    const auto mixed = indep_verdict(parse_graph("0 1 2\n1 2\n2 0\n"));
    CHECK_FALSE(mixed.gorenstein);
    REQUIRE(mixed.witness);
    CHECK(std::holds_alternative<NonUniformMultiplicity>(*mixed.witness));

    const auto across = indep_verdict(parse_graph("0 1 2\n1 2 2\n2 0 2\n2 3\n3 4\n4 2\n"));
    REQUIRE(across.witness);
    CHECK(std::holds_alternative<NonUniformMultiplicity>(*across.witness));

    const auto tree = indep_verdict(graph("0-1 1-2"));
    CHECK(tree.delta == 2);
    const auto empty = indep_verdict(parse_graph("0 0"));
    CHECK(empty.delta == 1);
    CHECK(empty.loops_removed == 1);
}

TEST_CASE("theta graphs pass the chordal test but are not Gorenstein") {
    const Multigraph k23 = graph(kK23);
    CHECK_FALSE(check_chordal_k4free(k23, 3));
    const auto club = check_club(k23, 3);
    REQUIRE(club);
    CHECK(std::get<ClubViolated>(*club).lhs == 13);
    CHECK(std::get<ClubViolated>(*club).rhs == 12);
    CHECK_FALSE(recognize_cycle_construction(k23, 3));

    const auto v = indep_verdict(blow_up(k23, 2));
    CHECK_FALSE(v.gorenstein);
    CHECK(v.chordal_disagreements == std::vector<std::size_t>{0});
    REQUIRE(v.witness);
    CHECK(std::holds_alternative<ClubViolated>(*v.witness));
}

TEST_CASE("independence characterizations against brute force up to 7 vertices") {
    std::map<int, std::set<std::vector<int>>> closures;
    for (int delta = 2; delta <= 8; ++delta) {
        closures[delta] = oracle::cycle_construction_closure(delta, 7);
    }
    for (const Multigraph& g : two_connected_graphs_up_to(7)) {
        const oracle::Mat a = oracle::from_graph(g);
        const auto cycles = oracle::chordless_cycles(a);
        const bool k4_free = g.vertex_count() > 6 || !oracle::has_k4_minor(a);
        CAPTURE(format_graph(g));
        for (int delta = 2; delta <= 8; ++delta) {
            CHECK(!check_club(g, delta).has_value() == oracle::club(a, delta));
            const bool constructible = closures[delta].contains(oracle::canonical(a));
            CHECK(recognize_cycle_construction(g, delta).has_value() == constructible);
            if (g.vertex_count() <= 6) {
                const bool chordal = std::all_of(cycles.begin(), cycles.end(),
                                                 [&](std::size_t len) { return len == static_cast<std::size_t>(delta + 1); });
                CHECK(!check_chordal_k4free(g, delta).has_value() == (chordal && k4_free));
            }
        }
    }
}
