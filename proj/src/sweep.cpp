#include "gorenstein/sweep.hpp"

#include <exception>
#include <thread>

#include "gorenstein/base_checker.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/errors.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/graph_enumeration.hpp"
#include "gorenstein/indep_checker.hpp"

namespace gorenstein {

namespace {

struct GraphResult {
    std::vector<std::string> census_keys;
    std::vector<std::string> mismatches;
    bool multi_delta = false;
    std::size_t certificates = 0;
    std::size_t oracle = 0;
};

std::string delta_key(const std::optional<int>& delta) { return delta ? std::to_string(*delta) : "none"; }

void sweep_base(const Multigraph& g, const SweepOptions& options, GraphResult& r) {
    const BaseVerdict verdict = base_verdict(g);
    r.census_keys.push_back(delta_key(verdict.delta));
    if (g.edge_count() >= 2) {
        const auto candidates = *candidate_deltas(g);
        r.multi_delta = candidates.size() > 1;
        for (int delta = 2; delta <= static_cast<int>(g.edge_count()) + 1; ++delta) {
            if (check_spade(g, delta).has_value() != check_heart(g, delta).has_value()) {
                r.mismatches.push_back("good-flat and block-count equalities disagree at delta " +
                                       std::to_string(delta));
            }
        }
        if (verdict.gorenstein) {
            try {
                const Decomposition d = decompose_base(g, *verdict.delta);
                const Multigraph replayed = replay(d.cert);
                if (!(replayed == d.realization.replayed) || !realization_matches(d.realization, g) ||
                    !isomorphic(replayed, g)) {
                    r.mismatches.push_back("certificate does not replay to the graph");
                }
                ++r.certificates;
            } catch (const InternalContradiction& ex) {
                r.mismatches.push_back(std::string("decomposition failed: ") + ex.what());
            }
        }
    }
    if (options.cross_validate) {
        const auto w = gorenstein_search(polytope_of(g, PolytopeKind::Base, options.limits));
        ++r.oracle;
        const std::optional<int> oracle_delta = w ? std::optional<int>(w->delta) : std::nullopt;
        if (oracle_delta != verdict.delta) {
            r.mismatches.push_back("checker delta " + delta_key(verdict.delta) + ", oracle delta " +
                                   delta_key(oracle_delta));
        }
    }
}

void sweep_indep(const Multigraph& g, const SweepOptions& options, GraphResult& r) {
    IndepVerdict verdict;
    try {
        verdict = indep_verdict(g);
    } catch (const InternalContradiction& ex) {
        r.mismatches.push_back(ex.what());
        return;
    }
    r.census_keys.push_back(delta_key(verdict.delta));
    if (options.cross_validate) {
        const auto w = gorenstein_search(polytope_of(g, PolytopeKind::Independence, options.limits));
        ++r.oracle;
        const std::optional<int> oracle_delta = w ? std::optional<int>(w->delta) : std::nullopt;
        if (oracle_delta != verdict.delta) {
            r.mismatches.push_back("checker delta " + delta_key(verdict.delta) + ", oracle delta " +
                                   delta_key(oracle_delta));
        }
    }
}

void sweep_equivalence(const Multigraph& g, GraphResult& r) {
    for (int delta = 2; delta <= 8; ++delta) {
        const bool club = !check_club(g, delta).has_value();
        const bool structural = !check_chordal_k4free(g, delta).has_value();
        const auto built = recognize_cycle_construction_realized(g, delta);
        if (club != structural || club != built.has_value()) {
            r.mismatches.push_back("characterizations disagree at delta " + std::to_string(delta) +
                                   ": club " + (club ? "pass" : "fail") + ", chordal/K4-free " +
                                   (structural ? "pass" : "fail") + ", construction " +
                                   (built ? "pass" : "fail"));
            continue;
        }
        if (built) {
            r.census_keys.push_back(std::to_string(delta));
            ++r.certificates;
            if (!realization_matches(built->realization, g) || !(replay(built->cert) == built->realization.replayed)) {
                r.mismatches.push_back("cycle construction does not replay at delta " + std::to_string(delta));
            }
        }
    }
}

}  // namespace

std::string compact_edges(const Multigraph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += (out.empty() ? "" : " ") + g.label(e.u) + "-" + g.label(e.v);
    }
    return out;
}

SweepReport run_sweep(const SweepOptions& options) {
    const std::vector<Multigraph> graphs = two_connected_graphs_up_to(options.max_vertices);
    std::vector<GraphResult> results(graphs.size());
    std::vector<std::exception_ptr> errors(graphs.size());

    auto work = [&](std::size_t i) {
        try {
            switch (options.kind) {
                case SweepKind::Base: sweep_base(graphs[i], options, results[i]); break;
                case SweepKind::Indep: sweep_indep(graphs[i], options, results[i]); break;
                case SweepKind::IndepEquivalence: sweep_equivalence(graphs[i], results[i]); break;
            }
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            work(i);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < graphs.size(); i += jobs) {
                    work(i);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    SweepReport report;
    report.graphs = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        const auto& r = results[i];
        for (const auto& key : r.census_keys) {
            ++report.census[key];
        }
        for (const auto& m : r.mismatches) {
            report.mismatches.push_back({compact_edges(graphs[i]), m});
        }
        if (r.multi_delta) {
            report.multi_delta.push_back(compact_edges(graphs[i]));
        }
        report.certificates_checked += r.certificates;
        report.oracle_checked += r.oracle;
    }
    return report;
}

}  // namespace gorenstein
