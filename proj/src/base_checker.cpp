#include "gorenstein/base_checker.hpp"

#include <algorithm>

#include "gorenstein/errors.hpp"
#include "gorenstein/flats.hpp"
#include "gorenstein/graph_algorithms.hpp"
#include "gorenstein/mask_graph.hpp"

namespace gorenstein {

namespace {

void set_block(BaseWitness& w, std::size_t block) {
    std::visit([block](auto& x) { x.block = block; }, w);
}

void require_simple_two_connected(const Multigraph& g) {
    if (!g.is_simple()) {
        throw NotSimpleError();
    }
    if (!is_two_connected(g)) {
        throw PreconditionError("graph is not 2-connected");
    }
}

}  // namespace

std::int64_t WeightAssignment::total() const {
    std::int64_t s = 0;
    for (const auto& [e, w] : weights) {
        s += w;
    }
    return s;
}

std::int64_t WeightAssignment::sum(const std::vector<EdgeId>& edges) const {
    std::int64_t s = 0;
    for (EdgeId e : edges) {
        s += weights.at(e);
    }
    return s;
}

std::map<EdgeId, EdgeFlags> edge_facet_profile(const Multigraph& g) {
    require_simple_two_connected(g);
    if (g.edge_count() < 2) {
        throw PreconditionError("edge_facet_profile needs at least two edges");
    }
    std::map<EdgeId, EdgeFlags> out;
    for (const Edge& e : g.edges()) {
        EdgeFlags f;
        f.deletion_two_connected = is_two_connected(minor_op(g, e.id, MinorKind::Delete));
        f.contraction_two_connected = is_two_connected(minor_op(g, e.id, MinorKind::Contract));
        if (!f.deletion_two_connected && !f.contraction_two_connected) {
            throw InternalContradiction("edge " + std::to_string(e.id) +
                                        ": neither deletion nor contraction is 2-connected");
        }
        out.emplace(e.id, f);
    }
    return out;
}

std::variant<WeightAssignment, WeightConflict> weight_function(const Multigraph& g, int delta) {
    if (delta < 2) {
        throw PreconditionError("delta must be at least 2");
    }
    WeightAssignment w;
    w.delta = delta;
    for (const auto& [id, flags] : edge_facet_profile(g)) {
        if (flags.deletion_two_connected && flags.contraction_two_connected && delta != 2) {
            return WeightConflict{0, id, delta};
        }
        w.weights[id] = flags.deletion_two_connected ? 1 : delta - 1;
    }
    return w;
}

std::optional<std::set<int>> candidate_deltas(const Multigraph& g) {
    require_simple_two_connected(g);
    if (g.edge_count() == 1) {
        return std::nullopt;
    }
    const auto profile = edge_facet_profile(g);
    const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
    const int max_delta = static_cast<int>(g.edge_count()) + 1;
    std::set<int> out;
    for (int delta = 2; delta <= max_delta; ++delta) {
        std::int64_t total = 0;
        bool conflict = false;
        for (const auto& [id, flags] : profile) {
            if (flags.deletion_two_connected && flags.contraction_two_connected && delta != 2) {
                conflict = true;
                break;
            }
            total += flags.deletion_two_connected ? 1 : delta - 1;
        }
        if (!conflict && total == delta * (n - 1)) {
            out.insert(delta);
        }
    }
    return out;
}

std::optional<BaseWitness> check_spade(const Multigraph& g, int delta) {
    auto wf = weight_function(g, delta);
    if (auto* conflict = std::get_if<WeightConflict>(&wf)) {
        return *conflict;
    }
    const auto& w = std::get<WeightAssignment>(wf);
    const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
    if (w.total() != delta * (n - 1)) {
        return TotalWeightMismatch{0, delta, w.total(), delta * (n - 1)};
    }
    for (const GoodFlat& flat : good_flats(g)) {
        const std::int64_t lhs = w.sum(flat.induced_edges) + 1;
        const std::int64_t rhs = delta * (static_cast<std::int64_t>(flat.vertices.size()) - 1);
        if (lhs != rhs) {
            return FlatEqualityViolated{0, delta, flat.vertices, lhs, rhs};
        }
    }
    return std::nullopt;
}

std::optional<BaseWitness> check_heart(const Multigraph& g, int delta) {
    auto wf = weight_function(g, delta);
    if (auto* conflict = std::get_if<WeightConflict>(&wf)) {
        return *conflict;
    }
    const auto& w = std::get<WeightAssignment>(wf);
    std::optional<BaseWitness> first;
    for (const auto& s : indecomposable_flats(g)) {
        const std::int64_t k = static_cast<std::int64_t>(block_count_after_contraction(g, s));
        const std::int64_t lhs = w.sum(induced_edges(g, s)) + k;
        const std::int64_t rhs = delta * (static_cast<std::int64_t>(s.size()) - 1);
        if (lhs == rhs) {
            continue;
        }
        if (k <= 1) {
            return FlatEqualityViolated{0, delta, s, lhs, rhs};
        }
        if (!first) {
            first = FlatEqualityViolated{0, delta, s, lhs, rhs};
        }
    }
    return first;
}

BaseVerdict base_verdict(const Multigraph& input) {
    const Multigraph g = normalize(input);
    if (g.has_parallel_edges()) {
        throw NotSimpleError();
    }
    BaseVerdict verdict;
    verdict.loops_removed = g.loops_removed();

    std::optional<std::set<int>> common;
    std::optional<std::size_t> emptied_by;
    for (Multigraph& b : blocks(g)) {
        BaseBlockReport report;
        report.block = std::move(b);
        report.wildcard = report.block.edge_count() == 1;
        if (!report.wildcard) {
            report.candidate_deltas = *candidate_deltas(report.block);
            if (!common) {
                common = report.candidate_deltas;
            } else {
                std::set<int> both;
                std::set_intersection(common->begin(), common->end(), report.candidate_deltas.begin(),
                                      report.candidate_deltas.end(), std::inserter(both, both.begin()));
                common = std::move(both);
            }
            if (common->empty() && !emptied_by) {
                emptied_by = verdict.blocks.size();
            }
        }
        verdict.blocks.push_back(std::move(report));
    }

    if (!common) {
        verdict.gorenstein = true;
        verdict.delta = 1;
        return verdict;
    }
    if (common->empty()) {
        verdict.witness = NoCandidateDelta{*emptied_by};
        return verdict;
    }

    std::optional<BaseWitness> first_failure;
    for (int delta : *common) {
        std::optional<BaseWitness> failure;
        for (std::size_t i = 0; i < verdict.blocks.size() && !failure; ++i) {
            if (verdict.blocks[i].wildcard) {
                continue;
            }
            failure = check_spade(verdict.blocks[i].block, delta);
            if (failure) {
                set_block(*failure, i);
            }
        }
        if (!failure) {
            verdict.gorenstein = true;
            verdict.delta = delta;
            for (auto& report : verdict.blocks) {
                if (!report.wildcard) {
                    report.weights = std::get<WeightAssignment>(weight_function(report.block, delta));
                }
            }
            return verdict;
        }
        if (!first_failure) {
            first_failure = failure;
        }
    }
    const int delta = *common->begin();
    for (auto& report : verdict.blocks) {
        if (!report.wildcard) {
            auto wf = weight_function(report.block, delta);
            if (auto* w = std::get_if<WeightAssignment>(&wf)) {
                report.weights = *w;
            }
        }
    }
    verdict.witness = first_failure;
    return verdict;
}

}  // namespace gorenstein
