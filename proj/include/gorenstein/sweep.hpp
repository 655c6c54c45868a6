#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gorenstein/lattice_oracle.hpp"

namespace gorenstein {

// Exhaustive verification over all 2-connected simple graphs up to a vertex bound.

enum class SweepKind { Base, Indep, IndepEquivalence };

struct SweepOptions {
    std::size_t max_vertices = 5;
    SweepKind kind = SweepKind::Base;
    bool cross_validate = false;
    std::size_t jobs = 1;
    OracleLimits limits;
};

struct SweepMismatch {
    std::string graph;  // compact edge list, e.g. "0-1 0-2 1-2"
    std::string detail;
};

struct SweepReport {
    std::size_t graphs = 0;
    /// Gorenstein index -> number of graphs ("none" for negative instances). For the
    /// equivalence sweep: delta -> number of graphs passing all three characterizations.
    std::map<std::string, std::size_t> census;
    std::vector<SweepMismatch> mismatches;
    /// Graphs whose flat equalities hold for more than one delta (base sweeps).
    std::vector<std::string> multi_delta;
    std::size_t certificates_checked = 0;
    std::size_t oracle_checked = 0;
};

SweepReport run_sweep(const SweepOptions& options);

std::string compact_edges(const Multigraph& g);

}  // namespace gorenstein
