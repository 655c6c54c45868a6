#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gorenstein/base_checker.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/indep_checker.hpp"
#include "gorenstein/lattice_oracle.hpp"

namespace gorenstein {

// JSON serialization of verdicts, certificates and oracle results. Every
// top-level document carries "schema_version"; schemas live in docs/schema/.

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

std::string kind_name(PolytopeKind kind);
PolytopeKind parse_kind(const std::string& text);

Json graph_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

Json base_witness_json(const BaseWitness& w, const BaseVerdict& verdict);
Json indep_witness_json(const IndepWitness& w, const IndepVerdict& verdict);

Json base_verdict_json(const BaseVerdict& v, const Multigraph& input);
Json indep_verdict_json(const IndepVerdict& v, const Multigraph& input);

Json cert_node_json(const CertNode& node);
CertNode cert_node_from_json(const Json& j);
Json certificate_json(const ConstructionCert& cert);
/// Throws ParseError on malformed documents.
ConstructionCert certificate_from_json(const Json& j);

/// Short tree notation, e.g. "Subdivide(Glue(Seed(C3),Seed(C3)))".
std::string cert_summary(const CertNode& node);

Json witness_point_json(const std::optional<GorensteinWitness>& w);
Json hstar_json(const HStarVector& h);
Json normality_json(const NormalityResult& r);
Json polytope_json(const LatticePolytope& p);

/// Graphviz drawing; with weights, weight-1 edges are drawn solid black and weight delta-1 edges bold red.
std::string to_dot(const Multigraph& g, const WeightAssignment* weights = nullptr);

}  // namespace gorenstein
