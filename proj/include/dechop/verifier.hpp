#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dechop/graph.hpp"
#include "dechop/rational.hpp"

namespace dechop {

class HopsetState;
class SourceSet;
class DistanceOracle;
class ClusterState;
struct RationalEdge;

inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

std::vector<Weight> exact_dijkstra(const WeightedGraph& g, Vertex s);
inline std::vector<Weight> exact_dijkstra(const DynamicGraph& g, Vertex s) { return exact_dijkstra(g.graph(), s); }
std::vector<std::vector<Weight>> exact_all_pairs(const DynamicGraph& g);

// G plus extra rational edges (per-pair minimum), kept as integers over a
// common denominator so hop-limited searches stay exact.
class AuditGraph {
public:
    AuditGraph(const DynamicGraph& g, const std::vector<RationalEdge>& extra);
    std::size_t num_vertices() const { return adj_.size(); }
    // h-hop-limited distances from s; infinity for "beyond".
    std::vector<Rational> bounded_hop(Vertex s, Weight h) const;

private:
    std::int64_t den_ = 1;
    std::vector<std::vector<std::pair<Vertex, std::int64_t>>> adj_;
};

// Exact h-hop-limited distance (h rounds of Bellman-Ford).
Rational bounded_hop_distance(const AuditGraph& g, Weight h, Vertex u, Vertex v);

struct AuditCheck {
    std::string name;
    bool pass = true;
    Rational worst_ratio{1};
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;
    Rational estimate{0};
    Rational exact{0};
};

struct AuditReport {
    std::uint64_t t = 0;
    std::vector<AuditCheck> checks;
    std::map<std::string, std::uint64_t> counters;

    bool pass() const;
    const AuditCheck* first_failure() const;
    // One row per check: t,check,pass,worst_ratio,u,v,estimate,exact
    std::string csv() const;
    static std::string csv_header();
};

// All pairs u < v when n <= 64, else `count` seeded pairs.
std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t count, std::uint64_t seed);

// exact <= d^(hop_cap)_{G∪H} <= (1+eps) exact on the pairs, plus every
// stored hopset weight >= the exact distance of its endpoints.
AuditReport audit_hopset(const HopsetState& hs, const std::vector<std::pair<Vertex, Vertex>>& pairs);

// Pairs with exact distance in [R_j/2, R_j] satisfy
// d^(hop_cap)_{G ∪ H_0..H_j} <= (1+3eps')^j exact.
AuditReport audit_scales(const HopsetState& hs, const std::vector<std::pair<Vertex, Vertex>>& pairs);

// exact <= query <= (1+eps) exact for every source and vertex.
AuditReport audit_sources(const SourceSet& ss, const DynamicGraph& g, const Rational& eps);

// exact <= query <= (2k-1)(1+eps) exact, TZ hops <= k, sketches agree.
AuditReport audit_oracle(const DistanceOracle& o, const DynamicGraph& g,
                         const std::vector<std::pair<Vertex, Vertex>>& pairs);

// Membership of v in C(z) per the radius rule, evaluated from scratch with
// exact distances on the state's host graph.
std::vector<std::vector<Vertex>> reconstruct_clusters(const ClusterState& cs);
AuditReport audit_reconstruction(const ClusterState& cs);

}  // namespace dechop
