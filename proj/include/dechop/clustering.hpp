#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "dechop/es_tree.hpp"
#include "dechop/graph.hpp"
#include "dechop/hierarchy.hpp"
#include "dechop/rational.hpp"
#include "dechop/scaling.hpp"

namespace dechop {

// A hopset edge in the units of the host graph (before unscaling).
struct ScaledHopEdge {
    HopTag tag;
    Vertex u;
    Vertex v;
    Weight level;
    friend bool operator==(const ScaledHopEdge&, const ScaledHopEdge&) = default;
};

// One net change of a hopset edge over a pass: removed (before only),
// added (after only) or re-weighted (both; read as delete then insert).
struct HopEdgeChange {
    HopTag tag;
    std::optional<ScaledHopEdge> before;
    std::optional<ScaledHopEdge> after;
};

// Bunches, clusters and pivots of one hierarchy on one host graph, kept
// up to depth d under increases and monotone insertions of host edges.
//
// For a center z at level i, v is admitted to T(z) when
//   L(z,v) <= d  and  L(z,v) < L(v, A_{i+1}) / (1 + eps_c),
// where L(v, A_{i+1}) is the pivot-tree level (capped at d + 1) and is
// infinite only when A_{i+1} = ∅.
class ClusterState {
public:
    ClusterState(const WeightedGraph& host, const Hierarchy& h, Weight depth, const Rational& eps_c);
    ClusterState(const ClusterState&) = delete;
    ClusterState& operator=(const ClusterState&) = delete;

    // The host already reflects `changes`. Returns net hopset edge changes.
    std::vector<HopEdgeChange> update(const std::vector<EdgeChange>& changes);

    // (z, v, L(z,v)) for every member v != z, plus (v, p_i(v), L(v, A_{i+1}))
    // for every vertex and level with a pivot within depth. Sorted by tag.
    std::vector<ScaledHopEdge> hopset_edges() const;

    const WeightedGraph& host() const { return *g_; }
    const Hierarchy& hierarchy() const { return h_; }
    Weight depth() const { return depth_; }
    const Rational& eps_c() const { return eps_c_; }

    bool in_cluster(Vertex z, Vertex v) const { return trees_[z]->contains(v); }
    Weight cluster_level(Vertex z, Vertex v) const { return trees_[z]->level(v); }
    Vertex cluster_parent(Vertex z, Vertex v) const { return trees_[z]->parent(v); }
    std::vector<Vertex> members(Vertex z) const;
    // Centers whose cluster holds v, over all levels (includes v itself).
    const std::set<Vertex>& bunch(Vertex v) const { return bunch_[v]; }

    // L(v, A_{i+1}) and p_i(v); detached()/kNoVertex when beyond depth or A_{i+1} = ∅.
    Weight pivot_level(int i, Vertex v) const;
    Vertex pivot(int i, Vertex v) const;
    Weight detached() const { return depth_ + 1; }

    bool admits(Weight lz, Vertex v, int i) const;

    const std::vector<std::uint64_t>& level_scans(int i) const { return scans_[i]; }
    std::uint64_t total_scans() const;

    // Mutation hook for audit tests: the next eviction is silently skipped.
    void skip_next_eviction() { skip_eviction_ = true; }

private:
    struct QueueEntry {
        Weight key;
        Vertex v;
        Vertex via;
        friend auto operator<=>(const QueueEntry&, const QueueEntry&) = default;
    };
    struct Queue {
        std::vector<QueueEntry> heap;
        std::map<Vertex, std::pair<Weight, Vertex>> best;
    };

    void relax(Queue& q, Vertex u, Vertex v, Weight cand);
    void dijkstra(Vertex z, Queue& q);
    void evict_violators(int i, std::vector<std::pair<Vertex, Vertex>> work);

    std::optional<ScaledHopEdge> cluster_edge(Vertex z, Vertex v, Weight level, bool member) const;
    std::optional<ScaledHopEdge> pivot_edge(int i, Vertex v, Weight level, Vertex p) const;
    void touch(HopTag tag, std::optional<ScaledHopEdge> before);

    const WeightedGraph* g_;
    Hierarchy h_;
    Weight depth_;
    Rational eps_c_;
    std::vector<std::vector<std::uint64_t>> scans_;  // per level, per vertex
    std::uint64_t pivot_scans_ = 0;
    std::vector<std::unique_ptr<MonotoneEsTree>> pivot_trees_;  // per level; null if A_{i+1} = ∅
    std::vector<std::unique_ptr<MonotoneEsTree>> trees_;        // per center
    std::vector<std::set<Vertex>> bunch_;
    bool recording_ = false;
    bool skip_eviction_ = false;
    std::map<HopTag, std::optional<ScaledHopEdge>> before_;
};

}  // namespace dechop
