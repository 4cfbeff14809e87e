#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dechop {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

inline std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}
inline Vertex key_low(std::uint64_t key) { return static_cast<Vertex>(key >> 32); }
inline Vertex key_high(std::uint64_t key) { return static_cast<Vertex>(key & 0xffffffffu); }

struct Edge {
    Vertex u;
    Vertex v;
    Weight w;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
    Vertex to;
    Weight w;
};

// Edge change on some host graph. An absent side means the edge did not
// exist before, or is gone after.
struct EdgeChange {
    Vertex u;
    Vertex v;
    std::optional<Weight> before;
    std::optional<Weight> after;

    bool is_increase() const { return before && (!after || *after > *before); }
};

struct UpdateBatch {
    std::vector<std::pair<Vertex, Vertex>> deletions;
    std::vector<Edge> insertions;
};

// Plain mutable undirected graph with integer weights and O(1) lookup.
// Used as the host of ES trees (scaled views keep one of these).
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t n) : adj_(n) {}

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return weights_.size(); }
    const std::vector<Arc>& neighbors(Vertex v) const { return adj_[v]; }
    std::optional<Weight> weight(Vertex u, Vertex v) const;

    // Sets, changes or (with nullopt) removes the edge; returns the change.
    EdgeChange set_weight(Vertex u, Vertex v, std::optional<Weight> w);

private:
    std::vector<std::vector<Arc>> adj_;
    std::unordered_map<std::uint64_t, Weight> weights_;
};

// The user-facing graph: deletions and weight increases only.
class DynamicGraph {
public:
    DynamicGraph() = default;
    DynamicGraph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t num_vertices() const { return g_.num_vertices(); }
    std::size_t num_edges() const { return g_.num_edges(); }
    const std::vector<Arc>& neighbors(Vertex v) const { return g_.neighbors(v); }
    std::optional<Weight> weight(Vertex u, Vertex v) const { return g_.weight(u, v); }
    const WeightedGraph& graph() const { return g_; }
    std::vector<Edge> edges() const;  // sorted, u < v

    std::uint64_t time() const { return t_; }
    Weight initial_min_weight() const { return min_w_; }
    Weight initial_max_weight() const { return max_w_; }
    // Largest weight an increase may produce: n * W_initial in min-weight units.
    Weight weight_cap() const;

    UpdateBatch delete_edge(Vertex u, Vertex v);
    UpdateBatch increase_weight(Vertex u, Vertex v, Weight delta);

private:
    WeightedGraph g_;
    std::uint64_t t_ = 0;
    Weight min_w_ = 0;
    Weight max_w_ = 0;
};

DynamicGraph load_graph(std::size_t n, const std::vector<Edge>& edges);

// ceil(log2(n * max_w / min_w)) over the initial weights; 0 for an edgeless graph.
int num_scales(const DynamicGraph& g);
int num_scales(std::size_t n, Weight min_w, Weight max_w);

}  // namespace dechop
