#include "dechop/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dechop {

std::optional<Weight> WeightedGraph::weight(Vertex u, Vertex v) const {
    auto it = weights_.find(pair_key(u, v));
    if (it == weights_.end()) return std::nullopt;
    return it->second;
}

EdgeChange WeightedGraph::set_weight(Vertex u, Vertex v, std::optional<Weight> w) {
    EdgeChange change{u, v, weight(u, v), w};
    if (change.before == change.after) return change;
    auto key = pair_key(u, v);
    auto drop = [this](Vertex a, Vertex b) {
        auto& list = adj_[a];
        auto it = std::find_if(list.begin(), list.end(), [b](const Arc& x) { return x.to == b; });
        *it = list.back();
        list.pop_back();
    };
    auto put = [this](Vertex a, Vertex b, Weight x) {
        for (auto& arc : adj_[a])
            if (arc.to == b) {
                arc.w = x;
                return;
            }
        adj_[a].push_back({b, x});
    };
    if (!w) {
        drop(u, v);
        drop(v, u);
        weights_.erase(key);
    } else {
        put(u, v, *w);
        put(v, u, *w);
        weights_[key] = *w;
    }
    return change;
}

DynamicGraph::DynamicGraph(std::size_t n, const std::vector<Edge>& edges) : g_(n) {
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) throw std::invalid_argument("vertex out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop at " + std::to_string(e.u));
        if (e.w < 1) throw std::invalid_argument("nonpositive weight");
        if (g_.weight(e.u, e.v))
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        g_.set_weight(e.u, e.v, e.w);
        min_w_ = min_w_ == 0 ? e.w : std::min(min_w_, e.w);
        max_w_ = std::max(max_w_, e.w);
    }
}

std::vector<Edge> DynamicGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (const auto& arc : neighbors(u))
            if (u < arc.to) out.push_back({u, arc.to, arc.w});
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    return out;
}

Weight DynamicGraph::weight_cap() const {
    return static_cast<Weight>(num_vertices()) * max_w_;
}

UpdateBatch DynamicGraph::delete_edge(Vertex u, Vertex v) {
    if (u >= num_vertices() || v >= num_vertices() || !g_.weight(u, v))
        throw std::invalid_argument("no edge " + std::to_string(u) + " " + std::to_string(v));
    g_.set_weight(u, v, std::nullopt);
    ++t_;
    return {{{u, v}}, {}};
}

UpdateBatch DynamicGraph::increase_weight(Vertex u, Vertex v, Weight delta) {
    if (delta < 1) throw std::invalid_argument("weight increase must be >= 1");
    auto w = u < num_vertices() && v < num_vertices() ? g_.weight(u, v) : std::nullopt;
    if (!w) throw std::invalid_argument("no edge " + std::to_string(u) + " " + std::to_string(v));
    Weight next = *w + delta;
    if (next > weight_cap())
        throw std::invalid_argument("weight " + std::to_string(next) + " exceeds cap " +
                                    std::to_string(weight_cap()));
    g_.set_weight(u, v, next);
    ++t_;
    return {{{u, v}}, {{u, v, next}}};
}

DynamicGraph load_graph(std::size_t n, const std::vector<Edge>& edges) { return DynamicGraph(n, edges); }

int num_scales(std::size_t n, Weight min_w, Weight max_w) {
    if (n == 0 || min_w <= 0) return 0;
    // smallest s with 2^s * min_w >= n * max_w
    __int128 target = static_cast<__int128>(n) * max_w;
    __int128 reach = min_w;
    int s = 0;
    while (reach < target) {
        reach *= 2;
        ++s;
    }
    return s;
}

int num_scales(const DynamicGraph& g) {
    if (g.num_edges() == 0 && g.initial_max_weight() == 0) return 0;
    return num_scales(g.num_vertices(), g.initial_min_weight(), g.initial_max_weight());
}

}  // namespace dechop
