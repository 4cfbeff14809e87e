#pragma once

// Small reference implementations used as oracles by the tests.

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "dechop/graph.hpp"

namespace support {

using dechop::Vertex;
using dechop::Weight;
using dechop::WeightedGraph;

inline constexpr Weight kInf = std::numeric_limits<Weight>::max();

inline std::vector<Weight> dijkstra(const WeightedGraph& g, const std::vector<Vertex>& sources) {
    std::vector<Weight> dist(g.num_vertices(), kInf);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex s : sources) {
        dist[s] = 0;
        pq.push({0, s});
    }
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (const auto& a : g.neighbors(u))
            if (d + a.w < dist[a.to]) {
                dist[a.to] = d + a.w;
                pq.push({dist[a.to], a.to});
            }
    }
    return dist;
}

// Levels of a monotone tree recomputed by plain fixpoint iteration:
// raise every vertex to min over neighbors of L(x)+w (capped at D+1)
// until nothing moves. Starting from the previous levels this is the
// outcome Update() cascades must reach.
inline void monotone_replay(const WeightedGraph& g, const std::vector<Vertex>& roots, Weight depth,
                            std::vector<Weight>& level) {
    std::vector<char> is_root(g.num_vertices(), 0);
    for (Vertex r : roots) is_root[r] = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (is_root[v]) continue;
            Weight upd = depth + 1;
            for (const auto& a : g.neighbors(v)) upd = std::min(upd, level[a.to] + a.w);
            if (level[v] < upd) {
                level[v] = upd;
                moved = true;
            }
        }
    }
}

inline std::vector<dechop::Edge> random_edges(std::size_t n, std::size_t m, Weight wmax, std::mt19937_64& rng) {
    std::vector<dechop::Edge> out;
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    m = std::min(m, all.size());
    for (std::size_t i = 0; i < m; ++i)
        out.push_back({all[i].first, all[i].second, 1 + static_cast<Weight>(rng() % wmax)});
    return out;
}

}  // namespace support
