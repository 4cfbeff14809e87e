#include "dechop/clustering.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dechop {

ClusterState::ClusterState(const WeightedGraph& host, const Hierarchy& h, Weight depth, const Rational& eps_c)
    : g_(&host), h_(h), depth_(depth), eps_c_(eps_c) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (eps_c < Rational(0)) throw std::invalid_argument("eps_c must be >= 0");
    std::size_t n = host.num_vertices();
    if (h.num_vertices() != n) throw std::invalid_argument("hierarchy size mismatch");
    scans_.assign(std::max(h.top(), 1), std::vector<std::uint64_t>(n, 0));
    pivot_trees_.resize(h.top());
    for (int i = 0; i < h.top(); ++i) {
        if (h.level(i + 1).empty()) continue;
        pivot_trees_[i] = std::make_unique<MonotoneEsTree>(host, h.level(i + 1), depth,
                                                           MonotoneEsTree::Mode::kSpanning);
        pivot_scans_ += pivot_trees_[i]->scans();
    }
    bunch_.resize(n);
    trees_.resize(n);
    for (Vertex z = 0; z < n; ++z) {
        int i = h.rank(z);
        trees_[z] = std::make_unique<MonotoneEsTree>(host, std::vector<Vertex>{z}, depth,
                                                     MonotoneEsTree::Mode::kMembers, scans_[i].data());
        bunch_[z].insert(z);
    }
    // Modified Dijkstra from every center.
    for (Vertex z = 0; z < n; ++z) {
        Queue q;
        int i = h.rank(z);
        for (const auto& arc : host.neighbors(z))
            if (admits(arc.w, arc.to, i)) relax(q, z, arc.to, arc.w);
        dijkstra(z, q);
    }
}

Weight ClusterState::pivot_level(int i, Vertex v) const {
    const auto& t = pivot_trees_[i];
    return t ? t->level(v) : detached();
}

Vertex ClusterState::pivot(int i, Vertex v) const {
    const auto& t = pivot_trees_[i];
    return t && t->level(v) <= depth_ ? t->pivot(v) : kNoVertex;
}

bool ClusterState::admits(Weight lz, Vertex v, int i) const {
    if (lz > depth_) return false;
    if (!pivot_trees_[i]) return true;  // d(v, ∅) = ∞
    // (1 + eps_c) * lz < L(v, A_{i+1}), which is capped at d + 1
    Weight p = pivot_trees_[i]->level(v);
    __int128 lhs = static_cast<__int128>(eps_c_.den() + eps_c_.num()) * lz;
    __int128 rhs = static_cast<__int128>(eps_c_.den()) * p;
    return lhs < rhs;
}

std::vector<Vertex> ClusterState::members(Vertex z) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_->num_vertices(); ++v)
        if (trees_[z]->contains(v)) out.push_back(v);
    return out;
}

std::uint64_t ClusterState::total_scans() const {
    std::uint64_t total = pivot_scans_;
    for (const auto& t : pivot_trees_)
        if (t) total += t->scans();
    for (const auto& t : trees_) total += t->scans();
    return total;
}

std::optional<ScaledHopEdge> ClusterState::cluster_edge(Vertex z, Vertex v, Weight level, bool member) const {
    if (!member || z == v) return std::nullopt;
    return ScaledHopEdge{HopTag{0, z, v}, z, v, level};
}

std::optional<ScaledHopEdge> ClusterState::pivot_edge(int i, Vertex v, Weight level, Vertex p) const {
    if (level > depth_ || p == kNoVertex || p == v) return std::nullopt;
    return ScaledHopEdge{HopTag{1, static_cast<Vertex>(i), v}, v, p, level};
}

void ClusterState::touch(HopTag tag, std::optional<ScaledHopEdge> before) {
    if (recording_) before_.try_emplace(tag, std::move(before));
}

std::vector<ScaledHopEdge> ClusterState::hopset_edges() const {
    std::vector<ScaledHopEdge> out;
    for (Vertex z = 0; z < g_->num_vertices(); ++z)
        for (Vertex v : members(z))
            if (auto e = cluster_edge(z, v, trees_[z]->level(v), true)) out.push_back(*e);
    for (int i = 0; i < h_.top(); ++i)
        for (Vertex v = 0; v < g_->num_vertices(); ++v)
            if (auto e = pivot_edge(i, v, pivot_level(i, v), pivot(i, v))) out.push_back(*e);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tag < b.tag; });
    return out;
}

void ClusterState::relax(Queue& q, Vertex u, Vertex v, Weight cand) {
    if (cand > depth_) return;
    auto it = q.best.find(v);
    if (it != q.best.end() && std::pair(cand, u) >= it->second) return;
    q.best[v] = {cand, u};
    q.heap.push_back({cand, v, u});
    std::push_heap(q.heap.begin(), q.heap.end(), std::greater<>());
}

void ClusterState::dijkstra(Vertex z, Queue& q) {
    auto& tree = *trees_[z];
    int i = h_.rank(z);
    while (!q.heap.empty()) {
        std::pop_heap(q.heap.begin(), q.heap.end(), std::greater<>());
        QueueEntry e = q.heap.back();
        q.heap.pop_back();
        if (tree.contains(e.v) || q.best[e.v] != std::pair(e.key, e.via)) continue;
        touch(HopTag{0, z, e.v}, std::nullopt);
        tree.admit(e.v, e.key, e.via);
        bunch_[e.v].insert(z);
        const auto& arcs = g_->neighbors(e.v);
        scans_[i][e.v] += arcs.size();
        for (const auto& arc : arcs) {
            if (tree.contains(arc.to)) continue;
            Weight cand = e.key + arc.w;
            if (admits(cand, arc.to, i)) relax(q, e.v, arc.to, cand);
        }
    }
}

void ClusterState::evict_violators(int i, std::vector<std::pair<Vertex, Vertex>> work) {
    std::vector<MonotoneEsTree::Change> changes;
    while (!work.empty()) {
        auto [z, v] = work.back();
        work.pop_back();
        auto& tree = *trees_[z];
        if (!tree.contains(v) || tree.is_root(v) || admits(tree.level(v), v, i)) continue;
        if (skip_eviction_) {
            skip_eviction_ = false;
            continue;
        }
        touch(HopTag{0, z, v}, cluster_edge(z, v, tree.level(v), true));
        bunch_[v].erase(z);
        changes.clear();
        tree.evict(v, changes);
        for (const auto& c : changes) {
            touch(HopTag{0, z, c.v}, cluster_edge(z, c.v, c.old_level, true));
            work.push_back({z, c.v});
        }
    }
}

std::vector<HopEdgeChange> ClusterState::update(const std::vector<EdgeChange>& changes) {
    recording_ = true;
    before_.clear();
    std::vector<MonotoneEsTree::Change> tc;

    for (int i = 0; i < h_.top(); ++i) {
        // Pivot distances L(., A_{i+1}); X collects the vertices whose
        // distance went up during this pass.
        std::map<Vertex, Weight> first_old;
        if (auto& pt = pivot_trees_[i]) {
            for (const auto& ch : changes) {
                tc.clear();
                pt->apply(ch, tc);
                for (const auto& c : tc) {
                    touch(HopTag{1, static_cast<Vertex>(i), c.v}, pivot_edge(i, c.v, c.old_level, c.old_pivot));
                    first_old.try_emplace(c.v, c.old_level);
                }
            }
        }
        std::vector<Vertex> X;
        for (auto [v, old] : first_old)
            if (pivot_trees_[i]->level(v) > old) X.push_back(v);

        // Host changes inside level-i cluster trees; raised members are
        // re-checked against the radius rule.
        std::vector<std::pair<Vertex, Vertex>> work;
        for (const auto& ch : changes) {
            std::vector<Vertex> centers(bunch_[ch.u].begin(), bunch_[ch.u].end());
            for (Vertex z : centers) {
                if (h_.rank(z) != i || !trees_[z]->contains(ch.v)) continue;
                tc.clear();
                trees_[z]->apply(ch, tc);
                for (const auto& c : tc) {
                    touch(HopTag{0, z, c.v}, cluster_edge(z, c.v, c.old_level, true));
                    work.push_back({z, c.v});
                }
            }
        }
        std::sort(work.begin(), work.end(), std::greater<>());
        evict_violators(i, std::move(work));

        // Admission scan over edges of X, then modified Dijkstra per center.
        std::map<Vertex, Queue> queues;
        for (Vertex v : X) {
            const auto& arcs = g_->neighbors(v);
            scans_[i][v] += arcs.size();
            for (const auto& arc : arcs) {
                Vertex u = arc.to;
                for (Vertex z : bunch_[u]) {
                    if (h_.rank(z) != i || bunch_[v].count(z)) continue;
                    Weight cand = trees_[z]->level(u) + arc.w;
                    if (admits(cand, v, i)) relax(queues[z], u, v, cand);
                }
            }
        }
        for (auto& [z, q] : queues) dijkstra(z, q);
    }

    std::vector<HopEdgeChange> out;
    for (auto& [tag, before] : before_) {
        std::optional<ScaledHopEdge> after;
        if (tag.kind == 0) {
            const auto& t = *trees_[tag.a];
            after = cluster_edge(tag.a, tag.b, t.level(tag.b), t.contains(tag.b));
        } else {
            int i = static_cast<int>(tag.a);
            after = pivot_edge(i, tag.b, pivot_level(i, tag.b), pivot(i, tag.b));
        }
        if (before != after) out.push_back({tag, before, after});
    }
    before_.clear();
    recording_ = false;
    return out;
}

}  // namespace dechop
