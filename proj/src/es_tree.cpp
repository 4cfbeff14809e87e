#include "dechop/es_tree.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace dechop {

namespace {
using HeapCmp = std::greater<std::pair<Weight, Vertex>>;
}

MonotoneEsTree::MonotoneEsTree(const WeightedGraph& host, std::vector<Vertex> roots, Weight depth, Mode mode,
                               std::uint64_t* scan_sink)
    : g_(&host), depth_(depth), mode_(mode), scan_sink_(scan_sink) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    std::size_t n = host.num_vertices();
    level_.assign(n, depth + 1);
    parent_.assign(n, kNoVertex);
    pivot_.assign(n, kNoVertex);
    in_.assign(n, mode == Mode::kSpanning ? 1 : 0);
    root_.assign(n, 0);
    queued_.assign(n, 0);
    for (Vertex r : roots) {
        if (r >= n) throw std::invalid_argument("root out of range");
        root_[r] = 1;
        in_[r] = 1;
        level_[r] = 0;
        pivot_[r] = r;
    }
    if (mode == Mode::kSpanning) init_spanning();
}

void MonotoneEsTree::init_spanning() {
    // Dijkstra from all roots; equal distances prefer the smaller
    // (pivot, parent) so the result does not depend on heap order.
    std::priority_queue<std::pair<Weight, Vertex>, std::vector<std::pair<Weight, Vertex>>, HeapCmp> pq;
    std::vector<std::uint8_t> done(level_.size(), 0);
    for (Vertex v = 0; v < level_.size(); ++v)
        if (root_[v]) pq.push({0, v});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u] || d != level_[u]) continue;
        done[u] = 1;
        const auto& arcs = g_->neighbors(u);
        scans_ += arcs.size();
        if (scan_sink_) scan_sink_[u] += arcs.size();
        for (const auto& arc : arcs) {
            Vertex x = arc.to;
            if (root_[x] || done[x]) continue;
            Weight c = d + arc.w;
            if (c > depth_) continue;
            bool better = c < level_[x] ||
                          (c == level_[x] && std::pair(pivot_[u], u) < std::pair(pivot_[x], parent_[x]));
            if (!better) continue;
            level_[x] = c;
            parent_[x] = u;
            pivot_[x] = pivot_[u];
            pq.push({c, x});
        }
    }
}

bool MonotoneEsTree::supports(Vertex p, Vertex v) const {
    if (p == kNoVertex || !in_[p]) return false;
    auto w = g_->weight(p, v);
    return w && level_[p] + *w <= level_[v];
}

bool MonotoneEsTree::stretched(Vertex v) const {
    if (!in_[v] || root_[v]) return false;
    Weight best = detached();
    for (const auto& arc : g_->neighbors(v))
        if (in_[arc.to]) best = std::min(best, level_[arc.to] + arc.w);
    return level_[v] > best;
}

void MonotoneEsTree::push(Vertex v) {
    if (queued_[v] || root_[v] || !in_[v]) return;
    queued_[v] = 1;
    heap_.push_back({level_[v], v});
    std::push_heap(heap_.begin(), heap_.end(), HeapCmp());
}

// Update() of the monotone tree for every queued vertex, in order of the
// level each had when queued. Raising a vertex re-queues its children; a
// vertex whose level stays only repairs its parent and pivot.
void MonotoneEsTree::cascade(std::vector<Change>& changes) {
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), HeapCmp());
        Vertex v = heap_.back().second;
        heap_.pop_back();
        queued_[v] = 0;
        if (!in_[v] || root_[v]) continue;

        const auto& arcs = g_->neighbors(v);
        scans_ += arcs.size();
        if (scan_sink_) scan_sink_[v] += arcs.size();

        Weight upd = detached();
        Vertex best = kNoVertex;
        for (const auto& arc : arcs) {
            Vertex x = arc.to;
            if (!in_[x]) continue;
            Weight c = level_[x] + arc.w;
            if (c > depth_) continue;
            if (c < upd || (c == upd && std::pair(pivot_[x], x) < std::pair(pivot_[best], best))) {
                upd = c;
                best = x;
            }
        }

        Vertex old_pivot = pivot_[v];
        if (level_[v] < upd) {
            changes.push_back({v, level_[v], old_pivot});
            level_[v] = upd;
            parent_[v] = best;
            pivot_[v] = best == kNoVertex ? kNoVertex : pivot_[best];
        } else {
            // Level stays (v may now be stretched); keep a valid parent,
            // preferring one that does not switch the pivot.
            if (level_[v] > depth_) {
                parent_[v] = kNoVertex;
            } else if (!supports(parent_[v], v)) {
                Vertex pick = kNoVertex;
                for (const auto& arc : arcs) {
                    Vertex x = arc.to;
                    if (!in_[x] || level_[x] + arc.w > level_[v]) continue;
                    auto key = std::tuple(pivot_[x] != old_pivot, x);
                    if (pick == kNoVertex || key < std::tuple(pivot_[pick] != old_pivot, pick)) pick = x;
                }
                parent_[v] = pick;
            }
            Vertex p = parent_[v];
            pivot_[v] = p == kNoVertex ? kNoVertex : pivot_[p];
            if (pivot_[v] == old_pivot) continue;
            changes.push_back({v, level_[v], old_pivot});
        }
        for (const auto& arc : arcs)
            if (in_[arc.to] && parent_[arc.to] == v) push(arc.to);
    }
}

void MonotoneEsTree::edge_increased(Vertex a, Vertex b, std::vector<Change>& changes) {
    if (!in_[a] || !in_[b]) return;
    if (parent_[b] == a) push(b);
    if (parent_[a] == b) push(a);
    cascade(changes);
}

void MonotoneEsTree::edge_inserted(Vertex a, Vertex b, std::vector<Change>& changes) {
    if (!in_[a] || !in_[b]) return;
    push(b);
    push(a);
    cascade(changes);
}

void MonotoneEsTree::apply(const EdgeChange& change, std::vector<Change>& changes) {
    if (change.is_increase())
        edge_increased(change.u, change.v, changes);
    else
        edge_inserted(change.u, change.v, changes);
}

void MonotoneEsTree::admit(Vertex v, Weight level, Vertex parent) {
    in_[v] = 1;
    level_[v] = level;
    parent_[v] = parent;
    pivot_[v] = parent == kNoVertex ? kNoVertex : pivot_[parent];
}

void MonotoneEsTree::evict(Vertex v, std::vector<Change>& changes) {
    if (!in_[v] || root_[v]) return;
    in_[v] = 0;
    level_[v] = detached();
    parent_[v] = kNoVertex;
    pivot_[v] = kNoVertex;
    for (const auto& arc : g_->neighbors(v))
        if (in_[arc.to] && parent_[arc.to] == v) push(arc.to);
    cascade(changes);
}

}  // namespace dechop
