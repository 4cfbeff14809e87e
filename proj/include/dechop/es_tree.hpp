#pragma once

#include <cstdint>
#include <vector>

#include "dechop/graph.hpp"

namespace dechop {

// Bounded-depth shortest-path tree whose levels never decrease.
//
// Levels live in [0, D+1]; D+1 stands for the virtual root edge of weight
// D+1, i.e. "beyond depth". Several roots act as one dummy source joined to
// each of them by a zero-weight edge; pivot(v) is the root at the end of
// v's parent chain.
//
// In member mode only admitted vertices take part (cluster trees); in
// spanning mode every vertex does.
class MonotoneEsTree {
public:
    enum class Mode { kSpanning, kMembers };

    // First modification of a vertex inside one call.
    struct Change {
        Vertex v;
        Weight old_level;
        Vertex old_pivot;
    };

    MonotoneEsTree(const WeightedGraph& host, std::vector<Vertex> roots, Weight depth,
                   Mode mode = Mode::kSpanning, std::uint64_t* scan_sink = nullptr);

    const WeightedGraph& host() const { return *g_; }
    Weight depth() const { return depth_; }
    Weight detached() const { return depth_ + 1; }

    bool contains(Vertex v) const { return in_[v] != 0; }
    bool is_root(Vertex v) const { return root_[v] != 0; }
    Weight level(Vertex v) const { return level_[v]; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    Vertex pivot(Vertex v) const { return pivot_[v]; }
    bool stretched(Vertex v) const;
    std::uint64_t scans() const { return scans_; }

    // The host weight of (a,b) went up or the edge is gone.
    void edge_increased(Vertex a, Vertex b, std::vector<Change>& changes);
    // The host gained (a,b) or its weight dropped: Update(b), Update(a).
    void edge_inserted(Vertex a, Vertex b, std::vector<Change>& changes);
    // Routes a host change to one of the two calls above.
    void apply(const EdgeChange& change, std::vector<Change>& changes);

    // Member mode: v enters at `level` hanging below `parent`.
    void admit(Vertex v, Weight level, Vertex parent);
    // Member mode: v leaves; the subtree below it is repaired.
    void evict(Vertex v, std::vector<Change>& changes);

private:
    void init_spanning();
    void cascade(std::vector<Change>& changes);
    void push(Vertex v);
    bool supports(Vertex p, Vertex v) const;

    const WeightedGraph* g_;
    Weight depth_;
    Mode mode_;
    std::uint64_t* scan_sink_;
    std::uint64_t scans_ = 0;

    std::vector<Weight> level_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> pivot_;
    std::vector<std::uint8_t> in_;
    std::vector<std::uint8_t> root_;
    std::vector<std::uint8_t> queued_;
    std::vector<std::pair<Weight, Vertex>> heap_;
};

}  // namespace dechop
