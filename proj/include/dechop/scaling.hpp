#pragma once

#include <compare>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dechop/graph.hpp"
#include "dechop/rational.hpp"

namespace dechop {

// eta(R, eps0) = eps0 * R / ell
Rational eta(const Rational& R, const Rational& eps0, Weight ell);
// ceil(w / eta); never below 1 for a positive w.
Weight scale_weight(const Rational& w, const Rational& eta);
Rational unscale(Weight scaled, const Rational& eta);
Rational unscale(Weight scaled, const Rational& R, const Rational& eps0, Weight ell);

// Identifies one hopset edge emitted by a cluster structure.
// kind 0: cluster edge, a = center, b = member.
// kind 1: pivot edge, a = hierarchy level, b = vertex.
struct HopTag {
    std::uint8_t kind = 0;
    Vertex a = 0;
    Vertex b = 0;
    friend auto operator<=>(const HopTag&, const HopTag&) = default;
};

// The graph plus the per-scale hopset slices H_r, as a multiset of
// weighted pairs. A pair may carry the base edge and several hopset
// contributions; readers take the minimum over the slices they include.
class EdgeMultiset {
public:
    explicit EdgeMultiset(const DynamicGraph& base) : base_(&base) {}

    const DynamicGraph& base() const { return *base_; }
    std::size_t num_vertices() const { return base_->num_vertices(); }

    // Replaces the contribution of `tag` in slice `scale`; appends the
    // pair keys whose multiset changed.
    void put(int scale, HopTag tag, Vertex u, Vertex v, const Rational& w, std::vector<std::uint64_t>& touched);
    void remove(int scale, HopTag tag, std::vector<std::uint64_t>& touched);

    // Minimum over the base edge and slices <= max_scale.
    std::optional<Rational> weight(std::uint64_t pair, int max_scale) const;
    std::optional<Rational> hop_weight(std::uint64_t pair, int max_scale) const;

    // Every pair that has a base edge or a hopset entry, sorted.
    std::vector<std::uint64_t> pairs() const;
    // Hopset pairs with slices in [min_scale, max_scale], per-pair minimum, sorted.
    std::vector<std::pair<std::uint64_t, Rational>> hop_edges(int min_scale, int max_scale) const;

private:
    struct Entry {
        int scale;
        HopTag tag;
        Rational w;
    };
    const DynamicGraph* base_;
    std::unordered_map<std::uint64_t, std::vector<Entry>> hop_;
    std::map<std::pair<int, HopTag>, std::uint64_t> where_;
};

// Scale(G ∪ H_0 ∪ ... ∪ H_max_scale, R, eps0, ell) kept as an integer graph.
// It follows the multiset lazily: callers refresh the pairs they touched.
class ScaledView {
public:
    ScaledView(const EdgeMultiset& edges, int max_scale, const Rational& R, const Rational& eps0, Weight ell);

    const Rational& eta() const { return eta_; }
    const Rational& radius() const { return R_; }
    int max_scale() const { return max_scale_; }
    Weight scaled(const Rational& w) const { return scale_weight(w, eta_); }
    Rational unscale(Weight w) const { return dechop::unscale(w, eta_); }
    const WeightedGraph& graph() const { return g_; }

    void rebuild();
    // Recomputes one pair; returns the change if its scaled weight moved.
    std::optional<EdgeChange> refresh(std::uint64_t pair);

private:
    const EdgeMultiset* edges_;
    int max_scale_;
    Rational R_;
    Rational eta_;
    WeightedGraph g_;
};

}  // namespace dechop
