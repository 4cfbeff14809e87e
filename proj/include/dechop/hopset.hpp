#pragma once

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "dechop/clustering.hpp"
#include "dechop/graph.hpp"
#include "dechop/hierarchy.hpp"
#include "dechop/rational.hpp"
#include "dechop/scaling.hpp"

namespace dechop {

struct HopsetParams {
    int k = 2;
    Rational rho{1, 2};
    Rational eps{1, 2};
    std::uint64_t seed = 1;
};

struct RationalEdge {
    Vertex u;
    Vertex v;
    Rational w;
    friend bool operator==(const RationalEdge&, const RationalEdge&) = default;
};

// Decremental (hop_cap, 1+eps)-hopset over all distance scales.
//
// Scale j has radius R_j = 2^j * w_min and the view
//   G^j = Scale(G ∪ H_0 ∪ ... ∪ H_j, R_j, eps2, 2*hop_cap + 1).
// D_j clusters G^j up to depth d and its edges, unscaled by eta_j, form
// H_{j+1}. D_j only exists when 2^{j+1} > hop_cap; below that G alone
// already covers the scale and H_{j+1} stays empty.
class HopsetState {
public:
    HopsetState(DynamicGraph& g, const HopsetParams& params);
    HopsetState(const HopsetState&) = delete;
    HopsetState& operator=(const HopsetState&) = delete;

    void delete_edge(Vertex u, Vertex v);
    void increase_weight(Vertex u, Vertex v, Weight delta);

    const DynamicGraph& graph() const { return *g_; }
    const EdgeMultiset& edges() const { return edges_; }
    const HopsetParams& params() const { return params_; }
    const Hierarchy& hierarchy() const { return h_; }

    int num_scales() const { return scales_; }
    const Rational& eps_prime() const { return eps_prime_; }
    const Rational& eps2() const { return eps_prime_; }
    const Rational& delta() const { return delta_; }
    double beta_formula() const { return beta_; }
    Weight hop_cap() const { return hop_cap_; }
    Weight ell() const { return 2 * hop_cap_ + 1; }
    Weight depth() const { return depth_; }
    Rational radius(int j) const;

    const ScaledView& view(int j) const { return *views_[j]; }
    bool active(int j) const { return j < static_cast<int>(clusters_.size()) && clusters_[j] != nullptr; }
    const ClusterState& clusters(int j) const { return *clusters_[j]; }

    // Host changes each view saw during the last update, in pair order.
    const std::vector<EdgeChange>& last_changes(int j) const { return last_changes_[j]; }
    // Pairs of G ∪ H whose multiset entry changed during the last update.
    const std::vector<std::uint64_t>& last_dirty() const { return last_dirty_; }

    // Union over scales, per-pair minimum weight, sorted by pair.
    std::vector<RationalEdge> hopset_edges() const;
    // H_0 ∪ ... ∪ H_j.
    std::vector<RationalEdge> hopset_edges_upto(int j) const;
    std::size_t hopset_size() const;

    std::uint64_t scans_total() const;
    std::string manifest() const;

    // Fault injection for audit tests: adds (u,v,w) to the top slice.
    void inject_hop_edge(Vertex u, Vertex v, const Rational& w);

private:
    void cascade(std::uint64_t pair);

    DynamicGraph* g_;
    HopsetParams params_;
    Hierarchy h_;
    int scales_ = 0;
    Rational eps_prime_;
    Rational delta_;
    double beta_ = 0;
    Weight hop_cap_ = 0;
    Weight depth_ = 1;
    EdgeMultiset edges_;
    std::vector<std::unique_ptr<ScaledView>> views_;
    std::vector<std::unique_ptr<ClusterState>> clusters_;
    std::vector<std::vector<EdgeChange>> last_changes_;
    std::vector<std::uint64_t> last_dirty_;
};

// Parameter checks shared by the constructors (k >= 1, rho and eps in (0,1)).
void validate_params(const HopsetParams& p);

}  // namespace dechop
