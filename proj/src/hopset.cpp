#include "dechop/hopset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dechop {

void validate_params(const HopsetParams& p) {
    if (p.k < 1) throw std::invalid_argument("k must be >= 1");
    if (p.rho <= Rational(0) || p.rho >= Rational(1)) throw std::invalid_argument("rho must lie in (0,1)");
    if (p.eps <= Rational(0) || p.eps >= Rational(1)) throw std::invalid_argument("eps must lie in (0,1)");
}

HopsetState::HopsetState(DynamicGraph& g, const HopsetParams& params)
    : g_(&g), params_(params), edges_(g) {
    validate_params(params);
    std::size_t n = g.num_vertices();
    h_ = sample_hierarchy(n, params.k, params.rho, mix_seed(params.seed, 0));
    scales_ = dechop::num_scales(g);

    int top = hierarchy_top(params.k, params.rho);
    eps_prime_ = params.eps / Rational(6 * std::max(scales_, 1));
    delta_ = eps_prime_ / Rational(8 * top);
    beta_ = std::pow(3.0 / delta_.to_double(), top);
    Weight cap = std::max<Weight>(static_cast<Weight>(n) - 1, 1);
    hop_cap_ = beta_ < static_cast<double>(cap) ? std::max<Weight>(static_cast<Weight>(beta_), 1) : cap;
    depth_ = (Rational(2 * ell()) / eps_prime_).ceil();

    last_changes_.resize(scales_ + 1);
    clusters_.resize(scales_ + 1);
    for (int j = 0; j <= scales_; ++j) {
        // H_0..H_j are final at this point, so G^j can be built and clustered.
        views_.push_back(std::make_unique<ScaledView>(edges_, j, radius(j), eps_prime_, ell()));
        if (j == scales_ || (Weight{2} << j) <= hop_cap_) continue;
        clusters_[j] = std::make_unique<ClusterState>(views_[j]->graph(), h_, depth_, eps_prime_);
        std::vector<std::uint64_t> touched;
        for (const auto& e : clusters_[j]->hopset_edges())
            edges_.put(j + 1, e.tag, e.u, e.v, views_[j]->unscale(e.level), touched);
    }
}

Rational HopsetState::radius(int j) const {
    return Rational(std::max<Weight>(g_->initial_min_weight(), 1)) * Rational(Weight{1} << j);
}

void HopsetState::delete_edge(Vertex u, Vertex v) {
    g_->delete_edge(u, v);
    cascade(pair_key(u, v));
}

void HopsetState::increase_weight(Vertex u, Vertex v, Weight delta) {
    g_->increase_weight(u, v, delta);
    cascade(pair_key(u, v));
}

void HopsetState::inject_hop_edge(Vertex u, Vertex v, const Rational& w) {
    std::vector<std::uint64_t> touched;
    edges_.put(scales_, HopTag{2, u, v}, u, v, w, touched);
    for (auto& c : last_changes_) c.clear();
    for (int j = 0; j <= scales_; ++j)
        if (auto c = views_[j]->refresh(pair_key(u, v))) last_changes_[j].push_back(*c);
    last_dirty_ = {pair_key(u, v)};
}

// One pass of the scale loop: every view picks up the pairs touched so
// far, D_j reacts, and its net hopset changes land in slice j+1.
void HopsetState::cascade(std::uint64_t pair) {
    std::set<std::uint64_t> dirty{pair};
    for (int j = 0; j <= scales_; ++j) {
        auto& changes = last_changes_[j];
        changes.clear();
        for (auto key : dirty)
            if (auto c = views_[j]->refresh(key)) changes.push_back(*c);
        if (!active(j) || changes.empty()) continue;
        std::vector<std::uint64_t> touched;
        for (const auto& c : clusters_[j]->update(changes)) {
            if (c.after)
                edges_.put(j + 1, c.tag, c.after->u, c.after->v, views_[j]->unscale(c.after->level), touched);
            else
                edges_.remove(j + 1, c.tag, touched);
        }
        dirty.insert(touched.begin(), touched.end());
    }
    last_dirty_.assign(dirty.begin(), dirty.end());
}

std::vector<RationalEdge> HopsetState::hopset_edges_upto(int j) const {
    std::vector<RationalEdge> out;
    for (const auto& [key, w] : edges_.hop_edges(0, j)) out.push_back({key_low(key), key_high(key), w});
    return out;
}

std::vector<RationalEdge> HopsetState::hopset_edges() const { return hopset_edges_upto(scales_); }

std::size_t HopsetState::hopset_size() const { return edges_.hop_edges(0, scales_).size(); }

std::uint64_t HopsetState::scans_total() const {
    std::uint64_t total = 0;
    for (const auto& c : clusters_)
        if (c) total += c->total_scans();
    return total;
}

std::string HopsetState::manifest() const {
    char beta[64];
    std::snprintf(beta, sizeof beta, "%.6g", beta_);
    std::ostringstream os;
    os << "n=" << g_->num_vertices() << '\n'
       << "m=" << g_->num_edges() << '\n'
       << "k=" << params_.k << '\n'
       << "rho=" << params_.rho.str() << '\n'
       << "eps=" << params_.eps.str() << '\n'
       << "eps_prime=" << eps_prime_.str() << '\n'
       << "beta_formula=" << beta << '\n'
       << "hop_cap=" << hop_cap_ << '\n'
       << "d=" << depth_ << '\n'
       << "num_scales=" << scales_ << '\n'
       << "seed=" << params_.seed << '\n';
    return os.str();
}

}  // namespace dechop
