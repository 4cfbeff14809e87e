#include "dechop/scaling.hpp"

#include <algorithm>
#include <stdexcept>

namespace dechop {

Rational eta(const Rational& R, const Rational& eps0, Weight ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (R <= Rational(0)) throw std::invalid_argument("R must be positive");
    if (eps0 <= Rational(0)) throw std::invalid_argument("eps0 must be positive");
    return eps0 * R / Rational(ell);
}

Weight scale_weight(const Rational& w, const Rational& eta) { return (w / eta).ceil(); }

Rational unscale(Weight scaled, const Rational& eta) { return Rational(scaled) * eta; }

Rational unscale(Weight scaled, const Rational& R, const Rational& eps0, Weight ell) {
    return unscale(scaled, eta(R, eps0, ell));
}

void EdgeMultiset::put(int scale, HopTag tag, Vertex u, Vertex v, const Rational& w,
                       std::vector<std::uint64_t>& touched) {
    remove(scale, tag, touched);
    auto key = pair_key(u, v);
    hop_[key].push_back({scale, tag, w});
    where_[{scale, tag}] = key;
    touched.push_back(key);
}

void EdgeMultiset::remove(int scale, HopTag tag, std::vector<std::uint64_t>& touched) {
    auto it = where_.find({scale, tag});
    if (it == where_.end()) return;
    auto key = it->second;
    where_.erase(it);
    auto& list = hop_[key];
    list.erase(std::find_if(list.begin(), list.end(),
                            [&](const Entry& e) { return e.scale == scale && e.tag == tag; }));
    if (list.empty()) hop_.erase(key);
    touched.push_back(key);
}

std::optional<Rational> EdgeMultiset::hop_weight(std::uint64_t pair, int max_scale) const {
    std::optional<Rational> best;
    auto it = hop_.find(pair);
    if (it == hop_.end()) return best;
    for (const auto& e : it->second)
        if (e.scale <= max_scale && (!best || e.w < *best)) best = e.w;
    return best;
}

std::optional<Rational> EdgeMultiset::weight(std::uint64_t pair, int max_scale) const {
    auto best = hop_weight(pair, max_scale);
    if (auto w = base_->weight(key_low(pair), key_high(pair))) {
        Rational b(*w);
        if (!best || b < *best) best = b;
    }
    return best;
}

std::vector<std::uint64_t> EdgeMultiset::pairs() const {
    std::vector<std::uint64_t> out;
    for (const auto& e : base_->edges()) out.push_back(pair_key(e.u, e.v));
    for (const auto& [key, list] : hop_) out.push_back(key);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<std::uint64_t, Rational>> EdgeMultiset::hop_edges(int min_scale, int max_scale) const {
    std::vector<std::pair<std::uint64_t, Rational>> out;
    for (const auto& [key, list] : hop_) {
        std::optional<Rational> best;
        for (const auto& e : list)
            if (e.scale >= min_scale && e.scale <= max_scale && (!best || e.w < *best)) best = e.w;
        if (best) out.emplace_back(key, *best);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

ScaledView::ScaledView(const EdgeMultiset& edges, int max_scale, const Rational& R, const Rational& eps0,
                       Weight ell)
    : edges_(&edges), max_scale_(max_scale), R_(R), eta_(dechop::eta(R, eps0, ell)), g_(edges.num_vertices()) {
    rebuild();
}

void ScaledView::rebuild() {
    g_ = WeightedGraph(edges_->num_vertices());
    for (auto key : edges_->pairs()) refresh(key);
}

std::optional<EdgeChange> ScaledView::refresh(std::uint64_t pair) {
    auto w = edges_->weight(pair, max_scale_);
    std::optional<Weight> next;
    if (w) next = scaled(*w);
    auto change = g_.set_weight(key_low(pair), key_high(pair), next);
    if (change.before == change.after) return std::nullopt;
    return change;
}

}  // namespace dechop
