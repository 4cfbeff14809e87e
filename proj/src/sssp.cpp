#include "dechop/sssp.hpp"

#include <stdexcept>

namespace dechop {

SourceSet::SourceSet(const HopsetState& hs, std::vector<Vertex> sources) : hs_(&hs), sources_(std::move(sources)) {
    if (sources_.empty()) throw std::invalid_argument("source set is empty");
    for (Vertex s : sources_) {
        if (s >= hs.graph().num_vertices()) throw std::invalid_argument("source out of range");
        if (!index_.emplace(s, trees_.size()).second) throw std::invalid_argument("duplicate source");
        auto& per_scale = trees_.emplace_back();
        for (int j = 0; j <= hs.num_scales(); ++j)
            per_scale.push_back(std::make_unique<MonotoneEsTree>(hs.view(j).graph(), std::vector<Vertex>{s},
                                                                 hs.depth()));
    }
}

void SourceSet::update() {
    std::vector<MonotoneEsTree::Change> scratch;
    for (auto& per_scale : trees_)
        for (int j = 0; j <= hs_->num_scales(); ++j)
            for (const auto& c : hs_->last_changes(j)) {
                scratch.clear();
                per_scale[j]->apply(c, scratch);
            }
}

Rational SourceSet::query(Vertex s, Vertex v) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("query from a vertex outside the source set");
    if (v >= hs_->graph().num_vertices()) throw std::invalid_argument("vertex out of range");
    Rational best = Rational::infinity();
    const auto& per_scale = trees_[it->second];
    for (int j = 0; j < static_cast<int>(per_scale.size()); ++j) {
        Weight l = per_scale[j]->level(v);
        if (l <= hs_->depth()) best = min(best, hs_->view(j).unscale(l));
    }
    return best;
}

std::uint64_t SourceSet::scans_total() const {
    std::uint64_t total = 0;
    for (const auto& per_scale : trees_)
        for (const auto& t : per_scale) total += t->scans();
    return total;
}

}  // namespace dechop
