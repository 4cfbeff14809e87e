#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "dechop/es_tree.hpp"
#include "dechop/hopset.hpp"

namespace dechop {

// (1+eps)-approximate distances from a fixed source set: one monotone ES
// tree per source on every scaled graph G^j, depth d of the hopset.
class SourceSet {
public:
    SourceSet(const HopsetState& hs, std::vector<Vertex> sources);

    // Feeds the per-scale changes of the hopset's last pass to every tree.
    void update();

    // min_j eta_j * L_j(s,v) over levels within depth; infinity otherwise.
    Rational query(Vertex s, Vertex v) const;

    const std::vector<Vertex>& sources() const { return sources_; }
    bool is_source(Vertex s) const { return index_.count(s) != 0; }
    const MonotoneEsTree& tree(Vertex s, int j) const { return *trees_[index_.at(s)][j]; }
    std::uint64_t scans_total() const;

private:
    const HopsetState* hs_;
    std::vector<Vertex> sources_;
    std::unordered_map<Vertex, std::size_t> index_;
    std::vector<std::vector<std::unique_ptr<MonotoneEsTree>>> trees_;
};

}  // namespace dechop
