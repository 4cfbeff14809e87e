#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dechop/clustering.hpp"
#include "dechop/hierarchy.hpp"
#include "dechop/hopset.hpp"

namespace dechop {

// Bunch of one vertex with distance estimates, self-contained enough to
// answer queries against another sketch.
struct SketchMember {
    Rational dist;
    std::uint8_t rank;
};

struct Sketch {
    // Bunch members and pivots with their minimum estimate.
    std::unordered_map<Vertex, SketchMember> members;
    // pivots[i] = p_i(owner), kNoVertex if none within depth; pivots[0] is the owner.
    std::vector<Vertex> pivots;
};

// Record layout, little endian:
//   u32 count, then count records of
//   u32 vertex, u8 tag (bit 7 = pivot, low bits = level), i64 num, i64 den.
// Pivot records carry p_i(owner) with level i; member records carry the
// member's rank in the oracle hierarchy.
std::string serialize_sketch(const Sketch& s);
Sketch parse_sketch(std::string_view bytes);
std::size_t sketch_entries(const Sketch& s);

// Thorup-Zwick query over two sketches; `iterations` gets the number of
// pivot hops taken (at most k-1).
Rational tz_query(const Sketch& su, const Sketch& sv, int* iterations = nullptr);

// Decremental (2k-1)(1+eps) distance oracle: a k-level hierarchy with
// p = n^{-1/k}, clustered on every scaled graph of G ∪ H-bar_j with
// eps0 = eps/3 and depth ceil(6(hop_cap+1)/eps). Estimates are the
// minimum unscaled level over the scales.
class DistanceOracle {
public:
    DistanceOracle(const HopsetState& hs, int k, const Rational& eps, std::uint64_t seed);
    DistanceOracle(const DistanceOracle&) = delete;
    DistanceOracle& operator=(const DistanceOracle&) = delete;

    // Follows the hopset's last pass.
    void update();

    Rational query(Vertex u, Vertex v, int* iterations = nullptr) const;
    const Sketch& sketch_of(Vertex u) const { return sketches_[u]; }
    std::string sketch(Vertex u) const { return serialize_sketch(sketches_[u]); }
    static Rational sketch_query(std::string_view a, std::string_view b, int* iterations = nullptr);

    int k() const { return k_; }
    const Rational& eps() const { return eps_; }
    Weight depth() const { return depth_; }
    const Hierarchy& hierarchy() const { return h_; }
    std::uint64_t scans_total() const;

private:
    void rebuild_sketch(Vertex v);

    const HopsetState* hs_;
    int k_;
    Rational eps_;
    Weight depth_;
    Hierarchy h_;
    std::vector<std::unique_ptr<ScaledView>> views_;
    std::vector<std::unique_ptr<ClusterState>> clusters_;
    std::vector<Sketch> sketches_;
};

}  // namespace dechop
