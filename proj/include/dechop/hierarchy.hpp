#pragma once

#include <cstdint>
#include <vector>

#include "dechop/graph.hpp"
#include "dechop/rational.hpp"

namespace dechop {

// splitmix64, used to derive independent streams from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Nested samples V = A_0 ⊇ A_1 ⊇ ... ⊇ A_top = ∅.
class Hierarchy {
public:
    Hierarchy() = default;
    // levels[i] lists A_i; the last entry must be empty.
    Hierarchy(std::size_t n, std::vector<std::vector<Vertex>> levels, std::vector<double> q = {});

    std::size_t num_vertices() const { return n_; }
    // Index of the forced empty set A_top.
    int top() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Vertex>& level(int i) const { return levels_[i]; }
    bool in_level(int i, Vertex v) const { return i <= rank_[v]; }
    // Largest i with v ∈ A_i; v is a center at that level.
    int rank(Vertex v) const { return rank_[v]; }
    const std::vector<double>& q() const { return q_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Vertex>> levels_;
    std::vector<int> rank_;
    std::vector<double> q_;
};

struct HierarchyParams {
    int k = 2;
    Rational rho{1, 2};
};

double hierarchy_nu(int k);
int hierarchy_top(int k, const Rational& rho);  // k + ceil(1/rho) + 1
double hierarchy_q(std::size_t n, int k, const Rational& rho, int i);

// Each level keeps a vertex of the previous one with probability q_i.
Hierarchy sample_hierarchy(std::size_t n, int k, const Rational& rho, std::uint64_t seed);
// Fixed-probability variant with `levels` sampling rounds (A_levels = ∅).
Hierarchy sample_uniform_hierarchy(std::size_t n, int levels, double p, std::uint64_t seed);

}  // namespace dechop
