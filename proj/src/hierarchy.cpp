#include "dechop/hierarchy.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dechop {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// Uniform double in [0,1) from the top 53 bits, so draws do not depend on
// the standard library's distribution implementation.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Hierarchy sample(std::size_t n, const std::vector<double>& q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> levels(q.size() + 1);
    for (Vertex v = 0; v < n; ++v) levels[0].push_back(v);
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        for (Vertex v : levels[i])
            if (unit(rng) < q[i]) levels[i + 1].push_back(v);
    return Hierarchy(n, std::move(levels), q);
}

}  // namespace

Hierarchy::Hierarchy(std::size_t n, std::vector<std::vector<Vertex>> levels, std::vector<double> q)
    : n_(n), levels_(std::move(levels)), rank_(n, -1), q_(std::move(q)) {
    if (levels_.empty() || !levels_.back().empty()) throw std::invalid_argument("top level must be empty");
    for (int i = 0; i <= top(); ++i)
        for (Vertex v : levels_[i]) {
            if (v >= n) throw std::invalid_argument("vertex out of range");
            if (rank_[v] != i - 1) throw std::invalid_argument("levels must be nested");
            rank_[v] = i;
        }
    for (Vertex v = 0; v < n; ++v)
        if (rank_[v] < 0) throw std::invalid_argument("A_0 must be all vertices");
}

double hierarchy_nu(int k) { return 1.0 / (std::pow(2.0, k) - 1.0); }

int hierarchy_top(int k, const Rational& rho) {
    // ceil(1/rho) = ceil(den/num)
    std::int64_t inv = (rho.den() + rho.num() - 1) / rho.num();
    return k + static_cast<int>(inv) + 1;
}

double hierarchy_q(std::size_t n, int k, const Rational& rho, int i) {
    double dn = static_cast<double>(n);
    return std::max(std::pow(dn, -std::pow(2.0, i) * hierarchy_nu(k)), std::pow(dn, -rho.to_double()));
}

Hierarchy sample_hierarchy(std::size_t n, int k, const Rational& rho, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (rho <= Rational(0) || rho >= Rational(1)) throw std::invalid_argument("rho must lie in (0,1)");
    std::vector<double> q;
    for (int i = 0; i < hierarchy_top(k, rho); ++i) q.push_back(hierarchy_q(n, k, rho, i));
    return sample(n, q, seed);
}

Hierarchy sample_uniform_hierarchy(std::size_t n, int levels, double p, std::uint64_t seed) {
    if (levels < 1) throw std::invalid_argument("need at least one level");
    return sample(n, std::vector<double>(levels, p), seed);
}

}  // namespace dechop
