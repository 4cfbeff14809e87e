#include "dechop/verifier.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdio>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dechop/clustering.hpp"
#include "dechop/hierarchy.hpp"
#include "dechop/hopset.hpp"
#include "dechop/oracle.hpp"
#include "dechop/sssp.hpp"

namespace dechop {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::vector<Weight> multi_source_dijkstra(const WeightedGraph& g, const std::vector<Vertex>& sources) {
    std::vector<Weight> dist(g.num_vertices(), kUnreachable);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex s : sources) {
        dist[s] = 0;
        pq.push({0, s});
    }
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (const auto& a : g.neighbors(u)) {
            Weight nd = d + a.w;
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                pq.push({nd, a.to});
            }
        }
    }
    return dist;
}

// Tracks the worst pair of one check; the first violation wins the witness.
struct Tally {
    AuditCheck c;
    bool seen = false;

    explicit Tally(std::string name) { c.name = std::move(name); }

    void record(Vertex u, Vertex v, const Rational& est, const Rational& exact, const Rational& ratio, bool ok,
                bool larger_is_worse = true) {
        if (!c.pass) return;
        bool worse = !seen || (larger_is_worse ? ratio > c.worst_ratio : ratio < c.worst_ratio);
        if (!ok || worse) {
            c.worst_ratio = ratio;
            c.u = u;
            c.v = v;
            c.estimate = est;
            c.exact = exact;
        }
        seen = true;
        if (!ok) c.pass = false;
    }
};

Rational ratio_of(const Rational& est, Weight exact) {
    if (est.is_infinite()) return Rational::infinity();
    return est / Rational(exact);
}

Rational exact_value(Weight d) { return d == kUnreachable ? Rational::infinity() : Rational(d); }

// Sandwich test exact <= est <= bound * exact with the bound as a rational power.
bool within(const Rational& est, Weight exact, const Rational& base, int power) {
    if (exact == kUnreachable) return est.is_infinite();
    if (est.is_infinite()) return false;
    if (est < Rational(exact)) return false;
    BigInt lhs = BigInt(est.num()) * boost::multiprecision::pow(BigInt(base.den()), power);
    BigInt rhs = BigInt(est.den()) * BigInt(exact) * boost::multiprecision::pow(BigInt(base.num()), power);
    return lhs <= rhs;
}

}  // namespace

std::vector<Weight> exact_dijkstra(const WeightedGraph& g, Vertex s) { return multi_source_dijkstra(g, {s}); }

std::vector<std::vector<Weight>> exact_all_pairs(const DynamicGraph& g) {
    std::vector<std::vector<Weight>> out;
    for (Vertex s = 0; s < g.num_vertices(); ++s) out.push_back(exact_dijkstra(g, s));
    return out;
}

AuditGraph::AuditGraph(const DynamicGraph& g, const std::vector<RationalEdge>& extra) : adj_(g.num_vertices()) {
    for (const auto& e : extra) {
        if (e.w.is_infinite()) continue;
        std::int64_t l = std::lcm(den_, e.w.den());
        if (l <= 0 || l > (std::int64_t{1} << 40)) throw std::overflow_error("audit denominator too large");
        den_ = l;
    }
    std::map<std::uint64_t, std::int64_t> best;
    auto offer = [&](Vertex u, Vertex v, const Rational& w) {
        __int128 scaled = static_cast<__int128>(w.num()) * (den_ / w.den());
        if (scaled > (static_cast<__int128>(1) << 62)) throw std::overflow_error("audit weight too large");
        auto key = pair_key(u, v);
        auto it = best.find(key);
        if (it == best.end() || scaled < it->second) best[key] = static_cast<std::int64_t>(scaled);
    };
    for (const auto& e : g.edges()) offer(e.u, e.v, Rational(e.w));
    for (const auto& e : extra)
        if (!e.w.is_infinite()) offer(e.u, e.v, e.w);
    for (const auto& [key, w] : best) {
        adj_[key_low(key)].push_back({key_high(key), w});
        adj_[key_high(key)].push_back({key_low(key), w});
    }
}

std::vector<Rational> AuditGraph::bounded_hop(Vertex s, Weight h) const {
    if (h < 1) throw std::invalid_argument("hop bound must be >= 1");
    std::size_t n = adj_.size();
    std::vector<std::int64_t> dist(n, kUnreachable);
    dist[s] = 0;
    // Round r relaxes out of the vertices improved in round r-1, reading
    // the previous round's values, so after r rounds dist is the r-hop
    // distance. A round without improvement means every later round is
    // identical.
    std::vector<Vertex> frontier{s};
    std::vector<std::int64_t> next = dist;
    std::vector<char> marked(n, 0);
    for (Weight round = 0; round < h && !frontier.empty(); ++round) {
        std::vector<Vertex> improved;
        for (Vertex u : frontier)
            for (const auto& [x, w] : adj_[u])
                if (dist[u] + w < next[x]) {
                    next[x] = dist[u] + w;
                    if (!marked[x]) {
                        marked[x] = 1;
                        improved.push_back(x);
                    }
                }
        for (Vertex x : improved) {
            dist[x] = next[x];
            marked[x] = 0;
        }
        std::sort(improved.begin(), improved.end());
        frontier = std::move(improved);
    }
    std::vector<Rational> out(n, Rational::infinity());
    for (Vertex v = 0; v < n; ++v)
        if (dist[v] != kUnreachable) out[v] = Rational(dist[v], den_);
    return out;
}

Rational bounded_hop_distance(const AuditGraph& g, Weight h, Vertex u, Vertex v) { return g.bounded_hop(u, h)[v]; }

bool AuditReport::pass() const { return first_failure() == nullptr; }

const AuditCheck* AuditReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

std::string AuditReport::csv_header() { return "t,check,pass,worst_ratio,u,v,estimate,exact"; }

std::string AuditReport::csv() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        char ratio[64];
        if (c.worst_ratio.is_infinite())
            std::snprintf(ratio, sizeof ratio, "inf");
        else
            std::snprintf(ratio, sizeof ratio, "%.6f", c.worst_ratio.to_double());
        os << t << ',' << c.name << ',' << (c.pass ? 1 : 0) << ',' << ratio << ',';
        if (c.u == kNoVertex)
            os << ",,";
        else
            os << c.u << ',' << c.v << ',';
        os << c.estimate.str() << ',' << c.exact.str() << '\n';
    }
    return os.str();
}

std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::vector<std::pair<Vertex, Vertex>> out;
    if (n <= 64) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
        return out;
    }
    std::mt19937_64 rng(mix_seed(seed, 2));
    while (out.size() < count) {
        Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
        if (u != v) out.push_back({std::min(u, v), std::max(u, v)});
    }
    return out;
}

AuditReport audit_hopset(const HopsetState& hs, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    const auto& g = hs.graph();
    AuditReport r;
    r.t = g.time();
    auto exact = exact_all_pairs(g);
    auto hop_edges = hs.hopset_edges();
    AuditGraph ag(g, hop_edges);
    Rational bound = Rational(1) + hs.params().eps;

    Tally stretch("hopset_stretch");
    std::map<Vertex, std::vector<Rational>> from;
    for (auto [u, v] : pairs) {
        auto it = from.find(u);
        if (it == from.end()) it = from.emplace(u, ag.bounded_hop(u, hs.hop_cap())).first;
        const Rational& est = it->second[v];
        Weight d = exact[u][v];
        if (d == 0) continue;
        stretch.record(u, v, est, exact_value(d), d == kUnreachable ? Rational(1) : ratio_of(est, d),
                       within(est, d, bound, 1));
    }
    r.counters["pairs"] = pairs.size();
    r.checks.push_back(stretch.c);

    Tally weights("hopset_weights");
    for (const auto& e : hop_edges) {
        Weight d = exact[e.u][e.v];
        bool ok = d != kUnreachable && e.w >= Rational(d);
        weights.record(e.u, e.v, e.w, exact_value(d), d == kUnreachable ? Rational(0) : ratio_of(e.w, d), ok,
                       false);
    }
    r.counters["hopset_edges"] = hop_edges.size();
    r.checks.push_back(weights.c);
    return r;
}

AuditReport audit_scales(const HopsetState& hs, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    const auto& g = hs.graph();
    AuditReport r;
    r.t = g.time();
    auto exact = exact_all_pairs(g);
    Rational base = Rational(1) + Rational(3) * hs.eps_prime();
    Tally check("scale_contract");
    for (int j = 0; j <= hs.num_scales(); ++j) {
        Rational hi = hs.radius(j);
        Rational lo = hi / Rational(2);
        std::vector<std::pair<Vertex, Vertex>> band;
        for (auto [u, v] : pairs) {
            Weight d = exact[u][v];
            if (d != kUnreachable && Rational(d) >= lo && Rational(d) <= hi) band.push_back({u, v});
        }
        if (band.empty()) continue;
        AuditGraph ag(g, hs.hopset_edges_upto(j));
        std::map<Vertex, std::vector<Rational>> from;
        for (auto [u, v] : band) {
            auto it = from.find(u);
            if (it == from.end()) it = from.emplace(u, ag.bounded_hop(u, hs.hop_cap())).first;
            const Rational& est = it->second[v];
            Weight d = exact[u][v];
            check.record(u, v, est, Rational(d), ratio_of(est, d), within(est, d, base, j));
        }
        r.counters["pairs_scale_" + std::to_string(j)] = band.size();
    }
    r.checks.push_back(check.c);
    return r;
}

AuditReport audit_sources(const SourceSet& ss, const DynamicGraph& g, const Rational& eps) {
    AuditReport r;
    r.t = g.time();
    Rational bound = Rational(1) + eps;
    Tally check("sssp_stretch");
    for (Vertex s : ss.sources()) {
        auto exact = exact_dijkstra(g, s);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            Rational est = ss.query(s, v);
            Weight d = exact[v];
            if (d == 0) {
                check.record(s, v, est, Rational(0), Rational(1), est == Rational(0));
                continue;
            }
            check.record(s, v, est, exact_value(d), d == kUnreachable ? Rational(1) : ratio_of(est, d),
                         within(est, d, bound, 1));
        }
    }
    r.checks.push_back(check.c);
    return r;
}

AuditReport audit_oracle(const DistanceOracle& o, const DynamicGraph& g,
                         const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    AuditReport r;
    r.t = g.time();
    auto exact = exact_all_pairs(g);
    Rational bound = Rational(2 * o.k() - 1) * (Rational(1) + o.eps());
    std::size_t n = g.num_vertices();
    std::vector<std::string> sketches;
    for (Vertex v = 0; v < n; ++v) sketches.push_back(o.sketch(v));

    Tally stretch("oracle_stretch");
    Tally hops("oracle_hops");
    Tally equiv("sketch_equivalence");
    for (Vertex v = 0; v < n; ++v) {
        Rational self = o.query(v, v);
        stretch.record(v, v, self, Rational(0), Rational(1), self == Rational(0));
    }
    std::uint64_t entries = 0;
    for (Vertex v = 0; v < n; ++v) entries += sketch_entries(o.sketch_of(v));
    for (auto [u, v] : pairs) {
        int it = 0;
        Rational est = o.query(u, v, &it);
        Weight d = exact[u][v];
        stretch.record(u, v, est, exact_value(d), d == kUnreachable ? Rational(1) : ratio_of(est, d),
                       within(est, d, bound, 1));
        hops.record(u, v, Rational(it), Rational(o.k()), Rational(it), it <= o.k());
        Rational from_sketch = DistanceOracle::sketch_query(sketches[u], sketches[v]);
        equiv.record(u, v, from_sketch, est, Rational(1), from_sketch == est);
    }
    r.counters["sketch_entries"] = entries;
    r.checks.push_back(stretch.c);
    r.checks.push_back(hops.c);
    r.checks.push_back(equiv.c);
    return r;
}

std::vector<std::vector<Vertex>> reconstruct_clusters(const ClusterState& cs) {
    const auto& g = cs.host();
    const auto& h = cs.hierarchy();
    Weight depth = cs.depth();
    const Rational& eps = cs.eps_c();
    std::size_t n = g.num_vertices();
    std::vector<std::vector<Weight>> pivot(h.top());
    for (int i = 0; i < h.top(); ++i) pivot[i] = multi_source_dijkstra(g, h.level(i + 1));
    std::vector<std::vector<Vertex>> out(n);
    for (Vertex z = 0; z < n; ++z) {
        int i = h.rank(z);
        auto dz = exact_dijkstra(g, z);
        for (Vertex v = 0; v < n; ++v) {
            if (dz[v] > depth) continue;
            bool ok = true;
            if (!h.level(i + 1).empty()) {
                // d(v, A_{i+1}) as a depth-d tree sees it: capped at d+1
                Weight p = std::min(pivot[i][v], depth + 1);
                ok = static_cast<__int128>(eps.den() + eps.num()) * dz[v] < static_cast<__int128>(eps.den()) * p;
            }
            if (ok) out[z].push_back(v);
        }
    }
    return out;
}

AuditReport audit_reconstruction(const ClusterState& cs) {
    AuditReport r;
    auto expected = reconstruct_clusters(cs);
    Tally check("cluster_reconstruction");
    std::size_t n = cs.host().num_vertices();
    for (Vertex z = 0; z < n; ++z) {
        std::vector<char> want(n, 0);
        for (Vertex v : expected[z]) want[v] = 1;
        for (Vertex v = 0; v < n; ++v) {
            bool have = cs.in_cluster(z, v);
            check.record(z, v, Rational(have ? 1 : 0), Rational(want[v] ? 1 : 0), Rational(1), have == (want[v] != 0));
        }
    }
    r.checks.push_back(check.c);
    return r;
}

}  // namespace dechop
