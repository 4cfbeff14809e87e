#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dechop/hopset.hpp"
#include "dechop/verifier.hpp"
#include "support.hpp"

using namespace dechop;

namespace {

DynamicGraph random_graph(std::size_t n, std::size_t m, Weight wmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return load_graph(n, support::random_edges(n, m, wmax, rng));
}

}  // namespace

TEST_CASE("parameters and manifest") {
    auto g = random_graph(64, 200, 8, 1);
    HopsetState hs(g, {2, Rational(1, 2), Rational(1, 2), 7});
    int S = num_scales(g);
    CHECK(hs.num_scales() == S);
    CHECK(hs.eps_prime() == Rational(1, 2) / Rational(6 * S));
    CHECK(hs.delta() == hs.eps_prime() / Rational(40));
    CHECK(hs.hop_cap() == 63);
    CHECK(hs.depth() == (Rational(2 * 127) / hs.eps_prime()).ceil());
    CHECK(hs.beta_formula() == doctest::Approx(std::pow(3.0 / hs.delta().to_double(), 5)));
    auto m = hs.manifest();
    for (const char* key : {"n=64\n", "m=200\n", "k=2\n", "rho=1/2\n", "eps=1/2\n", "hop_cap=63\n", "seed=7\n"})
        CHECK(m.find(key) != std::string::npos);
    for (const char* key : {"eps_prime=", "beta_formula=", "\nd=", "num_scales="})
        CHECK(m.find(key) != std::string::npos);

    CHECK_THROWS(HopsetState(g, {0, Rational(1, 2), Rational(1, 2), 1}));
    CHECK_THROWS(HopsetState(g, {2, Rational(1), Rational(1, 2), 1}));
    CHECK_THROWS(HopsetState(g, {2, Rational(1, 2), Rational(1), 1}));
    CHECK_THROWS(HopsetState(g, {2, Rational(1, 2), Rational(0), 1}));
}

TEST_CASE("small scales stay empty") {
    auto g = random_graph(40, 120, 4, 3);
    HopsetState hs(g, {2, Rational(1, 2), Rational(1, 2), 3});
    for (int j = 0; j <= hs.num_scales(); ++j) {
        bool empty = hs.edges().hop_edges(j, j).empty();
        if ((Weight{1} << j) <= hs.hop_cap()) CHECK(empty);
    }
    auto empty = load_graph(5, {});
    HopsetState he(empty, {});
    CHECK(he.hopset_edges().empty());
    CHECK(he.num_scales() == 0);
}

TEST_CASE("bounded hop distance") {
    auto g = load_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    AuditGraph ag(g, {});
    CHECK(bounded_hop_distance(ag, 2, 0, 3).is_infinite());
    CHECK(bounded_hop_distance(ag, 3, 0, 3) == Rational(3));
    CHECK(bounded_hop_distance(ag, 1, 0, 1) == Rational(1));
    AuditGraph with_hop(g, {{0, 3, Rational(7, 2)}});
    CHECK(bounded_hop_distance(with_hop, 1, 0, 3) == Rational(7, 2));
    CHECK(bounded_hop_distance(with_hop, 3, 0, 3) == Rational(3));

    std::mt19937_64 rng(4);
    for (int it = 0; it < 30; ++it) {
        auto rg = random_graph(20, 40, 9, rng());
        std::vector<RationalEdge> extra;
        for (int e = 0; e < 10; ++e) {
            Vertex u = rng() % 20, v = rng() % 20;
            if (u != v) extra.push_back({u, v, Rational(1 + rng() % 40, 1 + rng() % 3)});
        }
        AuditGraph a(rg, extra);
        Vertex s = rng() % 20;
        auto prev = a.bounded_hop(s, 1);
        for (Weight h = 2; h <= 20; ++h) {
            auto cur = a.bounded_hop(s, h);
            for (Vertex v = 0; v < 20; ++v) CHECK(cur[v] <= prev[v]);
            prev = cur;
        }
        auto exact = exact_dijkstra(rg, s);
        AuditGraph plain(rg, {});
        auto full = plain.bounded_hop(s, 19);
        for (Vertex v = 0; v < 20; ++v)
            CHECK(full[v] == (exact[v] == kUnreachable ? Rational::infinity() : Rational(exact[v])));
    }
}

TEST_CASE("stretch holds through a deletion sequence") {
    for (std::uint64_t seed : {11u, 12u}) {
        auto g = random_graph(48, 160, 6, seed);
        HopsetState hs(g, {2, Rational(1, 2), Rational(1, 2), seed});
        auto pairs = sample_pairs(48, 200, seed);
        auto r0 = audit_hopset(hs, pairs);
        REQUIRE(r0.pass());
        CHECK(audit_scales(hs, pairs).pass());
        auto edges = g.edges();
        std::mt19937_64 rng(seed);
        std::shuffle(edges.begin(), edges.end(), rng);
        for (int t = 0; t < 50; ++t) {
            if (t % 5 == 4)
                hs.increase_weight(edges[t].u, edges[t].v, 3);
            else
                hs.delete_edge(edges[t].u, edges[t].v);
            auto r = audit_hopset(hs, pairs);
            INFO(r.csv());
            REQUIRE(r.pass());
            REQUIRE(audit_scales(hs, pairs).pass());
        }
    }
}

TEST_CASE("an underweight hop edge is caught with a witness") {
    auto g = random_graph(30, 80, 5, 21);
    HopsetState hs(g, {});
    auto pairs = sample_pairs(30, 200, 1);
    REQUIRE(audit_hopset(hs, pairs).pass());
    auto exact = exact_dijkstra(g, 0);
    Vertex far = 1;
    for (Vertex v = 1; v < 30; ++v)
        if (exact[v] != kUnreachable && exact[v] > exact[far]) far = v;
    hs.inject_hop_edge(0, far, Rational(1, 2));
    auto r = audit_hopset(hs, pairs);
    CHECK(!r.pass());
    const auto* f = r.first_failure();
    REQUIRE(f);
    CHECK(f->estimate < f->exact);
    CHECK(r.csv().find(",0,") != std::string::npos);
}
