#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dechop/oracle.hpp"
#include "dechop/verifier.hpp"
#include "support.hpp"

using namespace dechop;

TEST_CASE("unit triangle") {
    auto g = load_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    HopsetState hs(g, {});
    Rational eps(1, 2);
    DistanceOracle o(hs, 2, eps, 1);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) {
            Rational q = o.query(u, v);
            if (u == v) {
                CHECK(q == Rational(0));
            } else {
                CHECK(q >= Rational(1));
                CHECK(q <= Rational(3) * (Rational(1) + eps));
            }
        }
    CHECK(DistanceOracle::sketch_query(o.sketch(1), o.sketch(1)) == Rational(0));
    CHECK_THROWS(DistanceOracle(hs, 1, eps, 1));
}

TEST_CASE("sketch format") {
    std::mt19937_64 rng(8);
    auto g = load_graph(20, support::random_edges(20, 50, 4, rng));
    HopsetState hs(g, {});
    DistanceOracle o(hs, 2, Rational(1, 2), 4);
    for (Vertex v = 0; v < 20; ++v) {
        auto bytes = o.sketch(v);
        std::size_t entries = sketch_entries(o.sketch_of(v));
        CHECK(bytes.size() == 4 + 21 * entries);
        CHECK(static_cast<unsigned char>(bytes[0]) == (entries & 0xff));
        auto back = parse_sketch(bytes);
        CHECK(serialize_sketch(back) == bytes);
    }
    CHECK_THROWS(parse_sketch(o.sketch(0).substr(0, 10)));
    CHECK_THROWS(parse_sketch(o.sketch(0) + "x"));
}

TEST_CASE("contract through deletions") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        std::mt19937_64 rng(seed);
        std::size_t n = 40;
        auto g = load_graph(n, support::random_edges(n, 130, 6, rng));
        HopsetState hs(g, {2, Rational(1, 2), Rational(1, 2), seed});
        DistanceOracle o(hs, 2, Rational(1, 2), seed);
        auto pairs = sample_pairs(n, 200, seed);
        REQUIRE(audit_oracle(o, g, pairs).pass());
        auto edges = g.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        for (std::size_t t = 0; t < 50; ++t) {
            hs.delete_edge(edges[t].u, edges[t].v);
            o.update();
            auto r = audit_oracle(o, g, pairs);
            INFO(r.csv());
            REQUIRE(r.pass());
        }
    }
}

TEST_CASE("query hops stay within k") {
    int queries = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 rng(seed);
        std::size_t n = 30 + seed * 3;
        auto g = load_graph(n, support::random_edges(n, 3 * n, 5, rng));
        HopsetState hs(g, {2, Rational(1, 2), Rational(1, 2), seed});
        int k = 2 + seed % 2;
        DistanceOracle o(hs, k, Rational(1, 2), seed);
        for (int q = 0; q < 1000; ++q) {
            int it = -1;
            o.query(rng() % n, rng() % n, &it);
            REQUIRE(it >= 0);
            REQUIRE(it <= k);
            ++queries;
        }
    }
    CHECK(queries == 10000);
}
