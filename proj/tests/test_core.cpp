#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dechop/graph.hpp"
#include "dechop/rational.hpp"
#include "dechop/scaling.hpp"

using namespace dechop;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 2).ceil() == 3);
    CHECK(Rational(-5, 2).ceil() == -2);
    CHECK(Rational(6, 3).ceil() == 2);
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("3/9") == Rational(1, 3));
    CHECK(Rational::parse("inf").is_infinite());
    CHECK(Rational(7) < Rational::infinity());
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK_THROWS(Rational(1, 0) + Rational(1));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational(INT64_MAX) * Rational(2));
}

TEST_CASE("load_graph validation") {
    auto g = load_graph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.weight(1, 0) == 1);
    CHECK(g.time() == 0);
    CHECK(load_graph(4, {}).num_edges() == 0);
    CHECK_THROWS(load_graph(2, {{0, 1, 2}, {0, 1, 3}}));
    CHECK_THROWS(load_graph(2, {{0, 1, 2}, {1, 0, 3}}));
    CHECK_THROWS(load_graph(2, {{0, 0, 1}}));
    CHECK_THROWS(load_graph(2, {{0, 1, 0}}));
    CHECK_THROWS(load_graph(2, {{0, 2, 1}}));
}

TEST_CASE("delete and increase") {
    auto g = load_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto b = g.delete_edge(2, 0);
    CHECK(b.deletions.size() == 1);
    CHECK(b.insertions.empty());
    CHECK(!g.weight(0, 2));
    CHECK(g.time() == 1);
    CHECK_THROWS(g.delete_edge(0, 2));
    auto inc = g.increase_weight(0, 1, 2);
    CHECK(g.weight(0, 1) == 3);
    REQUIRE(inc.insertions.size() == 1);
    CHECK(inc.insertions[0].w == 3);
    CHECK(g.time() == 2);
    CHECK_THROWS(g.increase_weight(0, 1, 0));
    CHECK_THROWS(g.increase_weight(0, 1, -1));
    // cap is n * W_initial = 3
    CHECK_THROWS(g.increase_weight(1, 2, 5));
    CHECK(g.time() == 2);
}

TEST_CASE("num_scales") {
    CHECK(num_scales(16, 1, 1) == 4);
    CHECK(num_scales(8, 1, 8) == 6);
    CHECK(num_scales(2, 1, 1) == 1);
    CHECK(num_scales(load_graph(4, {})) == 0);
    CHECK(num_scales(load_graph(2, {{0, 1, 1}})) == 1);
    CHECK(num_scales(5, 2, 6) == 4);  // 2^4 * 2 >= 30 > 2^3 * 2
}

TEST_CASE("eta and scaling arithmetic") {
    CHECK(eta(8, Rational(1, 2), 4) == Rational(1));
    auto e = eta(32, Rational(1, 2), 8);
    CHECK(e == Rational(2));
    CHECK(scale_weight(5, e) == 3);
    CHECK(unscale(3, e) == Rational(6));
    CHECK(unscale(3, 32, Rational(1, 2), 8) == Rational(6));
    CHECK(unscale(0, e) == Rational(0));
    CHECK(scale_weight(7, Rational(1)) == 7);
    CHECK_THROWS(eta(8, Rational(1, 2), 0));
    CHECK_THROWS(eta(0, Rational(1, 2), 4));
}

TEST_CASE("scaled view tracks the multiset") {
    auto g = load_graph(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 8}});
    EdgeMultiset ms(g);
    std::vector<std::uint64_t> touched;
    ms.put(1, HopTag{0, 0, 2}, 0, 2, Rational(9), touched);
    ms.put(2, HopTag{0, 1, 2}, 0, 2, Rational(17, 2), touched);
    ScaledView v0(ms, 0, 32, Rational(1, 2), 8);
    ScaledView v1(ms, 1, 32, Rational(1, 2), 8);
    ScaledView v2(ms, 2, 32, Rational(1, 2), 8);
    CHECK(!v0.graph().weight(0, 2));
    CHECK(v1.graph().weight(0, 2) == 5);  // ceil(9/2)
    CHECK(v2.graph().weight(0, 2) == 5);  // ceil(8.5/2)
    CHECK(v2.graph().weight(0, 1) == 3);
    CHECK(ms.hop_edges(0, 5).size() == 1);
    CHECK(ms.hop_edges(0, 5)[0].second == Rational(17, 2));

    touched.clear();
    ms.remove(1, HopTag{0, 0, 2}, touched);
    REQUIRE(touched.size() == 1);
    auto ch = v1.refresh(touched[0]);
    REQUIRE(ch);
    CHECK(ch->before == 5);
    CHECK(!ch->after);
    CHECK(!v2.refresh(touched[0]));

    g.increase_weight(0, 1, 4);
    auto ch2 = v2.refresh(pair_key(0, 1));
    REQUIRE(ch2);
    CHECK(ch2->after == 5);
}

TEST_CASE("scaled weight stays within one eta of the raw weight") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 2000; ++it) {
        std::int64_t R = 1 + rng() % 1024;
        Rational eps0(1 + rng() % 9, 10);
        Weight ell = 1 + rng() % 40;
        auto e = eta(R, eps0, ell);
        Rational w(1 + rng() % 5000, 1 + rng() % 4);
        Weight s = scale_weight(w, e);
        CHECK(s >= 1);
        Rational back = unscale(s, e);
        CHECK(back >= w);
        CHECK(back < w + e);
    }
}
