#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dechop/es_tree.hpp"
#include "support.hpp"

using namespace dechop;

namespace {

// s=0, a=1, b=2
WeightedGraph path_sab() {
    WeightedGraph g(3);
    g.set_weight(0, 1, 2);
    g.set_weight(1, 2, 1);
    return g;
}

}  // namespace

TEST_CASE("init levels") {
    auto g = path_sab();
    MonotoneEsTree t(g, {0}, 10);
    CHECK(t.level(0) == 0);
    CHECK(t.level(1) == 2);
    CHECK(t.level(2) == 3);
    CHECK(t.parent(2) == 1);
    CHECK(t.pivot(2) == 0);

    MonotoneEsTree shallow(g, {0}, 2);
    CHECK(shallow.level(2) == 3);
    CHECK(shallow.level(2) == shallow.detached());

    WeightedGraph iso(2);
    MonotoneEsTree t2(iso, {0}, 5);
    CHECK(t2.level(1) == 6);
}

TEST_CASE("insert, then delete through a stretched edge") {
    auto g = path_sab();
    MonotoneEsTree t(g, {0}, 10);
    std::vector<MonotoneEsTree::Change> ch;

    t.apply(g.set_weight(0, 2, 1), ch);
    CHECK(t.level(2) == 3);
    CHECK(t.stretched(2));
    CHECK(ch.empty());

    t.apply(g.set_weight(1, 2, std::nullopt), ch);
    CHECK(t.level(2) == 3);
    CHECK(t.parent(2) == 0);
    CHECK(ch.empty());

    t.apply(g.set_weight(0, 2, std::nullopt), ch);
    CHECK(t.level(2) == 11);
    CHECK(t.parent(2) == kNoVertex);
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].old_level == 3);
}

TEST_CASE("insert towards a detached vertex leaves it stretched") {
    WeightedGraph g(3);
    g.set_weight(0, 1, 1);
    MonotoneEsTree t(g, {0}, 10);
    CHECK(t.level(2) == 11);
    std::vector<MonotoneEsTree::Change> ch;
    t.apply(g.set_weight(0, 2, 4), ch);
    CHECK(t.level(2) == 11);
    CHECK(t.stretched(2));
    // heavy insertion: no change at all
    t.apply(g.set_weight(1, 2, 50), ch);
    CHECK(t.level(1) == 1);
    CHECK(ch.empty());
}

TEST_CASE("deleting a path edge detaches the tail") {
    auto g = path_sab();
    MonotoneEsTree t(g, {0}, 10);
    std::vector<MonotoneEsTree::Change> ch;
    t.apply(g.set_weight(1, 2, std::nullopt), ch);
    CHECK(t.level(2) == 11);
}

TEST_CASE("multi-root pivots keep the smaller id on ties") {
    // 0 - 2 - 1, both ends are roots
    WeightedGraph g(3);
    g.set_weight(0, 2, 1);
    g.set_weight(1, 2, 1);
    MonotoneEsTree t(g, {1, 0}, 5);
    CHECK(t.level(2) == 1);
    CHECK(t.pivot(2) == 0);
    std::vector<MonotoneEsTree::Change> ch;
    t.apply(g.set_weight(0, 2, 3), ch);
    CHECK(t.level(2) == 1);
    CHECK(t.pivot(2) == 1);
}

TEST_CASE("random sequences agree with the fixpoint replay") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 2 + rng() % 14;
        auto edges = support::random_edges(n, 1 + rng() % (2 * n), 6, rng);
        WeightedGraph g(n);
        for (auto& e : edges) g.set_weight(e.u, e.v, e.w);
        Weight D = 1 + rng() % 20;
        std::vector<Vertex> roots{static_cast<Vertex>(rng() % n)};
        MonotoneEsTree t(g, roots, D);
        std::vector<Weight> ref(n);
        auto d0 = support::dijkstra(g, roots);
        for (Vertex v = 0; v < n; ++v) {
            ref[v] = std::min(d0[v], D + 1);
            REQUIRE(t.level(v) == ref[v]);
        }
        bool inserted = false;
        for (int step = 0; step < 20; ++step) {
            Vertex u = rng() % n, v = rng() % n;
            if (u == v) continue;
            std::optional<Weight> w;
            auto cur = g.weight(u, v);
            int kind = rng() % 3;
            if (kind == 0) {
                w = std::nullopt;
            } else if (kind == 1) {
                w = (cur ? *cur : 0) + 1 + static_cast<Weight>(rng() % 5);
            } else {
                w = 1 + static_cast<Weight>(rng() % 6);
            }
            auto change = g.set_weight(u, v, w);
            if (change.before == change.after) continue;
            if (!change.is_increase()) inserted = true;
            std::vector<MonotoneEsTree::Change> ch;
            t.apply(change, ch);
            support::monotone_replay(g, roots, D, ref);
            auto exact = support::dijkstra(g, roots);
            for (Vertex x = 0; x < n; ++x) {
                REQUIRE(t.level(x) == ref[x]);
                if (t.level(x) <= D) {
                    CHECK(t.level(x) >= exact[x]);
                    if (!t.is_root(x)) {
                        Vertex p = t.parent(x);
                        REQUIRE(p != kNoVertex);
                        CHECK(t.level(p) + *g.weight(p, x) <= t.level(x));
                    }
                }
                if (!inserted) CHECK(t.level(x) == std::min(exact[x], D + 1));
            }
        }
    }
}
