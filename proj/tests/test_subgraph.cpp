#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exgraph/constructions.hpp"
#include "exgraph/family.hpp"
#include "exgraph/subgraph.hpp"
#include "naive.hpp"

#include <set>

using namespace exgraph;

namespace {

SimpleGraph apex_over_bipartite()
{
    const SimpleGraph parts[] = {complete_graph(1), turan_graph(8, 2)};
    return join(parts);
}

void check_disjoint(const SimpleGraph& host, const ForbiddenFamily& fam, const std::vector<Embedding>& found)
{
    REQUIRE(found.size() == fam.patterns.size());
    std::set<int> used;
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(is_embedding(host, fam.patterns[i], found[i]));
        for (int v : found[i].map)
            CHECK(used.insert(v).second);
    }
}

} // namespace

TEST_CASE("single pattern examples")
{
    const int k33[] = {3, 3};
    CHECK_FALSE(contains_subgraph(complete_multipartite(k33), complete_graph(3)));

    auto w6 = wheel_graph(6);
    auto rim = contains_subgraph(w6, cycle_graph(5));
    REQUIRE(rim);
    CHECK(is_embedding(w6, cycle_graph(5), *rim));
    const int rim_vertices[] = {1, 2, 3, 4, 5};
    auto on_rim = contains_subgraph(w6.induced(rim_vertices), cycle_graph(5));
    REQUIRE(on_rim);
    CHECK(is_embedding(w6.without_vertex(0), cycle_graph(5), *on_rim));

    CHECK_FALSE(contains_subgraph(turan_graph(9, 3), complete_graph(4)));
    CHECK_FALSE(contains_subgraph(complete_graph(3), complete_graph(4)));
    CHECK(contains_subgraph(complete_graph(3), SimpleGraph(0)));
}

TEST_CASE("disjoint family examples")
{
    auto kk = parse_family("k3,k3");
    auto two = contains_disjoint_family(complete_graph(6), kk);
    REQUIRE(two);
    check_disjoint(complete_graph(6), kk, *two);

    // Every triangle of K1 + T(8,2) uses the apex.
    auto host = apex_over_bipartite();
    int triangles = 0, through_apex = 0;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c)
                if (host.adjacent(a, b) && host.adjacent(b, c) && host.adjacent(a, c)) {
                    ++triangles;
                    through_apex += a == 0;
                }
    CHECK(triangles == 16);
    CHECK(through_apex == triangles);
    CHECK_FALSE(contains_disjoint_family(host, kk));

    // Largest-first search must still report witnesses in family order.
    auto mixed = parse_family("k3,c5");
    auto w = contains_disjoint_family(complete_graph(8), mixed);
    REQUIRE(w);
    CHECK((*w)[0].map.size() == 3);
    CHECK((*w)[1].map.size() == 5);
    check_disjoint(complete_graph(8), mixed, *w);
}

TEST_CASE("disjoint search backtracks across patterns")
{
    // Bowtie on 0..4 (triangles share vertex 2) plus a K4 on 5..8: at most two disjoint triangles.
    auto host = SimpleGraph::from_edges(9, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {5, 6}, {5, 7}, {5, 8},
                                            {6, 7}, {6, 8}, {7, 8}});
    auto kkk = parse_family("k3,k3,k3");
    CHECK_FALSE(contains_disjoint_family(host, kkk));
    auto k4k3 = parse_family("k4,k3");
    auto w = contains_disjoint_family(host, k4k3);
    REQUIRE(w);
    check_disjoint(host, k4k3, *w);

    auto bowtie = SimpleGraph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK_FALSE(contains_disjoint_family(bowtie, parse_family("k3,k3")));
}

TEST_CASE("is_free examples")
{
    for (int r = 2; r <= 4; ++r)
        for (int n = r; n <= 10; ++n)
            CHECK(is_free(turan_graph(n, r), make_family({complete_graph(r + 1)})));
    CHECK_FALSE(is_free(complete_graph(6), parse_family("k3,k3")));
    CHECK(is_free(complete_graph(4), parse_family("k3,k5")));
}

TEST_CASE("wheel construction at n = 24 avoids W7 plus W5")
{
    auto host = wheel_extremal_graph(24, 3);
    CHECK_FALSE(contains_disjoint_family(host, parse_family("w7,w5")));
    CHECK_FALSE(contains_subgraph(host, wheel_graph(7)));
}

TEST_CASE("agreement with the naive injective-map oracle")
{
    std::mt19937_64 rng(101);
    int hits = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int hn = 1 + static_cast<int>(rng() % 7);
        const int pn = 1 + static_cast<int>(rng() % 5);
        auto host = naive::random_graph(hn, 0.55, rng);
        auto pattern = naive::random_graph(pn, 0.5, rng);
        const bool expect = naive::contains(host, pattern);
        hits += expect;
        auto got = contains_subgraph(host, pattern);
        CHECK(got.has_value() == expect);
        if (got)
            CHECK(is_embedding(host, pattern, *got));
    }
    CHECK(hits > 100);
}

TEST_CASE("h = 1 agrees with the single pattern search")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto host = naive::random_graph(2 + static_cast<int>(rng() % 8), 0.5, rng);
        auto pattern = naive::random_graph(1 + static_cast<int>(rng() % 5), 0.6, rng);
        auto fam = make_family({pattern});
        CHECK(contains_disjoint_family(host, fam).has_value() == contains_subgraph(host, pattern).has_value());
    }
}

TEST_CASE("containment is monotone under adding edges")
{
    std::mt19937_64 rng(13);
    auto fam = parse_family("k3,c4");
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 5);
        auto g = naive::random_graph(n, 0.35, rng);
        if (is_free(g, fam))
            continue;
        auto h = g;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    h.set_edge(u, v, true);
        CHECK_FALSE(is_free(h, fam));
    }
}

TEST_CASE("decision does not depend on family order")
{
    std::mt19937_64 rng(19);
    const char* specs[][2] = {{"k3,c4", "c4,k3"}, {"k3,p3,c4", "c4,k3,p3"}, {"k4,k3", "k3,k4"}, {"c5,k3,k3", "k3,c5,k3"}};
    for (int trial = 0; trial < 200; ++trial) {
        auto host = naive::random_graph(6 + static_cast<int>(rng() % 5), 0.5, rng);
        const auto& pair = specs[trial % 4];
        CHECK(contains_disjoint_family(host, parse_family(pair[0])).has_value() ==
              contains_disjoint_family(host, parse_family(pair[1])).has_value());
    }
}

TEST_CASE("rooted freeness check matches a full check")
{
    std::mt19937_64 rng(29);
    const char* specs[] = {"k3", "k3,k3", "c4", "w5", "k3,p3"};
    for (int trial = 0; trial < 300; ++trial) {
        auto fam = parse_family(specs[trial % 5]);
        const int n = 3 + static_cast<int>(rng() % 6);
        auto g = naive::random_graph(n, 0.45, rng);
        if (!is_free(g.without_vertex(n - 1), fam))
            continue;
        CHECK(is_free_given_free_parent(g, fam, n - 1) == is_free(g, fam));
    }
}

TEST_CASE("large hosts use the wide kernels")
{
    for (int n : {65, 130, 300, 700}) {
        auto t = turan_graph(n, 2);
        CHECK_FALSE(contains_subgraph(t, complete_graph(3)));
        CHECK(contains_subgraph(t, cycle_graph(6)));
    }
    SimpleGraph huge(1025);
    huge.add_edge(0, 1024);
    CHECK_THROWS_AS(contains_subgraph(huge, complete_graph(2)), std::length_error);
}
