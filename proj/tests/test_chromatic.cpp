#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exgraph/chromatic.hpp"
#include "exgraph/family.hpp"
#include "naive.hpp"

using namespace exgraph;

namespace {

int chi_without_edge(const SimpleGraph& g, Edge e)
{
    auto h = g;
    h.remove_edge(e.first, e.second);
    return chromatic_number(h);
}

} // namespace

TEST_CASE("chromatic number examples")
{
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(wheel_graph(7)) == 3);
    CHECK(chromatic_number(wheel_graph(6)) == 4);
    for (int r = 1; r <= 5; ++r)
        CHECK(chromatic_number(turan_graph(3 * r + 1, r)) == r);
    CHECK(chromatic_number(SimpleGraph(0)) == 0);
    CHECK(chromatic_number(empty_graph(4)) == 1);
    CHECK(chromatic_number(complete_graph(7)) == 7);
}

TEST_CASE("colouring_with returns proper colourings")
{
    auto g = wheel_graph(9);
    CHECK_FALSE(colouring_with(g, 2));
    auto c = colouring_with(g, 3);
    REQUIRE(c);
    for (auto [u, v] : g.edges())
        CHECK((*c)[u] != (*c)[v]);
}

TEST_CASE("agreement with the naive colour-assignment oracle")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 250; ++trial) {
        auto g = naive::random_graph(static_cast<int>(rng() % 9), trial % 3 ? 0.5 : 0.8, rng);
        CHECK(chromatic_number(g) == naive::chromatic(g));
    }
}

TEST_CASE("join and union identities")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const SimpleGraph pair[] = {naive::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng),
                                    naive::random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng)};
        const int a = naive::chromatic(pair[0]);
        const int b = naive::chromatic(pair[1]);
        CHECK(chromatic_number(join(pair)) == a + b);
        CHECK(chromatic_number(disjoint_union(pair)) == std::max(a, b));
    }
}

TEST_CASE("criticality examples")
{
    auto w6 = criticality(wheel_graph(6));
    CHECK(w6.chi == 4);
    CHECK(w6.edge_critical());
    CHECK(w6.vertex_critical());

    auto w7 = criticality(wheel_graph(7));
    CHECK(w7.chi == 3);
    CHECK(w7.vertex_critical());
    CHECK(w7.vertex_witness == 0);
    CHECK_FALSE(w7.edge_critical());

    auto k4 = criticality(complete_graph(4));
    CHECK(k4.chi == 4);
    CHECK(k4.edge_critical());
    CHECK(k4.vertex_witness == 0);
    CHECK(k4.edge_witness == Edge{0, 1});

    auto k1 = criticality(complete_graph(1));
    CHECK(k1.chi == 1);
    CHECK(k1.vertex_witness == 0);
    CHECK_FALSE(k1.edge_critical());

    CHECK_THROWS_AS(criticality(SimpleGraph(0)), std::invalid_argument);
}

TEST_CASE("wheel criticality table")
{
    for (int k : {2, 3, 4}) {
        auto odd = criticality(wheel_graph(2 * k + 1));
        CHECK(odd.vertex_critical());
        CHECK_FALSE(odd.edge_critical());
        auto even = criticality(wheel_graph(2 * k));
        CHECK(even.edge_critical());
    }
}

TEST_CASE("witnesses are exact and smallest")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = naive::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
        auto rep = criticality(g);
        CHECK(rep.chi == naive::chromatic(g));
        if (rep.edge_critical())
            CHECK(rep.vertex_critical());
        std::optional<int> first_vertex;
        for (int v = 0; v < g.order() && !first_vertex; ++v)
            if (naive::chromatic(g.without_vertex(v)) == rep.chi - 1)
                first_vertex = v;
        CHECK(rep.vertex_witness == first_vertex);
        std::optional<Edge> first_edge;
        for (auto e : g.edges())
            if (chi_without_edge(g, e) == rep.chi - 1) {
                first_edge = e;
                break;
            }
        CHECK(rep.edge_witness == first_edge);
    }
}
