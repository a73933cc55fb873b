#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exgraph/errors.hpp"
#include "exgraph/report.hpp"

using namespace exgraph;

namespace {

template <class T, class Parse>
void check_round_trip(const T& value, Parse parse)
{
    const auto text = dump(to_json(value));
    const auto again = dump(to_json(parse(Json::parse(text))));
    CHECK(text == again);
}

} // namespace

TEST_CASE("extremal result round trip")
{
    auto r = brute_force_ex(7, parse_family("k3,k3"));
    check_round_trip(r, extremal_result_from_json);
    auto j = to_json(r);
    CHECK(j["schema"] == "exgraph.extremal-result/1");
    CHECK(j["exhaustive"] == true);
    CHECK(j["witnesses"].size() == 3);
    CHECK(j["family"] == Json::array({"k3", "k3"}));
}

TEST_CASE("threshold report round trip")
{
    auto fam = parse_family("k3");
    auto rep = threshold_scan(fam, 3, 6, [](int n) { return long{n} * n / 4 + (n == 3); });
    const auto text = dump(to_json(rep, fam));
    CHECK(dump(to_json(threshold_report_from_json(Json::parse(text)), fam)) == text);
    CHECK(rep.first_agreement == 4);
    auto table = threshold_table(rep);
    CHECK(table.find("first agreement: 4") != std::string::npos);
}

TEST_CASE("recipe round trip")
{
    auto recipe = wheel_extremal_recipe(20, 3);
    check_round_trip(recipe, recipe_from_json);
    auto j = to_json(recipe);
    CHECK(j["n0"] == 11);
    CHECK(j["component_layout"].size() == 3);
    CHECK(build_recipe(recipe_from_json(j)) == wheel_extremal_graph(20, 3));
}

TEST_CASE("partition round trip")
{
    auto d = min_internal_partition(cycle_graph(7), 2, PartitionMode::Exact, 0.2);
    check_round_trip(d, partition_from_json);
    CHECK(partition_from_json(to_json(d)).part_of == d.part_of);
}

TEST_CASE("schema mismatch is rejected")
{
    auto j = to_json(wheel_extremal_recipe(20, 3));
    j["schema"] = "exgraph.partition/1";
    CHECK_THROWS_AS(recipe_from_json(j), ParseError);
}

TEST_CASE("audit and criticality documents")
{
    auto fam = parse_family("k4");
    auto a = to_json(structure_audit(turan_graph(9, 3), fam, [](int m, int) { return turan_edge_count(m, 3); }));
    CHECK(a["pass"] == true);
    CHECK(a["q"] == 0);
    auto c = to_json(criticality(wheel_graph(7)), "w7");
    CHECK(c["vertex_critical"] == true);
    CHECK(c["edge_critical"] == false);
    CHECK(c["edge_witness"].is_null());
    auto f = to_json(wheel_extremal_value(20, 3));
    CHECK(f["value"] == 111);
    CHECK(f["argmax"] == Json::array({10, 11}));
}
