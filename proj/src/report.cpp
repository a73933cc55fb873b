#include "exgraph/report.hpp"

#include "exgraph/errors.hpp"
#include "exgraph/graph6.hpp"

#include <iomanip>
#include <sstream>

namespace exgraph {

namespace {

void expect_schema(const Json& j, const char* schema)
{
    if (!j.contains("schema") || j.at("schema") != schema)
        throw ParseError(std::string("expected schema ") + schema, 0);
}

Json family_json(const ForbiddenFamily& f)
{
    return f.names;
}

ForbiddenFamily family_from(const Json& j)
{
    std::string spec;
    for (const auto& name : j) {
        if (!spec.empty())
            spec += ',';
        spec += name.get<std::string>();
    }
    return parse_family(spec);
}

} // namespace

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json to_json(const ExtremalResult& r)
{
    Json w = Json::array();
    for (const auto& g : r.witnesses)
        w.push_back(to_graph6(g));
    return Json{{"schema", "exgraph.extremal-result/1"},
                {"n", r.n},
                {"family", family_json(r.family)},
                {"ex_value", r.ex_value},
                {"witnesses", w},
                {"exhaustive", r.exhaustive},
                {"candidates_examined", r.candidates_examined}};
}

ExtremalResult extremal_result_from_json(const Json& j)
{
    expect_schema(j, "exgraph.extremal-result/1");
    ExtremalResult r;
    r.n = j.at("n").get<int>();
    r.family = family_from(j.at("family"));
    r.ex_value = j.at("ex_value").get<long>();
    for (const auto& w : j.at("witnesses"))
        r.witnesses.push_back(from_graph6(w.get<std::string>()));
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.candidates_examined = j.at("candidates_examined").get<long>();
    return r;
}

Json to_json(const ThresholdReport& r, const ForbiddenFamily& family)
{
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"oracle_value", row.oracle_value ? Json(*row.oracle_value) : Json(nullptr)},
                        {"formula_value", row.formula_value},
                        {"match", row.match},
                        {"witness_count", row.witness_count},
                        {"exhaustive", row.exhaustive}});
    return Json{{"schema", "exgraph.threshold-report/1"},
                {"family", family_json(family)},
                {"rows", rows},
                {"first_agreement", r.first_agreement ? Json(*r.first_agreement) : Json(nullptr)}};
}

ThresholdReport threshold_report_from_json(const Json& j)
{
    expect_schema(j, "exgraph.threshold-report/1");
    ThresholdReport r;
    for (const auto& row : j.at("rows")) {
        ThresholdRow t;
        t.n = row.at("n").get<int>();
        if (!row.at("oracle_value").is_null())
            t.oracle_value = row.at("oracle_value").get<long>();
        t.formula_value = row.at("formula_value").get<long>();
        t.match = row.at("match").get<bool>();
        t.witness_count = row.at("witness_count").get<int>();
        t.exhaustive = row.at("exhaustive").get<bool>();
        r.rows.push_back(t);
    }
    if (!j.at("first_agreement").is_null())
        r.first_agreement = j.at("first_agreement").get<int>();
    return r;
}

Json to_json(const ConstructionRecipe& r)
{
    Json layout = Json::array();
    for (const auto& c : r.components)
        layout.push_back({{"order", c.order}, {"nearly_regular", c.nearly_regular}});
    return Json{{"schema", "exgraph.construction-recipe/1"},
                {"n", r.n},
                {"k", r.k},
                {"ell", r.ell},
                {"n0", r.n0},
                {"component_layout", layout}};
}

ConstructionRecipe recipe_from_json(const Json& j)
{
    expect_schema(j, "exgraph.construction-recipe/1");
    ConstructionRecipe r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.ell = j.at("ell").get<int>();
    r.n0 = j.at("n0").get<int>();
    for (const auto& c : j.at("component_layout"))
        r.components.push_back({c.at("order").get<int>(), c.at("nearly_regular").get<bool>()});
    return r;
}

Json to_json(const PartitionDiagnostics& d)
{
    return Json{{"schema", "exgraph.partition/1"},
                {"r", d.r},
                {"parts", d.parts},
                {"internal_edges", d.internal_edges},
                {"theta", d.theta},
                {"w_set", d.w_set}};
}

PartitionDiagnostics partition_from_json(const Json& j)
{
    expect_schema(j, "exgraph.partition/1");
    PartitionDiagnostics d;
    d.r = j.at("r").get<int>();
    d.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    d.internal_edges = j.at("internal_edges").get<long>();
    d.theta = j.at("theta").get<double>();
    d.w_set = j.at("w_set").get<std::vector<int>>();
    int n = 0;
    for (const auto& p : d.parts)
        n += static_cast<int>(p.size());
    d.part_of.assign(n, 0);
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        for (int v : d.parts[i])
            d.part_of.at(v) = static_cast<int>(i);
    return d;
}

Json to_json(const StructureAudit& a)
{
    return Json{{"schema", "exgraph.structure-audit/1"},
                {"q", a.q},
                {"ell", a.ell},
                {"clique", a.clique},
                {"h", to_graph6(a.h)},
                {"join_form", a.join_form},
                {"ell_in_range", a.ell_in_range},
                {"h_free_of_f_ell", a.h_free_of_f_ell ? Json(*a.h_free_of_f_ell) : Json(nullptr)},
                {"h_edges", a.h_edges},
                {"expected_h_edges", a.expected_h_edges ? Json(*a.expected_h_edges) : Json(nullptr)},
                {"pass", a.pass}};
}

Json to_json(const CriticalityReport& c, const std::string& name)
{
    return Json{{"schema", "exgraph.criticality/1"},
                {"pattern", name},
                {"chi", c.chi},
                {"vertex_critical", c.vertex_critical()},
                {"edge_critical", c.edge_critical()},
                {"vertex_witness", c.vertex_witness ? Json(*c.vertex_witness) : Json(nullptr)},
                {"edge_witness", c.edge_witness ? Json::array({c.edge_witness->first, c.edge_witness->second})
                                                : Json(nullptr)}};
}

Json to_json(const FormulaValue& v)
{
    return Json{{"value", v.value}, {"argmax", v.argmax}};
}

std::string threshold_table(const ThresholdReport& r)
{
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(10) << "oracle" << std::setw(10) << "formula" << std::setw(8) << "match"
        << std::setw(11) << "witnesses" << '\n';
    for (const auto& row : r.rows) {
        out << std::setw(4) << row.n << std::setw(10) << (row.oracle_value ? std::to_string(*row.oracle_value) : "?")
            << std::setw(10) << row.formula_value << std::setw(8) << (row.match ? "yes" : "no") << std::setw(11)
            << row.witness_count << '\n';
    }
    out << "first agreement: " << (r.first_agreement ? std::to_string(*r.first_agreement) : "none") << '\n';
    return out.str();
}

} // namespace exgraph
