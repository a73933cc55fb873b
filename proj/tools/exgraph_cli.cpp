// exgraph command line: constructions, formula evaluation, oracle runs, verification.
//
// exit status: 0 ok, 1 internal error, 2 usage or invalid input, 3 oracle budget exhausted

#include "exgraph/chromatic.hpp"
#include "exgraph/constructions.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/graph6.hpp"
#include "exgraph/oracle.hpp"
#include "exgraph/report.hpp"
#include "exgraph/stability.hpp"
#include "exgraph/subgraph.hpp"

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace exgraph;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::vector<int> int_list(std::string_view text)
{
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto piece = text.substr(0, comma);
        int v = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc{} || end != piece.data() + piece.size())
            throw InvalidSpec("expected a comma-separated integer list, got '" + std::string(piece) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw InvalidSpec("empty integer list");
    return out;
}

std::string braces(const std::vector<int>& xs)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? ", " : "") << xs[i];
    out << '}';
    return out.str();
}

// kind:params, e.g. turan:9,3 wheel:7 wheel-extremal:20,3 u-member:7,3 union:9,2,turan:8,2
SimpleGraph graph_from_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InvalidSpec("graph spec '" + spec + "' needs the form kind:params");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "union") {
        // union:n,ell,<inner spec>
        const auto a = rest.find(',');
        const auto b = a == std::string::npos ? a : rest.find(',', a + 1);
        if (b == std::string::npos)
            throw InvalidSpec("union spec needs union:n,ell,<inner graph spec>");
        const auto head = int_list(rest.substr(0, b));
        return union_extremal_graph(head[0], head[1], graph_from_spec(rest.substr(b + 1)));
    }
    const auto p = int_list(rest);
    using K = StandardKind::Kind;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi)
            throw InvalidSpec("wrong number of parameters for '" + kind + "'");
    };
    if (kind == "cycle")
        return need(1, 1), build_standard({K::Cycle, p});
    if (kind == "path")
        return need(1, 1), build_standard({K::Path, p});
    if (kind == "complete")
        return need(1, 1), build_standard({K::Complete, p});
    if (kind == "empty")
        return need(1, 1), build_standard({K::Empty, p});
    if (kind == "wheel")
        return need(1, 1), build_standard({K::Wheel, p});
    if (kind == "turan")
        return need(2, 2), build_standard({K::Turan, p});
    if (kind == "multipartite")
        return build_standard({K::CompleteMultipartite, p});
    if (kind == "wheel-extremal") {
        need(2, 3);
        return wheel_extremal_graph(p[0], p[1], p.size() == 3 ? std::optional<int>(p[2]) : std::nullopt);
    }
    if (kind == "u-member")
        return need(2, 2), u_family_member(p[0], p[1]);
    throw InvalidSpec("unknown graph kind '" + kind +
                      "' (cycle, path, complete, empty, wheel, turan, multipartite, wheel-extremal, u-member, union)");
}

std::vector<SimpleGraph> read_graphs(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidSpec("cannot open '" + path + "'");
    return read_graph6_lines(in);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

void write_graphs(const std::string& path, const std::vector<SimpleGraph>& graphs)
{
    std::ostringstream s;
    write_graph6_lines(s, graphs);
    write_text(path, s.str());
}

ExProvider provider_named(const std::string& name, const ForbiddenFamily& family, const OracleBudget& budget)
{
    if (name == "closed")
        return formula_provider(family);
    if (name == "oracle")
        return oracle_provider(family, budget);
    return auto_provider(family, budget);
}

struct BudgetFlags {
    long max_candidates = OracleBudget{}.max_candidates;
    double max_seconds = 0;
    bool allow_large = false;
    bool serial = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--max-candidates", max_candidates, "Candidate graph budget (0 = unlimited)");
        cmd->add_option("--max-seconds", max_seconds, "Wall-clock budget in seconds (0 = unlimited)");
        cmd->add_flag("--allow-large", allow_large, "Permit orders above the default cap of 10");
        cmd->add_flag("--serial", serial, "Run the serial reference expansion");
    }
    OracleBudget budget(std::uint64_t seed) const
    {
        OracleBudget b;
        b.max_candidates = max_candidates;
        b.max_seconds = max_seconds;
        b.allow_above_cap = allow_large;
        b.parallel = !serial;
        b.seed = seed;
        return b;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exgraph: extremal graphs for forbidden disjoint unions"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    std::uint64_t seed = 0;
    app.add_option("--threads", threads, "Worker thread cap (0 = runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Seed for randomized components");

    // gen
    auto* gen = app.add_subcommand("gen", "Build a graph and emit it");
    std::string gen_spec, gen_g6, gen_dot, gen_json;
    gen->add_option("spec", gen_spec, "kind:params, e.g. turan:9,3 or wheel-extremal:20,3")->required();
    gen->add_option("--graph6", gen_g6, "Write graph6 to this file");
    gen->add_option("--dot", gen_dot, "Write DOT to this file");
    gen->add_option("--json", gen_json, "Write the construction recipe (wheel-extremal only)");

    // ex-formula
    auto* exf = app.add_subcommand("ex-formula", "Evaluate a closed-form extremal number");
    int exf_n = 0, exf_k = 0, exf_m = 0;
    std::string exf_ks, exf_family, exf_provider = "auto", exf_json;
    BudgetFlags exf_budget;
    exf->add_option("--n", exf_n, "Order")->required()->check(CLI::PositiveNumber);
    auto* wk = exf->add_option("--wheel-k", exf_k, "Single odd wheel W_{2k+1}");
    exf->add_option("--multi", exf_m, "With --wheel-k: m disjoint copies (fixed-m expression)")->needs(wk);
    auto* ks = exf->add_option("--ks", exf_ks, "Non-increasing wheel parameters, e.g. 4,3");
    auto* fam = exf->add_option("--family", exf_family, "Forbidden family for the union formula");
    exf->add_option("--provider", exf_provider, "ex provider for --family")
        ->check(CLI::IsMember({"auto", "closed", "oracle"}));
    exf->add_option("--json", exf_json, "Write the value and argmax as JSON");
    exf_budget.attach(exf);
    wk->excludes(ks)->excludes(fam);
    ks->excludes(fam);

    // brute-force
    auto* bf = app.add_subcommand("brute-force", "Exact ex(n, family) and its extremal graphs");
    int bf_n = 0;
    std::string bf_family, bf_json, bf_g6;
    bool bf_labeled = false;
    BudgetFlags bf_budget;
    bf->add_option("--n", bf_n, "Order")->required()->check(CLI::PositiveNumber);
    bf->add_option("--family", bf_family, "Forbidden family, e.g. k3,k3 or w7,w5")->required();
    bf->add_option("--json", bf_json, "Write the ExtremalResult as JSON");
    bf->add_option("--graph6", bf_g6, "Write the witnesses as graph6 lines");
    bf->add_flag("--labeled", bf_labeled, "Also run the labeled-space cross-check (n <= 7)");
    bf_budget.attach(bf);

    // scan
    auto* scan = app.add_subcommand("scan", "Compare the oracle with the union formula over a range of n");
    int sc_from = 1, sc_to = 0;
    std::string sc_family, sc_formula = "closed", sc_json;
    BudgetFlags sc_budget;
    scan->add_option("--family", sc_family, "Forbidden family")->required();
    scan->add_option("--from", sc_from, "First order")->required();
    scan->add_option("--to", sc_to, "Last order")->required();
    scan->add_option("--formula", sc_formula, "Provider for the union formula")
        ->check(CLI::IsMember({"closed", "auto"}));
    scan->add_option("--json", sc_json, "Write the ThresholdReport as JSON");
    sc_budget.attach(scan);

    // verify
    auto* ver = app.add_subcommand("verify", "Check graphs for freeness, maximality and the join shape");
    std::string ver_input, ver_family, ver_provider = "auto", ver_json;
    BudgetFlags ver_budget;
    ver->add_option("--input", ver_input, "graph6 file")->required();
    ver->add_option("--family", ver_family, "Forbidden family")->required();
    ver->add_option("--provider", ver_provider, "ex provider for the structure audit")
        ->check(CLI::IsMember({"auto", "closed", "oracle"}));
    ver->add_option("--json", ver_json, "Write the verdicts as JSON");
    ver_budget.attach(ver);

    // criticality
    auto* crit = app.add_subcommand("criticality", "Vertex and edge criticality of patterns");
    std::string crit_patterns, crit_json;
    crit->add_option("--pattern", crit_patterns, "Comma-separated pattern tokens")->required();
    crit->add_option("--json", crit_json, "Write the reports as JSON");

    // stability
    auto* stab = app.add_subcommand("stability", "Minimum internal-edge partition and W-set diagnostics");
    std::string st_input, st_gen, st_mode = "exact", st_json;
    int st_r = 2, st_starts = 32, st_cap = 14;
    double st_theta = 0.1;
    auto* st_in = stab->add_option("--input", st_input, "graph6 file (first graph is used)");
    auto* st_g = stab->add_option("--gen", st_gen, "Graph spec as in gen");
    st_in->excludes(st_g);
    stab->add_option("--r", st_r, "Number of parts")->check(CLI::Range(2, 64));
    stab->add_option("--theta", st_theta, "W-set threshold in (0, 1)");
    stab->add_option("--mode", st_mode, "exact or local")->check(CLI::IsMember({"exact", "local"}));
    stab->add_option("--starts", st_starts, "Local search restarts")->check(CLI::PositiveNumber);
    stab->add_option("--exact-cap", st_cap, "Largest order accepted by exact mode (at most 24)");
    stab->add_option("--json", st_json, "Write PartitionDiagnostics as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#endif

    try {
        if (*gen) {
            auto g = graph_from_spec(gen_spec);
            std::cout << g.order() << " vertices, " << g.edge_count() << " edges\n" << to_graph6(g) << '\n';
            if (!gen_g6.empty())
                write_graphs(gen_g6, {g});
            if (!gen_dot.empty())
                write_text(gen_dot, to_dot(g));
            if (!gen_json.empty()) {
                if (gen_spec.rfind("wheel-extremal:", 0) != 0)
                    throw InvalidSpec("--json recipes exist only for wheel-extremal graphs");
                auto p = int_list(gen_spec.substr(gen_spec.find(':') + 1));
                write_text(gen_json, dump(to_json(wheel_extremal_recipe(
                                         p[0], p[1], p.size() == 3 ? std::optional<int>(p[2]) : std::nullopt))));
            }
            return 0;
        }

        if (*exf) {
            FormulaValue v;
            Json extra = Json::object();
            if (exf_k > 0 && exf_m > 0) {
                v = multi_wheel_value(exf_n, exf_k, exf_m);
                std::cout << "ex(" << exf_n << ", " << exf_m << " W" << 2 * exf_k + 1 << ") formula: value " << v.value
                          << ", argmax n0 " << braces(v.argmax) << '\n';
            } else if (exf_k > 0) {
                v = wheel_extremal_value(exf_n, exf_k);
                std::cout << "ex(" << exf_n << ", W" << 2 * exf_k + 1 << ") formula: value " << v.value
                          << ", argmax n0 " << braces(v.argmax) << '\n';
            } else if (!exf_ks.empty()) {
                auto list = int_list(exf_ks);
                auto w = union_wheels_value(exf_n, list);
                v.value = w.value;
                v.argmax = w.argmax_ell;
                std::cout << "wheel union formula: value " << w.value << ", argmax ell " << braces(w.argmax_ell)
                          << ", argmax (i, n0)";
                for (auto [i, n0] : w.argmax_pairs)
                    std::cout << " (" << i << ", " << n0 << ")";
                std::cout << '\n';
                if (w.outside_formula_range)
                    std::cout << "note: parameters below 3 have no closed form for their wheel\n";
                extra["argmax_pairs"] = w.argmax_pairs;
                extra["outside_formula_range"] = w.outside_formula_range;
            } else if (!exf_family.empty()) {
                auto family = parse_family(exf_family);
                v = union_extremal_value(exf_n, family, provider_named(exf_provider, family, exf_budget.budget(seed)));
                std::cout << "union formula for " << family.label() << " at n = " << exf_n << ": value " << v.value
                          << ", argmax ell " << braces(v.argmax) << '\n';
            } else {
                throw InvalidSpec("ex-formula needs one of --wheel-k, --ks or --family");
            }
            if (!exf_json.empty()) {
                auto j = to_json(v);
                j.update(extra);
                j["n"] = exf_n;
                write_text(exf_json, dump(j));
            }
            return 0;
        }

        if (*bf) {
            auto family = parse_family(bf_family);
            int status = 0;
            ExtremalResult r;
            try {
                r = brute_force_ex(bf_n, family, bf_budget.budget(seed));
            } catch (const BudgetExceeded& e) {
                std::cerr << "exgraph: " << e.what() << " (partial result written, exhaustive = false)\n";
                r = e.partial;
                status = exit_budget;
            }
            std::cout << "ex(" << bf_n << ", " << family.label() << ") " << (r.exhaustive ? "= " : ">= ") << r.ex_value
                      << ", " << r.witnesses.size() << " witness(es), " << r.candidates_examined
                      << " candidates, exhaustive " << (r.exhaustive ? "true" : "false") << '\n';
            for (const auto& w : r.witnesses)
                std::cout << "  " << to_graph6(w) << '\n';
            if (bf_labeled) {
                auto l = labeled_space_ex(bf_n, family, !bf_budget.serial);
                std::cout << "labeled-space check: ex " << l.ex_value << ", " << l.labeled_extremal_count
                          << " labeled extremal graphs" << (l.ex_value == r.ex_value ? "" : " (MISMATCH)") << '\n';
            }
            if (!bf_json.empty())
                write_text(bf_json, dump(to_json(r)));
            if (!bf_g6.empty())
                write_graphs(bf_g6, r.witnesses);
            return status;
        }

        if (*scan) {
            auto family = parse_family(sc_family);
            auto budget = sc_budget.budget(seed);
            auto ex = provider_named(sc_formula, family, budget);
            auto rep = threshold_scan(
                family, sc_from, sc_to, [&](int n) { return union_extremal_value(n, family, ex).value; }, budget);
            std::cout << threshold_table(rep);
            if (!sc_json.empty())
                write_text(sc_json, dump(to_json(rep, family)));
            for (const auto& row : rep.rows)
                if (!row.oracle_value)
                    return exit_budget;
            return 0;
        }

        if (*ver) {
            auto family = parse_family(ver_family);
            auto ex = provider_named(ver_provider, family, ver_budget.budget(seed));
            auto graphs = read_graphs(ver_input);
            Json rows = Json::array();
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const auto& g = graphs[i];
                const bool free = is_free(g, family);
                Json row = {{"graph6", to_graph6(g)}, {"free", free}};
                std::cout << "graph " << i << " (" << g.order() << " vertices, " << g.edge_count()
                          << " edges): free " << (free ? "yes" : "no");
                if (free) {
                    const bool maximal = maximality_audit(g, family);
                    row["maximal"] = maximal;
                    std::cout << ", maximal " << (maximal ? "yes" : "no");
                    try {
                        auto a = structure_audit(g, family, ex);
                        row["structure_audit"] = to_json(a);
                        std::cout << ", structure-audit " << (a.pass ? "pass" : "fail") << " (q = " << a.q << ")";
                    } catch (const std::exception& e) {
                        // provider unavailable at this order: the verdict is unknown, not an error
                        row["structure_audit"] = nullptr;
                        std::cout << ", structure-audit unknown (" << e.what() << ")";
                    }
                } else {
                    row["maximal"] = nullptr;
                    row["structure_audit"] = nullptr;
                    std::cout << ", maximal n/a, structure-audit n/a";
                }
                std::cout << '\n';
                rows.push_back(row);
            }
            if (!ver_json.empty())
                write_text(ver_json, dump(Json{{"schema", "exgraph.verify/1"},
                                               {"family", family.names},
                                               {"graphs", rows}}));
            return 0;
        }

        if (*crit) {
            auto family = parse_family(crit_patterns);
            Json docs = Json::array();
            for (int i = 0; i < family.size(); ++i) {
                auto c = criticality(family.patterns[i]);
                std::cout << family.names[i] << ": chi " << c.chi << ", vertex-critical "
                          << (c.vertex_critical() ? "yes" : "no");
                if (c.vertex_witness)
                    std::cout << " (vertex " << *c.vertex_witness << ")";
                std::cout << ", edge-critical " << (c.edge_critical() ? "yes" : "no");
                if (c.edge_witness)
                    std::cout << " (edge " << c.edge_witness->first << "-" << c.edge_witness->second << ")";
                std::cout << '\n';
                docs.push_back(to_json(c, family.names[i]));
            }
            if (!crit_json.empty())
                write_text(crit_json, dump(docs.size() == 1 ? docs[0] : docs));
            return 0;
        }

        if (*stab) {
            SimpleGraph g;
            if (!st_gen.empty()) {
                g = graph_from_spec(st_gen);
            } else if (!st_input.empty()) {
                auto graphs = read_graphs(st_input);
                if (graphs.empty())
                    throw InvalidSpec("no graph in '" + st_input + "'");
                g = graphs.front();
            } else {
                throw InvalidSpec("stability needs --input or --gen");
            }
            LocalSearchOptions opts;
            opts.seed = seed;
            opts.starts = st_starts;
            opts.exact_cap = st_cap;
            auto d = min_internal_partition(g, st_r, st_mode == "exact" ? PartitionMode::Exact
                                                                         : PartitionMode::LocalSearch,
                                            st_theta, opts);
            std::cout << st_mode << " partition into " << st_r << " parts: internal edges " << d.internal_edges << '\n';
            for (int i = 0; i < st_r; ++i)
                std::cout << "  V" << i + 1 << " = " << braces(d.parts[i]) << '\n';
            std::cout << "move-optimal " << (is_move_optimal(g, d.part_of, st_r) ? "yes" : "no") << '\n';
            std::cout << "W (theta = " << st_theta << ") = " << braces(d.w_set) << '\n';
            std::cout << "min-degree audit " << (min_degree_audit(g, st_r, st_theta) ? "pass" : "fail") << '\n';
            std::cout << "universal vertices " << braces(dominating_clique(g)) << '\n';
            if (!st_json.empty())
                write_text(st_json, dump(to_json(d)));
            return 0;
        }
    } catch (const InvalidSpec& e) {
        std::cerr << "exgraph: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "exgraph: malformed graph6 at byte " << e.offset() << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const Infeasible& e) {
        std::cerr << "exgraph: infeasible parameters: " << e.what() << '\n';
        return exit_usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "exgraph: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "exgraph: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
