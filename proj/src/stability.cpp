#include "exgraph/stability.hpp"

#include "exgraph/errors.hpp"
#include "exgraph/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exgraph {

namespace {

void check_r(int r)
{
    if (r < 2)
        throw InvalidSpec("partitions need r >= 2, got " + std::to_string(r));
}

std::vector<int> exact_assignment(const SimpleGraph& g, int r)
{
    const int n = g.order();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const std::size_t states = std::size_t{1} << n;

    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    std::vector<int> inside(states, 0);
    for (std::size_t si = 1; si < states; ++si) {
        const auto s = static_cast<std::uint32_t>(si);
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        inside[si] = inside[rest] + std::popcount(nbr[v] & rest);
    }

    // cost[j][S]: minimum internal edges splitting S into at most j + 1 parts.
    // choice[j][S]: the part holding the lowest vertex of S.
    const int big = std::numeric_limits<int>::max() / 2;
    std::vector<std::vector<int>> cost(r, std::vector<int>(states, big));
    std::vector<std::vector<std::uint32_t>> choice(r, std::vector<std::uint32_t>(states, 0));
    for (std::size_t s = 0; s < states; ++s) {
        cost[0][s] = inside[s];
        choice[0][s] = static_cast<std::uint32_t>(s);
    }
    for (int j = 1; j < r; ++j) {
        cost[j][0] = 0;
        for (std::size_t si = 1; si < states; ++si) {
            const auto s = static_cast<std::uint32_t>(si);
            const std::uint32_t low = s & (~s + 1);
            const std::uint32_t others = s ^ low;
            int best = cost[j - 1][s];
            std::uint32_t pick = s;
            // Enumerate the part containing the lowest vertex: low plus a subset of the others.
            for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
                const std::uint32_t part = low | sub;
                if (part != s) {
                    const int c = inside[part] + cost[j - 1][s ^ part];
                    if (c < best) {
                        best = c;
                        pick = part;
                    }
                }
                if (sub == 0)
                    break;
            }
            cost[j][s] = best;
            choice[j][s] = pick;
        }
    }

    std::vector<int> part_of(n, 0);
    std::uint32_t left = full;
    int label = 0;
    for (int j = r - 1; left != 0; --j) {
        // choice == left means the remainder is best split into fewer parts.
        const std::uint32_t part = j == 0 ? left : choice[j][left];
        if (part == left && j > 0)
            continue;
        for (std::uint32_t b = part; b; b &= b - 1)
            part_of[std::countr_zero(b)] = label;
        ++label;
        left ^= part;
    }
    return part_of;
}

std::vector<int> local_search_from(const SimpleGraph& g, int r, std::vector<int> part_of)
{
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = g.neighbors(v);
    std::vector<int> into(static_cast<std::size_t>(r));
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            std::fill(into.begin(), into.end(), 0);
            for (int w : adj[v])
                ++into[part_of[w]];
            const int target = static_cast<int>(std::min_element(into.begin(), into.end()) - into.begin());
            if (into[target] < into[part_of[v]]) {
                part_of[v] = target;
                moved = true;
            }
        }
    }
    return part_of;
}

std::vector<int> local_search_assignment(const SimpleGraph& g, int r, const LocalSearchOptions& options)
{
    const int n = g.order();
    const int starts = std::max(1, options.starts);
    std::vector<std::vector<int>> results(static_cast<std::size_t>(starts));
    std::vector<long> scores(static_cast<std::size_t>(starts));
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
    for (int s = 0; s < starts; ++s) {
        std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(s) * 0x632be59bd9b4e019ull +
                            1);
        std::uniform_int_distribution<int> pick(0, r - 1);
        std::vector<int> start(n);
        for (auto& p : start)
            p = pick(rng);
        results[s] = local_search_from(g, r, std::move(start));
        scores[s] = internal_edge_count(g, results[s]);
    }
    int best = 0;
    for (int s = 1; s < starts; ++s)
        if (scores[s] < scores[best] || (scores[s] == scores[best] && results[s] < results[best]))
            best = s;
    return results[best];
}

} // namespace

long internal_edge_count(const SimpleGraph& g, const std::vector<int>& part_of)
{
    long c = 0;
    for (auto [u, v] : g.edges())
        if (part_of[u] == part_of[v])
            ++c;
    return c;
}

bool is_move_optimal(const SimpleGraph& g, const std::vector<int>& part_of, int r)
{
    std::vector<int> into(static_cast<std::size_t>(r));
    for (int v = 0; v < g.order(); ++v) {
        std::fill(into.begin(), into.end(), 0);
        for (int w : g.neighbors(v))
            ++into[part_of[w]];
        for (int j = 0; j < r; ++j)
            if (into[part_of[v]] > into[j])
                return false;
    }
    return true;
}

std::vector<std::vector<int>> parts_from_assignment(const std::vector<int>& part_of, int r)
{
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(r));
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v)
        parts.at(static_cast<std::size_t>(part_of[v])).push_back(v);
    return parts;
}

PartitionDiagnostics min_internal_partition(const SimpleGraph& g, int r, PartitionMode mode, double theta,
                                            const LocalSearchOptions& options)
{
    check_r(r);
    PartitionDiagnostics d;
    d.r = r;
    d.theta = theta;
    if (mode == PartitionMode::Exact) {
        if (g.order() > options.exact_cap || g.order() > 24)
            throw InvalidSpec("exact partition is limited to n <= " + std::to_string(std::min(options.exact_cap, 24)) +
                              " (n = " + std::to_string(g.order()) + "); use local search");
        d.part_of = g.order() == 0 ? std::vector<int>{} : exact_assignment(g, r);
    } else {
        d.part_of = local_search_assignment(g, r, options);
    }
    d.parts = parts_from_assignment(d.part_of, r);
    d.internal_edges = internal_edge_count(g, d.part_of);
    d.w_set = w_set(g, d.parts, theta);
    return d;
}

std::vector<int> w_set(const SimpleGraph& g, const std::vector<std::vector<int>>& parts, double theta)
{
    if (!(theta > 0 && theta < 1))
        throw InvalidSpec("theta must lie in (0, 1)");
    const int n = g.order();
    std::vector<int> part_of(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) {
            if (v < 0 || v >= n || part_of[v] != -1)
                throw InvalidSpec("parts do not form a partition of the vertex set");
            part_of[v] = static_cast<int>(i);
        }
    if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end())
        throw InvalidSpec("parts do not cover the vertex set");
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int same = 0;
        for (int w : g.neighbors(v))
            same += part_of[w] == part_of[v];
        if (static_cast<double>(same) >= theta * n)
            out.push_back(v);
    }
    return out;
}

bool min_degree_audit(const SimpleGraph& g, int r, double theta)
{
    if (r < 1)
        throw InvalidSpec("r must be >= 1");
    const double threshold = (1.0 - 1.0 / r - theta) * g.order();
    return static_cast<double>(g.min_degree()) > threshold;
}

std::vector<int> dominating_clique(const SimpleGraph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            out.push_back(v);
    return out;
}

StructureAudit structure_audit(const SimpleGraph& g, const ForbiddenFamily& family, const ExProvider& ex)
{
    StructureAudit a;
    a.clique = dominating_clique(g);
    a.q = static_cast<int>(a.clique.size());
    a.ell = a.q + 1;
    a.h = g.without_vertices(a.clique);
    a.h_edges = a.h.edge_count();

    std::vector<int> order = a.clique;
    for (int v = 0; v < g.order(); ++v)
        if (!std::binary_search(a.clique.begin(), a.clique.end(), v))
            order.push_back(v);
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i)
        perm[order[i]] = i;
    const SimpleGraph rebuilt = a.q == 0 ? a.h : [&] {
        const SimpleGraph parts[] = {complete_graph(a.q), a.h};
        return join(parts);
    }();
    a.join_form = rebuilt == g.relabeled(perm);

    a.ell_in_range = a.ell <= family.size();
    if (a.ell_in_range) {
        a.h_free_of_f_ell = !contains_subgraph(a.h, family.patterns[a.ell - 1]).has_value();
        a.expected_h_edges = ex(g.order() - a.q, a.ell);
    }
    a.pass = a.join_form && a.ell_in_range && a.h_free_of_f_ell.value_or(false) &&
             a.expected_h_edges == a.h_edges;
    return a;
}

} // namespace exgraph
