#pragma once

// Brute-force reference implementations used only by tests. They share nothing with
// the library's search code beyond the SimpleGraph value type.

#include "exgraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace naive {

using exgraph::SimpleGraph;

inline SimpleGraph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.set_edge(u, v, true);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Every injective map of pattern vertices into host vertices.
inline bool contains(const SimpleGraph& host, const SimpleGraph& pattern)
{
    const int p = pattern.order();
    const int n = host.order();
    if (p > n)
        return false;
    std::vector<int> map(p, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == p) {
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b)
                    if (pattern.adjacent(a, b) && !host.adjacent(map[a], map[b]))
                        return false;
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            map[i] = v;
            if (go(i + 1))
                return true;
            used[v] = 0;
        }
        return false;
    };
    return go(0);
}

// Smallest k admitting one of the k^n colour assignments.
inline int chromatic(const SimpleGraph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    ok = !(g.adjacent(u, v) && c[u] == c[v]);
            if (ok)
                return k;
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (a.relabeled(p) == b)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Minimum internal edge count over all r^n part assignments.
inline long min_internal(const SimpleGraph& g, int r)
{
    const int n = g.order();
    std::vector<int> c(n, 0);
    long best = g.edge_count();
    while (true) {
        long in = 0;
        for (auto [u, v] : g.edges())
            in += c[u] == c[v];
        best = std::min(best, in);
        int i = 0;
        while (i < n && ++c[i] == r)
            c[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

} // namespace naive
