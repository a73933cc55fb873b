#include "exgraph/chromatic.hpp"

#include <algorithm>
#include <stdexcept>

namespace exgraph {

namespace {

struct Colouring {
    const SimpleGraph& g;
    int n;
    int k;
    std::vector<std::vector<int>> adj;
    std::vector<int> colour;
    // blocked[v * k + c] = number of coloured neighbours of v with colour c
    std::vector<int> blocked;
    std::vector<int> saturation;

    Colouring(const SimpleGraph& graph, int colours)
        : g(graph), n(graph.order()), k(colours), colour(graph.order(), -1),
          blocked(static_cast<std::size_t>(graph.order()) * colours, 0), saturation(graph.order(), 0)
    {
        adj.reserve(n);
        for (int v = 0; v < n; ++v)
            adj.push_back(g.neighbors(v));
    }

    void paint(int v, int c)
    {
        colour[v] = c;
        for (int w : adj[v])
            if (blocked[static_cast<std::size_t>(w) * k + c]++ == 0)
                ++saturation[w];
    }

    void unpaint(int v)
    {
        const int c = colour[v];
        colour[v] = -1;
        for (int w : adj[v])
            if (--blocked[static_cast<std::size_t>(w) * k + c] == 0)
                --saturation[w];
    }

    // DSATUR branching; a new colour is only ever the next unused one.
    bool extend(int coloured, int used)
    {
        if (coloured == n)
            return true;
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            if (saturation[v] >= k)
                return false;
            if (pick < 0 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && adj[v].size() > adj[pick].size()))
                pick = v;
        }
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (blocked[static_cast<std::size_t>(pick) * k + c])
                continue;
            paint(pick, c);
            if (extend(coloured + 1, std::max(used, c + 1)))
                return true;
            unpaint(pick);
        }
        return false;
    }
};

int greedy_clique_bound(const SimpleGraph& g)
{
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    auto deg = g.degrees();
    for (int start = 0; start < n; ++start) {
        std::vector<int> clique{start};
        std::vector<int> cand = g.neighbors(start);
        while (!cand.empty()) {
            auto it = std::max_element(cand.begin(), cand.end(), [&](int a, int b) { return deg[a] < deg[b]; });
            const int v = *it;
            clique.push_back(v);
            std::vector<int> next;
            for (int w : cand)
                if (w != v && g.adjacent(v, w))
                    next.push_back(w);
            cand = std::move(next);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int dsatur_greedy_bound(const SimpleGraph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    Colouring col(g, n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (col.colour[v] < 0 &&
                (pick < 0 || col.saturation[v] > col.saturation[pick] ||
                 (col.saturation[v] == col.saturation[pick] && col.adj[v].size() > col.adj[pick].size())))
                pick = v;
        int c = 0;
        while (col.blocked[static_cast<std::size_t>(pick) * n + c])
            ++c;
        col.paint(pick, c);
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

std::optional<std::vector<int>> colouring_with(const SimpleGraph& g, int k)
{
    if (g.order() == 0)
        return std::vector<int>{};
    if (k <= 0)
        return std::nullopt;
    Colouring col(g, k);
    if (!col.extend(0, 0))
        return std::nullopt;
    return col.colour;
}

int chromatic_number(const SimpleGraph& g)
{
    if (g.order() == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    const int lower = greedy_clique_bound(g);
    const int upper = dsatur_greedy_bound(g);
    for (int k = lower; k < upper; ++k)
        if (colouring_with(g, k))
            return k;
    return upper;
}

CriticalityReport criticality(const SimpleGraph& f)
{
    if (f.order() == 0)
        throw std::invalid_argument("criticality needs a graph with at least one vertex");
    CriticalityReport report;
    report.chi = chromatic_number(f);
    for (int u = 0; u < f.order() && !report.vertex_witness; ++u)
        if (chromatic_number(f.without_vertex(u)) == report.chi - 1)
            report.vertex_witness = u;
    for (auto [u, v] : f.edges()) {
        SimpleGraph h = f;
        h.remove_edge(u, v);
        if (chromatic_number(h) == report.chi - 1) {
            report.edge_witness = Edge{u, v};
            break;
        }
    }
    return report;
}

} // namespace exgraph
