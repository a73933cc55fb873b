#include "exgraph/graph.hpp"

#include "exgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace exgraph {

SimpleGraph::SimpleGraph(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    n_ = n;
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges)
{
    SimpleGraph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void SimpleGraph::set_edge(int u, int v, bool present)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v) == present)
        return;
    auto flip = [this](int a, int b) { rows_[static_cast<std::size_t>(a) * words_ + (b >> 6)] ^= std::uint64_t{1} << (b & 63); };
    flip(u, v);
    flip(v, u);
    edges_ += present ? 1 : -1;
}

void SimpleGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    set_edge(u, v, true);
}

void SimpleGraph::remove_edge(int u, int v)
{
    set_edge(u, v, false);
}

int SimpleGraph::degree(int v) const noexcept
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<int> SimpleGraph::degrees() const
{
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v)
        d[v] = degree(v);
    return d;
}

int SimpleGraph::min_degree() const noexcept
{
    if (n_ == 0)
        return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

int SimpleGraph::max_degree() const noexcept
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<int> SimpleGraph::neighbors(int v) const
{
    std::vector<int> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w)
        for (auto bits = r[w]; bits; bits &= bits - 1)
            out.push_back(w * 64 + std::countr_zero(bits));
    return out;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const
{
    const int k = static_cast<int>(vertices.size());
    for (int v : vertices)
        check_vertex(v);
    SimpleGraph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (adjacent(vertices[i], vertices[j]))
                h.set_edge(i, j, true);
    return h;
}

SimpleGraph SimpleGraph::without_vertices(std::span<const int> vertices) const
{
    std::vector<char> drop(n_, 0);
    for (int v : vertices) {
        check_vertex(v);
        drop[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!drop[v])
            keep.push_back(v);
    return induced(keep);
}

SimpleGraph SimpleGraph::without_vertex(int v) const
{
    const int one[] = {v};
    return without_vertices(one);
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(n_, 0);
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = 1;
    }
    SimpleGraph h(n_);
    for (auto [u, v] : edges())
        h.set_edge(perm[u], perm[v], true);
    return h;
}

SimpleGraph complete_graph(int n)
{
    if (n < 0)
        throw InvalidSpec("complete graph needs n >= 0");
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.set_edge(u, v, true);
    return g;
}

SimpleGraph empty_graph(int n)
{
    if (n < 0)
        throw InvalidSpec("empty graph needs n >= 0");
    return SimpleGraph(n);
}

SimpleGraph cycle_graph(int n)
{
    if (n < 3)
        throw InvalidSpec("cycle needs n >= 3, got " + std::to_string(n));
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v)
        g.set_edge(v, (v + 1) % n, true);
    return g;
}

SimpleGraph path_graph(int n)
{
    if (n < 1)
        throw InvalidSpec("path needs n >= 1, got " + std::to_string(n));
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.set_edge(v, v + 1, true);
    return g;
}

SimpleGraph complete_multipartite(std::span<const int> sizes)
{
    if (sizes.empty())
        throw InvalidSpec("complete multipartite graph needs at least one part");
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1)
            throw InvalidSpec("multipartite part sizes must be >= 1");
        part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    }
    const int n = static_cast<int>(part.size());
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v])
                g.set_edge(u, v, true);
    return g;
}

std::vector<int> turan_part_sizes(int n, int r)
{
    if (r < 1)
        throw InvalidSpec("Turan graph needs r >= 1, got " + std::to_string(r));
    if (n < 0)
        throw InvalidSpec("Turan graph needs n >= 0");
    std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i)
        ++sizes[i];
    return sizes;
}

long turan_edge_count(int n, int r)
{
    auto sizes = turan_part_sizes(n, r);
    long total = 0;
    long seen = 0;
    for (int s : sizes) {
        total += seen * s;
        seen += s;
    }
    return total;
}

SimpleGraph turan_graph(int n, int r)
{
    auto sizes = turan_part_sizes(n, r);
    std::erase(sizes, 0);
    if (sizes.empty())
        return SimpleGraph(0);
    return complete_multipartite(sizes);
}

SimpleGraph wheel_graph(int n)
{
    if (n < 4)
        throw InvalidSpec("wheel needs n >= 4, got " + std::to_string(n));
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) {
        g.set_edge(0, v, true);
        g.set_edge(v, v == n - 1 ? 1 : v + 1, true);
    }
    return g;
}

SimpleGraph build_standard(const StandardKind& spec)
{
    using K = StandardKind::Kind;
    auto single = [&](const char* what) {
        if (spec.params.size() != 1)
            throw InvalidSpec(std::string(what) + " takes exactly one parameter");
        return spec.params[0];
    };
    switch (spec.kind) {
    case K::Cycle: return cycle_graph(single("cycle"));
    case K::Path: return path_graph(single("path"));
    case K::Complete: return complete_graph(single("complete"));
    case K::Empty: return empty_graph(single("empty"));
    case K::Wheel: return wheel_graph(single("wheel"));
    case K::CompleteMultipartite: return complete_multipartite(spec.params);
    case K::Turan:
        if (spec.params.size() != 2)
            throw InvalidSpec("turan takes (n, r)");
        return turan_graph(spec.params[0], spec.params[1]);
    }
    throw InvalidSpec("unknown standard kind");
}

SimpleGraph disjoint_union(std::span<const SimpleGraph> graphs)
{
    if (graphs.empty())
        throw std::invalid_argument("disjoint union of an empty list");
    int n = 0;
    for (const auto& g : graphs)
        n += g.order();
    SimpleGraph out(n);
    int offset = 0;
    for (const auto& g : graphs) {
        for (auto [u, v] : g.edges())
            out.set_edge(offset + u, offset + v, true);
        offset += g.order();
    }
    return out;
}

SimpleGraph join(std::span<const SimpleGraph> graphs)
{
    if (graphs.empty())
        throw std::invalid_argument("join of an empty list");
    SimpleGraph out = disjoint_union(graphs);
    std::vector<int> block;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        block.insert(block.end(), static_cast<std::size_t>(graphs[i].order()), static_cast<int>(i));
    for (int u = 0; u < out.order(); ++u)
        for (int v = u + 1; v < out.order(); ++v)
            if (block[u] != block[v])
                out.set_edge(u, v, true);
    return out;
}

int component_count(const SimpleGraph& g)
{
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int count = g.order();
    for (auto [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

std::string to_dot(const SimpleGraph& g, const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace exgraph
