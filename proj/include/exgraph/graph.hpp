#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace exgraph {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1 with dense bit-row adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    long edge_count() const noexcept { return edges_; }
    int words_per_row() const noexcept { return words_; }

    bool adjacent(int u, int v) const noexcept
    {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    std::span<const std::uint64_t> row(int v) const noexcept
    {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    /// Adding an existing edge or a loop is an error (throws std::invalid_argument).
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    /// Sets or clears the edge without validation beyond the range check.
    void set_edge(int u, int v, bool present);

    int degree(int v) const noexcept;
    std::vector<int> degrees() const;
    int min_degree() const noexcept;
    int max_degree() const noexcept;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
    SimpleGraph induced(std::span<const int> vertices) const;
    SimpleGraph without_vertices(std::span<const int> vertices) const;
    SimpleGraph without_vertex(int v) const;
    /// Vertex `v` becomes `perm[v]`; `perm` must be a permutation of 0..n-1.
    SimpleGraph relabeled(std::span<const int> perm) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) noexcept
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    long edges_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Standard families. Vertices are labeled part by part in declaration order.

struct StandardKind {
    enum class Kind { Cycle, Path, Complete, CompleteMultipartite, Turan, Wheel, Empty };
    Kind kind = Kind::Complete;
    /// Cycle/Path/Complete/Wheel/Empty: {n}. Turan: {n, r}. CompleteMultipartite: part sizes.
    std::vector<int> params;
};

SimpleGraph build_standard(const StandardKind& spec);

SimpleGraph complete_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_multipartite(std::span<const int> sizes);
/// Balanced complete r-partite graph; the ceil(n/r) parts come first.
SimpleGraph turan_graph(int n, int r);
std::vector<int> turan_part_sizes(int n, int r);
long turan_edge_count(int n, int r);
/// W_n = K_1 join C_{n-1}; hub is vertex 0, rim 1..n-1 in cycle order.
SimpleGraph wheel_graph(int n);

/// Throws std::invalid_argument on an empty list.
SimpleGraph disjoint_union(std::span<const SimpleGraph> graphs);
SimpleGraph join(std::span<const SimpleGraph> graphs);

int component_count(const SimpleGraph& g);

std::string to_dot(const SimpleGraph& g, const std::string& name = "G");

} // namespace exgraph
