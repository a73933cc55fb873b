#pragma once

#include "exgraph/graph.hpp"

#include <optional>
#include <vector>

namespace exgraph {

/// Exact chromatic number. The graph with no vertices has chromatic number 0.
int chromatic_number(const SimpleGraph& g);

/// A proper colouring with at most k colours (values 0..k-1), if one exists.
std::optional<std::vector<int>> colouring_with(const SimpleGraph& g, int k);

struct CriticalityReport {
    int chi = 0;
    /// Smallest vertex u with chi(F - u) = chi(F) - 1.
    std::optional<int> vertex_witness;
    /// Lexicographically smallest edge e with chi(F - e) = chi(F) - 1.
    std::optional<Edge> edge_witness;

    bool vertex_critical() const noexcept { return vertex_witness.has_value(); }
    bool edge_critical() const noexcept { return edge_witness.has_value(); }
};

/// Checks every single-vertex and single-edge deletion. Throws std::invalid_argument for |f| = 0.
CriticalityReport criticality(const SimpleGraph& f);

} // namespace exgraph
