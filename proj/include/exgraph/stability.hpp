#pragma once

#include "exgraph/constructions.hpp"
#include "exgraph/family.hpp"
#include "exgraph/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace exgraph {

struct PartitionDiagnostics {
    int r = 0;
    /// part_of[v] in 0..r-1
    std::vector<int> part_of;
    std::vector<std::vector<int>> parts;
    /// sum over parts of e(G[V_i])
    long internal_edges = 0;
    double theta = 0.1;
    /// Vertices with at least theta * n neighbours inside their own part.
    std::vector<int> w_set;
};

enum class PartitionMode { Exact, LocalSearch };

struct LocalSearchOptions {
    int starts = 32;
    std::uint64_t seed = 0;
    bool parallel = true;
    int exact_cap = 14;
};

/// Exact mode: r-way subset dynamic program, n <= exact_cap (InvalidSpec above it).
/// Local search: multi-start; each start moves a vertex to the part holding the fewest of
/// its neighbours (lowest index on ties) while that strictly lowers the internal count.
/// Best start wins by (internal edges, part_of lexicographically).
PartitionDiagnostics min_internal_partition(const SimpleGraph& g, int r, PartitionMode mode, double theta = 0.1,
                                            const LocalSearchOptions& options = {});

long internal_edge_count(const SimpleGraph& g, const std::vector<int>& part_of);

/// For every v in V_i and every j: d_{V_i}(v) <= d_{V_j}(v).
bool is_move_optimal(const SimpleGraph& g, const std::vector<int>& part_of, int r);

std::vector<std::vector<int>> parts_from_assignment(const std::vector<int>& part_of, int r);

/// Union of W_i = { v in V_i : d_{V_i}(v) >= theta * n }, sorted. Throws InvalidSpec if
/// `parts` is not a partition of V(g) or theta is outside (0, 1).
std::vector<int> w_set(const SimpleGraph& g, const std::vector<std::vector<int>>& parts, double theta);

/// delta(g) > (1 - 1/r - theta) n
bool min_degree_audit(const SimpleGraph& g, int r, double theta);

/// All universal vertices (adjacent to every other vertex), sorted.
std::vector<int> dominating_clique(const SimpleGraph& g);

struct StructureAudit {
    int q = 0;
    int ell = 1;
    std::vector<int> clique;
    SimpleGraph h;
    bool join_form = false;
    bool ell_in_range = false;
    /// Unset when ell is out of range.
    std::optional<bool> h_free_of_f_ell;
    long h_edges = 0;
    std::optional<long> expected_h_edges;
    bool pass = false;
};

/// Splits off the universal vertices as K_q, sets ell = q + 1 and checks that the rest H is
/// F_ell-free with exactly ex(n - q, F_ell) edges.
StructureAudit structure_audit(const SimpleGraph& g, const ForbiddenFamily& family, const ExProvider& ex);

} // namespace exgraph
