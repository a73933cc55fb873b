#pragma once

#include "exgraph/family.hpp"
#include "exgraph/graph.hpp"

#include <optional>
#include <vector>

namespace exgraph {

/// Injective pattern -> host vertex map under which every pattern edge is a host
/// edge (subgraph, not induced-subgraph, semantics).
struct Embedding {
    std::vector<int> map;
};

bool is_embedding(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& e);

/// Exhaustive backtracking; an empty result is a proof that `pattern` does not occur.
/// Hosts are limited to 1024 vertices (std::length_error above that).
std::optional<Embedding> contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);

/// Pairwise vertex-disjoint copies of F_1..F_h, reported in family order.
/// Backtracks across patterns (not greedy): every choice of vertex set for an
/// earlier copy is tried before concluding absence.
std::optional<std::vector<Embedding>> contains_disjoint_family(const SimpleGraph& host,
                                                               const ForbiddenFamily& family);

bool is_free(const SimpleGraph& host, const ForbiddenFamily& family);

/// Freeness of a graph obtained by adding `new_vertex` to a family-free graph:
/// only occurrences through `new_vertex` are searched for.
bool is_free_given_free_parent(const SimpleGraph& host, const ForbiddenFamily& family, int new_vertex);

} // namespace exgraph
