#pragma once

#include "exgraph/graph.hpp"

#include <string>
#include <vector>

namespace exgraph {

struct CanonicalLabeling {
    /// labeling[v] is the canonical position of vertex v.
    std::vector<int> labeling;
    /// graph6 text of the canonically relabeled graph; equal iff isomorphic.
    std::string certificate;
};

/// Exact canonical labeling by equitable refinement and individualization,
/// pruned with automorphisms discovered during the search.
CanonicalLabeling canonical_labeling(const SimpleGraph& g);

std::string canonical_form(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

} // namespace exgraph
