#pragma once

#include "exgraph/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace exgraph {

/// Ordered list F_1..F_h of forbidden patterns. Order matters for the
/// properly-ordered notion and for which pattern each prefix length refers to.
struct ForbiddenFamily {
    std::vector<SimpleGraph> patterns;
    std::vector<std::string> names;
    /// chi[i] is the chromatic number of patterns[i].
    std::vector<int> chi;

    int size() const noexcept { return static_cast<int>(patterns.size()); }
    /// t = sum of pattern orders.
    int total_order() const noexcept;
    std::string label() const;
};

/// Builds a family and fills its chromatic data. Throws std::invalid_argument when empty.
ForbiddenFamily make_family(std::vector<SimpleGraph> patterns, std::vector<std::string> names = {});

/// Token grammar: `wN` wheel of order N, `kN` complete, `cN` cycle, `pN` path,
/// `g6:<graph6>` literal. Comma separated; token order is family order.
ForbiddenFamily parse_family(std::string_view spec);
SimpleGraph parse_pattern(std::string_view token);

} // namespace exgraph
