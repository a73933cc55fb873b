#pragma once

#include "exgraph/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace exgraph {

/// graph6 encoding: size header, then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups offset by 63.
std::string to_graph6(const SimpleGraph& g);

/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
/// Throws ParseError carrying the offset of the first offending byte.
SimpleGraph from_graph6(std::string_view text);

/// One graph per non-empty line.
std::vector<SimpleGraph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<SimpleGraph>& graphs);

} // namespace exgraph
