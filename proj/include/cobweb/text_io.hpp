#pragma once

#include <iosfwd>
#include <string>

#include "cobweb/digraph.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

// Digraph text format: header `n m`, then m lines `u v` (0-based indices).
Digraph read_digraph_text(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph_text(std::ostream& out, const Digraph& g);

// One line of space-separated vertex indices, in chain order.
std::string chain_to_text(const Chain& chain);

// n lines of n characters, '1'/'0'.
std::string relation_to_text(const Relation& r);

// Layered drawing: one rank group per level, level 0 at the bottom, node
// labels `j,s`. Byte-deterministic for a fixed truncation.
void write_dot(std::ostream& out, const CobwebTruncation& t);

}  // namespace cobweb
