#pragma once

#include <string>

#include "treechk/graph.hpp"

namespace treechk {

// AHU-style canonical code of a colored tree rooted at `root`:
// code(v) = '(' + char('0'+color) + sorted children codes + ')'.
// Equal codes <=> color-preserving rooted isomorphism.
std::string rooted_code(const ColoredGraph& t, int root);

// Canonical code of a free colored tree: root at the center; for bicentral
// trees take the lexicographically smaller of the two rootings, prefixed so
// central/bicentral trees never collide.
std::string tree_code(const ColoredGraph& t);

bool trees_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// Color-preserving isomorphism of arbitrary colored graphs with a pinned
// vertex on each side (backtracking; meant for small balls/graphs).
bool graphs_isomorphic_pinned(const ColoredGraph& a, int pa,
                              const ColoredGraph& b, int pb);

}  // namespace treechk
