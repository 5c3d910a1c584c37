#pragma once

#include <string>

#include "treechk/canonical.hpp"
#include "treechk/graph.hpp"

namespace treechk {

// Node view at radius d around v: all vertices at distance <= d, all edges
// with an endpoint at distance <= d-1, center marked. `orig[i]` is the source
// id of local vertex i; `dist[i]` its distance from the center.
struct NodeView {
  ColoredGraph g;
  int center = 0;
  int radius = 0;
  std::vector<int> orig;
  std::vector<int> dist;
};

// Ordered edge view at radius d of edge (u,v): vertices within d-1 of u or v,
// edges with an endpoint within d-2 of {u,v}, plus the edge uv itself; the
// pair (u,v) is ordered.
struct EdgeView {
  ColoredGraph g;
  int u = 0, v = 0;
  int radius = 0;
  std::vector<int> orig;
};

NodeView node_view(const ColoredGraph& g, int v, int d);
EdgeView edge_view(const ColoredGraph& g, int u, int v, int d);

// Canonical code of a node view whose ball is a tree (always true for tree
// inputs): rooted code at the center. Equal codes <=> center-fixed isomorphism.
std::string node_view_code(const NodeView& w);

// Canonical code of an ordered edge view over a tree: deleting uv splits the
// ball into the u side and the v side; the code is the ordered pair of their
// rooted codes.
std::string edge_view_code(const EdgeView& w);

// Center/endpoint-fixed isomorphism; works for cyclic balls too.
bool node_views_isomorphic(const NodeView& a, const NodeView& b);
bool edge_views_isomorphic(const EdgeView& a, const EdgeView& b);

}  // namespace treechk
