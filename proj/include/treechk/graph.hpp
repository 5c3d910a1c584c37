#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treechk {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected graph with vertex colors in 1..c. Vertices are 0..n-1.
// Trees are just acyclic connected ColoredGraphs; ops that require a tree
// say so and call validate_tree.
struct ColoredGraph {
  int c = 1;
  std::vector<int> colors;
  std::vector<std::pair<int, int>> edges;

  int n() const { return static_cast<int>(colors.size()); }
};

using ColoredTree = ColoredGraph;

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const ColoredGraph& g);

// Structural sanity: endpoint range, no self loops, no duplicate edges,
// colors within 1..c. Throws InputError.
void validate_graph(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);
bool is_tree(const ColoredGraph& g);
void validate_tree(const ColoredGraph& g);  // throws InputError if not a tree

std::vector<int> degrees(const ColoredGraph& g);

// BFS distances from src; -1 for unreachable.
std::vector<int> bfs_dist(const Adjacency& adj, int src);

// Diameter in edges. Trees use the double-sweep; general connected graphs fall
// back to all-sources BFS. Throws on disconnected input.
int diameter(const ColoredGraph& g);

// Unique path between a and b in a tree (inclusive).
std::vector<int> tree_path(const ColoredGraph& t, int a, int b);

// Tree centers via iterated leaf removal (1 or 2 vertices).
std::vector<int> tree_centers(const ColoredGraph& t);

// Eccentricity of every vertex (tree or connected graph).
std::vector<int> eccentricities(const ColoredGraph& g);

// Rooted bookkeeping for tree surgery.
struct Rooted {
  const ColoredGraph* t = nullptr;
  int root = -1;
  std::vector<int> parent;          // -1 at root
  std::vector<std::vector<int>> children;
  std::vector<int> depth;
  std::vector<int> order;           // preorder
};

Rooted root_tree(const ColoredGraph& t, int root);

// Height of the subtree below v (0 for a leaf of the rooted view).
int subtree_height(const Rooted& r, int v);

// Vertices of the subtree rooted at v (preorder).
std::vector<int> subtree_vertices(const Rooted& r, int v);

// Renumber vertices by perm (perm[old] = new).
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm);

// Keep only the vertices in `keep` (in the given order); edges with both
// endpoints kept survive.
ColoredGraph induced(const ColoredGraph& g, const std::vector<int>& keep);

// Disjoint union; second block's vertices shifted by g1.n().
ColoredGraph disjoint_union(const ColoredGraph& g1, const ColoredGraph& g2);

ColoredGraph make_path(int n, int color = 1);
ColoredGraph make_star(int leaves, int center_color = 1, int leaf_color = 1);
ColoredGraph make_cycle(int n, int color = 1);

// Complete binary tree of height h (n = 2^{h+1}-1, diameter 2h).
ColoredGraph make_complete_binary(int h, int color = 1);

// Cubic tree: two adjacent centers, each carrying a complete binary pendant of
// depth h-1 on both free slots; every internal vertex has degree exactly 3.
ColoredGraph make_cubic(int h, int color = 1);

}  // namespace treechk
