#pragma once

#include <array>
#include <optional>

#include "treechk/graph.hpp"
#include "treechk/view.hpp"

namespace treechk {

struct EdgeRef {
  int u = 0, v = 0;
};

struct RootedTree {
  ColoredTree t;
  int root = 0;
};

struct ColorPair {
  int c1 = 1, c2 = 1;
  auto operator<=>(const ColorPair&) const = default;
};

// One directed order-relation edge `from < to`, witnessed by a rooted tree
// with arcs u1u2, v1v2 (colored `from`) and w1w2 (colored `to`): u2 a strict
// ancestor of v1 and w1, v2 not an ancestor of w2.
struct OrderWitness {
  ColorPair from, to;
  ColoredTree tree;
  int root = 0;
  std::array<int, 6> verts{};  // u1,u2,v1,v2,w1,w2
};

// Witness that a pair is useful: a path visiting u1,u2,...,v1,v2 with both
// edges reading the pair in path order (vertex-disjoint, so length >= 4).
struct UsefulWitness {
  ColorPair pair;
  ColoredTree tree;
  std::array<int, 4> verts{};  // u1,u2,v1,v2
};

struct OrderRelation {
  std::vector<ColorPair> useful;
  std::vector<OrderWitness> edges;             // directly witnessed relations
  std::vector<std::pair<int, int>> closure;    // index pairs into `useful`
  std::vector<ColorPair> longest_chain;        // consecutive pairs directly witnessed
  bool non_strict = false;                     // some p < p
};

struct Zigzag {
  // in order along a path: deg(u1)=deg(u3)=deg(u2)-1, deg(v1)=deg(v3)=deg(v2)+1
  std::array<int, 6> verts{};  // u1,u2,u3,v1,v2,v3
};

// Replace the v-side component of t by the v2-side component of t2, joined by
// the edge u-v2. Acceptance is preserved when the ordered edge views match.
ColoredTree graft(const ColoredTree& t, EdgeRef uv, const ColoredTree& t2, EdgeRef u2v2);

// graft + vertex maps (old id -> new id, -1 when removed).
ColoredTree graft_mapped(const ColoredTree& t, EdgeRef uv, const ColoredTree& t2, EdgeRef u2v2,
                         std::vector<int>* map1, std::vector<int>* map2);

// i-fold replication of the segment between uv and xy (which must lie in this
// order on a common path and have equal ordered edge views at radius d).
// |result| = |t| + (i-1)*pump_segment_size(t, uv, xy).
ColoredTree pump(const ColoredTree& t, EdgeRef uv, EdgeRef xy, int i, int d);
long long pump_segment_size(const ColoredTree& t, EdgeRef uv, EdgeRef xy);  // |C_2|

// G^{uv}: two copies of g with both uv copies replaced by the cross edges.
ColoredGraph duplicate(const ColoredGraph& g, EdgeRef uv);

// First pair of directed edges (uv, xy) in path order u,v,...,x,y with equal
// ordered edge views at radius d; vertex-disjoint pairs are preferred, pairs
// sharing v = x are reported only when no disjoint pair exists.
std::optional<std::pair<EdgeRef, EdgeRef>> find_equal_view_edge_pair(const ColoredTree& t, int d);

// Two vertex-disjoint edges on a common path, each with equal-degree endpoints.
std::optional<std::pair<EdgeRef, EdgeRef>> find_equal_degree_pair_path(const ColoredTree& t);

std::optional<Zigzag> find_zigzag(const ColoredTree& t);

// Ordered pairs (c1,c2) repeating in path order on vertex-disjoint edges.
std::vector<ColorPair> useful_pairs(const std::vector<ColoredTree>& accepted, int c);
std::optional<UsefulWitness> useful_witness(const std::vector<ColoredTree>& accepted,
                                            ColorPair pair);

// Exhaustive witness search over every tree (n <= 60) and every rooting.
OrderRelation order_relation(const std::vector<ColoredTree>& accepted, int c);

// Collapse repeated ordered color pairs along branches; the result has no
// branch repeating a pair, hence height <= c^2. Pairs are processed in a
// fixed lexicographic order, or in increasing <_L order when one is supplied.
RootedTree depump(const RootedTree& t, const OrderRelation* order = nullptr);

// T_i of the doubling family grown from a witness of (c1,c2) < (c1,c2).
ColoredTree build_logcase_family(const OrderWitness& w, int i);

// S^(1) of the rake-like family: U^(i) pumps witness i, then S^(i) grafts
// S^(i+1) at every tracked w1w2 copy. `chain` holds the k-1 relation
// witnesses, `last` the usefulness witness of the chain's top pair.
ColoredTree build_chain_rakes(const std::vector<OrderWitness>& chain, const UsefulWitness& last,
                              int N);

}  // namespace treechk
