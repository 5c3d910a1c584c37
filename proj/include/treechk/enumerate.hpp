#pragma once

#include <cstdint>
#include <functional>

#include "treechk/graph.hpp"

namespace treechk {

// Rooted unlabeled trees on n vertices as canonical level sequences
// (root level 1, children after parents, lexicographically maximal form),
// generated by the classic successor rule. Callback gets the sequence.
void for_each_rooted_levelseq(int n, const std::function<void(const std::vector<int>&)>& fn);

// Tree for a level sequence; vertex i's parent is the nearest j < i with
// level[j] == level[i]-1. Colors all 1.
ColoredTree tree_from_levelseq(const std::vector<int>& levels);

// Free (unrooted) unlabeled trees: rooted enumeration + canonical-code dedupe.
void for_each_free_tree(int n, const std::function<void(const ColoredTree&)>& fn);

// Partial-coloring pruner: called with the tree, the colors assigned so far
// (0 = unassigned) and the vertex that was just fixed; returning false cuts
// the whole branch of colorings. Must be sound: a pruned branch may not
// contain any tree the consumer wants to see.
using ColoringPruner =
    std::function<bool(const ColoredTree&, const std::vector<int>&, int just_fixed)>;

struct EnumOptions {
  long long cap = -1;  // max emitted trees; -1 = default (TREECHK_CAP env or 1e7)
  const ColoringPruner* pruner = nullptr;
};

struct EnumResult {
  long long count = 0;     // emitted (= total up to iso if not truncated)
  bool truncated = false;  // hit the cap
};

// All colored trees on n vertices with colors in 1..c, one per isomorphism
// class, deterministic order. Callback may be empty when only the count is
// wanted. Honors opts.cap and the TREECHK_CAP environment variable.
EnumResult enumerate_colored_trees(int n, int c,
                                   const std::function<void(const ColoredTree&)>& fn,
                                   const EnumOptions& opts = {});

long long default_enum_cap();

// Rooted unlabeled trees on k vertices with height exactly d (or <= d).
long long count_height_trees(int d, int k, bool at_most = false);

// All rooted unlabeled trees on k vertices with height <= maxh, as trees
// rooted at vertex 0, ordered by canonical rooted code. Used by encodings.
std::vector<ColoredTree> rooted_trees_by_height(int k, int maxh);

}  // namespace treechk
