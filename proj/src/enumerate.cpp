#include "treechk/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "treechk/canonical.hpp"

namespace treechk {

void for_each_rooted_levelseq(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n <= 0) return;
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;  // path
  while (true) {
    fn(s);
    // successor: find rightmost entry > 2, copy the block starting at its
    // nearest shallower ancestor position cyclically to the end
    int p = -1;
    for (int i = n - 1; i >= 1; --i)
      if (s[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (s[i] == s[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
  }
}

ColoredTree tree_from_levelseq(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  ColoredTree t;
  t.c = 1;
  t.colors.assign(n, 1);
  for (int i = 1; i < n; ++i) {
    int parent = -1;
    for (int j = i - 1; j >= 0; --j)
      if (levels[j] == levels[i] - 1) {
        parent = j;
        break;
      }
    if (parent < 0) throw InputError("malformed level sequence");
    t.edges.push_back({parent, i});
  }
  return t;
}

void for_each_free_tree(int n, const std::function<void(const ColoredTree&)>& fn) {
  std::set<std::string> seen;
  for_each_rooted_levelseq(n, [&](const std::vector<int>& s) {
    ColoredTree t = tree_from_levelseq(s);
    if (seen.insert(tree_code(t)).second) fn(t);
  });
}

long long default_enum_cap() {
  static long long cap = [] {
    if (const char* e = std::getenv("TREECHK_CAP")) {
      long long v = std::atoll(e);
      if (v > 0) return v;
    }
    return 10'000'000LL;
  }();
  return cap;
}

namespace {

struct ColorDfs {
  const ColoredTree& shape;
  int c;
  const std::function<void(const ColoredTree&)>& fn;
  const ColoringPruner* pruner;
  long long cap;
  long long count = 0;
  bool truncated = false;
  std::vector<int> assigned;
  std::set<std::string> seen;
  ColoredTree work;

  ColorDfs(const ColoredTree& shape_, int c_,
           const std::function<void(const ColoredTree&)>& fn_,
           const ColoringPruner* pruner_, long long cap_)
      : shape(shape_), c(c_), fn(fn_), pruner(pruner_), cap(cap_) {
    assigned.assign(shape.n(), 0);
    work = shape;
    work.c = c;
  }

  void go(int i) {
    if (truncated) return;
    if (i == shape.n()) {
      work.colors = assigned;
      std::string code = tree_code(work);
      if (!seen.insert(std::move(code)).second) return;
      if (count >= cap) {
        truncated = true;
        return;
      }
      ++count;
      if (fn) fn(work);
      return;
    }
    for (int col = 1; col <= c && !truncated; ++col) {
      assigned[i] = col;
      if (!pruner || (*pruner)(shape, assigned, i)) go(i + 1);
    }
    assigned[i] = 0;
  }
};

}  // namespace

EnumResult enumerate_colored_trees(int n, int c,
                                   const std::function<void(const ColoredTree&)>& fn,
                                   const EnumOptions& opts) {
  if (n < 1 || c < 1) throw InputError("enumerate_colored_trees: n and c must be >= 1");
  long long cap = opts.cap < 0 ? default_enum_cap() : opts.cap;
  EnumResult res;
  std::set<std::string> shapes_seen;
  for_each_rooted_levelseq(n, [&](const std::vector<int>& s) {
    if (res.truncated) return;
    ColoredTree t = tree_from_levelseq(s);
    if (!shapes_seen.insert(tree_code(t)).second) return;
    ColorDfs dfs(t, c, fn, opts.pruner, cap - res.count);
    dfs.go(0);
    res.count += dfs.count;
    if (dfs.truncated) res.truncated = true;
  });
  return res;
}

long long count_height_trees(int d, int k, bool at_most) {
  if (k < 1 || d < 0) return 0;
  static std::map<std::pair<int, int>, std::vector<long long>> memo;  // (k) -> by height
  auto key = std::pair{k, 0};
  auto it = memo.find(key);
  if (it == memo.end()) {
    std::vector<long long> by_height;
    for_each_rooted_levelseq(k, [&](const std::vector<int>& s) {
      int h = *std::max_element(s.begin(), s.end()) - 1;
      if (h >= static_cast<int>(by_height.size())) by_height.resize(h + 1, 0);
      ++by_height[h];
    });
    it = memo.emplace(key, std::move(by_height)).first;
  }
  const auto& bh = it->second;
  if (!at_most) return d < static_cast<int>(bh.size()) ? bh[d] : 0;
  long long total = 0;
  for (int h = 0; h <= d && h < static_cast<int>(bh.size()); ++h) total += bh[h];
  return total;
}

std::vector<ColoredTree> rooted_trees_by_height(int k, int maxh) {
  std::vector<std::pair<std::string, ColoredTree>> found;
  for_each_rooted_levelseq(k, [&](const std::vector<int>& s) {
    int h = *std::max_element(s.begin(), s.end()) - 1;
    if (h > maxh) return;
    ColoredTree t = tree_from_levelseq(s);
    found.push_back({rooted_code(t, 0), t});
  });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ColoredTree> out;
  out.reserve(found.size());
  for (auto& [_, t] : found) out.push_back(std::move(t));
  return out;
}

}  // namespace treechk
