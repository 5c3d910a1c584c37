#include "treechk/canonical.hpp"

#include <algorithm>
#include <set>

namespace treechk {

std::string rooted_code(const ColoredGraph& t, int root) {
  Rooted r = root_tree(t, root);
  std::vector<std::string> code(t.n());
  // children before parents
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> kids;
    kids.reserve(r.children[v].size());
    for (int w : r.children[v]) kids.push_back(std::move(code[w]));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(t.colors[v]) + ":";
    for (auto& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
  }
  return code[root];
}

std::string tree_code(const ColoredGraph& t) {
  auto centers = tree_centers(t);
  if (centers.size() == 1) return "C" + rooted_code(t, centers[0]);
  std::string a = rooted_code(t, centers[0]);
  std::string b = rooted_code(t, centers[1]);
  return "B" + std::min(a, b);
}

bool trees_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.n() != b.n()) return false;
  return tree_code(a) == tree_code(b);
}

namespace {

struct PinIso {
  const ColoredGraph& a;
  const ColoredGraph& b;
  Adjacency aa, ab;
  std::vector<std::set<int>> sa, sb;  // adjacency sets
  std::vector<int> map_ab;            // a -> b, -1 unset
  std::vector<bool> used_b;

  PinIso(const ColoredGraph& a_, const ColoredGraph& b_)
      : a(a_), b(b_), aa(adjacency(a_)), ab(adjacency(b_)) {
    sa.resize(a.n());
    sb.resize(b.n());
    for (int i = 0; i < a.n(); ++i) sa[i] = {aa[i].begin(), aa[i].end()};
    for (int i = 0; i < b.n(); ++i) sb[i] = {ab[i].begin(), ab[i].end()};
    map_ab.assign(a.n(), -1);
    used_b.assign(b.n(), false);
  }

  bool feasible(int va, int vb) {
    if (a.colors[va] != b.colors[vb]) return false;
    if (aa[va].size() != ab[vb].size()) return false;
    // every already-mapped neighbor must land on a neighbor; together with
    // equal edge counts this makes any full assignment an isomorphism
    for (int w : aa[va]) {
      int m = map_ab[w];
      if (m >= 0 && !sb[vb].count(m)) return false;
    }
    return true;
  }

  bool extend(const std::vector<int>& order, size_t k) {
    if (k == order.size()) return true;
    int va = order[k];
    for (int vb = 0; vb < b.n(); ++vb) {
      if (used_b[vb] || !feasible(va, vb)) continue;
      map_ab[va] = vb;
      used_b[vb] = true;
      if (extend(order, k + 1)) return true;
      map_ab[va] = -1;
      used_b[vb] = false;
    }
    return false;
  }
};

}  // namespace

bool graphs_isomorphic_pinned(const ColoredGraph& a, int pa,
                              const ColoredGraph& b, int pb) {
  if (a.n() != b.n() || a.edges.size() != b.edges.size()) return false;
  if (a.colors[pa] != b.colors[pb]) return false;
  PinIso iso(a, b);
  // BFS order from the pin keeps candidates constrained early
  std::vector<int> order;
  {
    auto dist = bfs_dist(iso.aa, pa);
    std::vector<std::pair<int, int>> by_dist;
    for (int i = 0; i < a.n(); ++i) {
      if (dist[i] < 0) return false;  // pinned iso only for connected inputs
      by_dist.push_back({dist[i], i});
    }
    std::sort(by_dist.begin(), by_dist.end());
    for (auto [_, v] : by_dist) order.push_back(v);
  }
  if (!iso.feasible(pa, pb)) return false;
  iso.map_ab[pa] = pb;
  iso.used_b[pb] = true;
  if (order[0] != pa) return false;
  bool ok = iso.extend(order, 1);
  if (!ok) return false;
  // verify edge-count preservation exactly (backtracker guarantees injectivity
  // and adjacency of mapped neighbors; same edge count closes the argument)
  int mapped_edges = 0;
  for (auto [u, v] : a.edges)
    if (iso.sb[iso.map_ab[u]].count(iso.map_ab[v])) ++mapped_edges;
  return mapped_edges == static_cast<int>(a.edges.size());
}

}  // namespace treechk
