#include "treechk/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treechk {
namespace {

bool has_edge(const ColoredGraph& g, int u, int v) {
  for (auto& [a, b] : g.edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

// Component of v in t - uv, as a sorted vertex list starting at v.
std::vector<int> side_of(const ColoredTree& t, int u, int v) {
  Adjacency adj = adjacency(t);
  std::vector<char> seen(t.n(), 0);
  seen[v] = 1;
  seen[u] = 1;  // blocked, removed below
  std::vector<int> out{v}, q{v};
  for (size_t i = 0; i < q.size(); ++i)
    for (int w : adj[q[i]])
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Path-order test: the tree path from e.u to f.v starts with e and ends
// with f (so the four vertices read u,v,...,x,y along it).
bool in_path_order(const ColoredTree& t, EdgeRef e, EdgeRef f) {
  if (e.u == f.v) return false;
  std::vector<int> p = tree_path(t, e.u, f.v);
  return p.size() >= 3 && p[1] == e.v && p[p.size() - 2] == f.u;
}

std::vector<EdgeRef> directed_edges(const ColoredGraph& g) {
  std::vector<EdgeRef> out;
  out.reserve(2 * g.edges.size());
  for (auto& [a, b] : g.edges) {
    out.push_back({a, b});
    out.push_back({b, a});
  }
  std::sort(out.begin(), out.end(),
            [](EdgeRef a, EdgeRef b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return out;
}

struct EulerTour {
  std::vector<int> tin, tout;
  // a is an ancestor of b (reflexively).
  bool anc(int a, int b) const { return tin[a] <= tin[b] && tout[b] <= tout[a]; }
  bool strict_anc(int a, int b) const { return a != b && anc(a, b); }
};

EulerTour euler(const Rooted& r) {
  int n = r.t->n();
  EulerTour e;
  e.tin.assign(n, 0);
  e.tout.assign(n, 0);
  int clock = 0;
  std::vector<std::pair<int, size_t>> stack{{r.root, 0}};
  e.tin[r.root] = clock++;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < r.children[v].size()) {
      int w = r.children[v][i++];
      e.tin[w] = clock++;
      stack.push_back({w, 0});
    } else {
      e.tout[v] = clock++;
      stack.pop_back();
    }
  }
  return e;
}

}  // namespace

ColoredTree graft_mapped(const ColoredTree& t, EdgeRef uv, const ColoredTree& t2, EdgeRef u2v2,
                         std::vector<int>* map1, std::vector<int>* map2) {
  if (t.c != t2.c) throw InputError("graft: palettes differ");
  if (!has_edge(t, uv.u, uv.v)) throw InputError("graft: uv is not an edge of t");
  if (!has_edge(t2, u2v2.u, u2v2.v)) throw InputError("graft: u2v2 is not an edge of t2");
  std::vector<int> drop = side_of(t, uv.u, uv.v);
  std::vector<char> dropped(t.n(), 0);
  for (int v : drop) dropped[v] = 1;

  std::vector<int> m1(t.n(), -1), m2(t2.n(), -1);
  ColoredTree out;
  out.c = t.c;
  for (int v = 0; v < t.n(); ++v)
    if (!dropped[v]) {
      m1[v] = out.n();
      out.colors.push_back(t.colors[v]);
    }
  std::vector<int> attach = side_of(t2, u2v2.u, u2v2.v);
  for (int v : attach) {
    m2[v] = out.n();
    out.colors.push_back(t2.colors[v]);
  }
  for (auto& [a, b] : t.edges)
    if (m1[a] >= 0 && m1[b] >= 0) out.edges.push_back({m1[a], m1[b]});
  for (auto& [a, b] : t2.edges)
    if (m2[a] >= 0 && m2[b] >= 0) out.edges.push_back({m2[a], m2[b]});
  out.edges.push_back({m1[uv.u], m2[u2v2.v]});
  if (map1) *map1 = std::move(m1);
  if (map2) *map2 = std::move(m2);
  return out;
}

ColoredTree graft(const ColoredTree& t, EdgeRef uv, const ColoredTree& t2, EdgeRef u2v2) {
  return graft_mapped(t, uv, t2, u2v2, nullptr, nullptr);
}

long long pump_segment_size(const ColoredTree& t, EdgeRef uv, EdgeRef xy) {
  if (!in_path_order(t, uv, xy)) throw InputError("pump: edges not in order on a path");
  return static_cast<long long>(side_of(t, uv.u, uv.v).size()) -
         static_cast<long long>(side_of(t, xy.u, xy.v).size());
}

ColoredTree pump(const ColoredTree& t, EdgeRef uv, EdgeRef xy, int i, int d) {
  if (i < 1) throw InputError("pump: i must be >= 1");
  if (d < 1) throw InputError("pump: d must be >= 1");
  if (!in_path_order(t, uv, xy)) throw InputError("pump: edges not in order on a path");
  if (edge_view_code(edge_view(t, uv.u, uv.v, d)) != edge_view_code(edge_view(t, xy.u, xy.v, d)))
    throw InputError("pump: edge views differ");
  ColoredTree cur = t;
  EdgeRef cxy = xy;
  std::vector<int> m1, m2;
  for (int j = 2; j <= i; ++j) {
    cur = graft_mapped(cur, cxy, t, uv, &m1, &m2);
    cxy = {m2[xy.u], m2[xy.v]};
  }
  return cur;
}

ColoredGraph duplicate(const ColoredGraph& g, EdgeRef uv) {
  if (!has_edge(g, uv.u, uv.v)) throw InputError("duplicate: uv is not an edge");
  int n = g.n();
  ColoredGraph out;
  out.c = g.c;
  out.colors = g.colors;
  out.colors.insert(out.colors.end(), g.colors.begin(), g.colors.end());
  for (auto& [a, b] : g.edges) {
    if ((a == uv.u && b == uv.v) || (a == uv.v && b == uv.u)) continue;
    out.edges.push_back({a, b});
    out.edges.push_back({a + n, b + n});
  }
  out.edges.push_back({uv.u, uv.v + n});
  out.edges.push_back({uv.u + n, uv.v});
  return out;
}

std::optional<std::pair<EdgeRef, EdgeRef>> find_equal_view_edge_pair(const ColoredTree& t, int d) {
  std::vector<EdgeRef> dir = directed_edges(t);
  std::map<std::string, std::vector<int>> buckets;
  for (int i = 0; i < static_cast<int>(dir.size()); ++i)
    buckets[edge_view_code(edge_view(t, dir[i].u, dir[i].v, d))].push_back(i);
  // Vertex-disjoint pairs first; contiguous pairs (v == x) as a fallback.
  for (int pass = 0; pass < 2; ++pass)
    for (auto& [code, ids] : buckets)
      for (int i : ids)
        for (int j : ids) {
          if (i == j) continue;
          EdgeRef e = dir[i], f = dir[j];
          bool disjoint = e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v;
          if ((pass == 0) != disjoint) continue;
          if (in_path_order(t, e, f)) return std::pair(e, f);
        }
  return std::nullopt;
}

std::optional<std::pair<EdgeRef, EdgeRef>> find_equal_degree_pair_path(const ColoredTree& t) {
  std::vector<int> deg = degrees(t);
  std::vector<EdgeRef> dir = directed_edges(t);
  std::map<std::pair<int, int>, std::vector<int>> buckets;
  for (int i = 0; i < static_cast<int>(dir.size()); ++i)
    buckets[{deg[dir[i].u], deg[dir[i].v]}].push_back(i);
  for (auto& [dd, ids] : buckets)
    for (int i : ids)
      for (int j : ids) {
        if (i == j) continue;
        EdgeRef e = dir[i], f = dir[j];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        if (in_path_order(t, e, f)) return std::pair(e, f);
      }
  return std::nullopt;
}

namespace {

// One directed leaf-to-leaf path scan. Finds the earliest-ending up-dip
// triple (x, x+1, x), then an (y+1, y, y+1) triple in the remaining suffix.
std::optional<Zigzag> zigzag_on_path(const std::vector<int>& path, const std::vector<int>& deg) {
  int len = static_cast<int>(path.size());
  int maxd = 0;
  for (int v : path) maxd = std::max(maxd, deg[v]);
  std::vector<int> first(maxd + 2, -1);                   // earliest pos of degree x
  std::vector<std::pair<int, int>> two(maxd + 2, {-1, -1});  // (u1,u2) for value x
  int u1 = -1, u2 = -1, u3 = -1;
  for (int i = 0; i < len && u3 < 0; ++i) {
    int g = deg[path[i]];
    if (two[g].first >= 0) {
      u1 = two[g].first;
      u2 = two[g].second;
      u3 = i;
      break;
    }
    if (g >= 1 && first[g - 1] >= 0 && two[g - 1].first < 0) two[g - 1] = {first[g - 1], i};
    if (first[g] < 0) first[g] = i;
  }
  if (u3 < 0) return std::nullopt;
  std::fill(first.begin(), first.end(), -1);
  std::fill(two.begin(), two.end(), std::pair(-1, -1));
  for (int i = u3 + 1; i < len; ++i) {
    int g = deg[path[i]];
    if (g >= 1 && two[g - 1].first >= 0) {
      auto [v1, v2] = two[g - 1];
      return Zigzag{{path[u1], path[u2], path[u3], path[v1], path[v2], path[i]}};
    }
    if (first[g + 1] >= 0 && two[g].first < 0) two[g] = {first[g + 1], i};
    if (first[g] < 0) first[g] = i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Zigzag> find_zigzag(const ColoredTree& t) {
  validate_tree(t);
  std::vector<int> deg = degrees(t);
  if (t.n() == 1) return std::nullopt;
  std::vector<int> leaves;
  for (int v = 0; v < t.n(); ++v)
    if (deg[v] <= 1) leaves.push_back(v);
  for (int a : leaves)
    for (int b : leaves) {
      if (a == b) continue;
      std::vector<int> path = tree_path(t, a, b);
      if (auto z = zigzag_on_path(path, deg)) return z;
    }
  return std::nullopt;
}

std::vector<ColorPair> useful_pairs(const std::vector<ColoredTree>& accepted, int c) {
  std::set<ColorPair> found;
  for (const ColoredTree& t : accepted) {
    std::vector<EdgeRef> dir = directed_edges(t);
    std::map<ColorPair, std::vector<int>> buckets;
    for (int i = 0; i < static_cast<int>(dir.size()); ++i) {
      ColorPair p{t.colors[dir[i].u], t.colors[dir[i].v]};
      if (p.c1 < 1 || p.c1 > c || p.c2 < 1 || p.c2 > c) throw InputError("color out of palette");
      buckets[p].push_back(i);
    }
    for (auto& [p, ids] : buckets) {
      if (found.count(p)) continue;
      bool ok = false;
      for (int i : ids) {
        for (int j : ids) {
          if (i == j) continue;
          EdgeRef e = dir[i], f = dir[j];
          if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
          if (in_path_order(t, e, f)) {
            ok = true;
            break;
          }
        }
        if (ok) break;
      }
      if (ok) found.insert(p);
    }
  }
  return {found.begin(), found.end()};
}

std::optional<UsefulWitness> useful_witness(const std::vector<ColoredTree>& accepted,
                                            ColorPair pair) {
  for (const ColoredTree& t : accepted) {
    std::vector<EdgeRef> dir = directed_edges(t);
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(dir.size()); ++i)
      if (t.colors[dir[i].u] == pair.c1 && t.colors[dir[i].v] == pair.c2) ids.push_back(i);
    for (int i : ids)
      for (int j : ids) {
        if (i == j) continue;
        EdgeRef e = dir[i], f = dir[j];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        if (in_path_order(t, e, f)) return UsefulWitness{pair, t, {e.u, e.v, f.u, f.v}};
      }
  }
  return std::nullopt;
}

namespace {

// Witness search for p < q in one rooted tree. `strong` marks witnesses whose
// v2,w2 are incomparable (usable by the growth constructions); the weaker
// one-sided condition (v2 not an ancestor of w2) is kept as a fallback.
struct RootedWitness {
  std::array<int, 6> verts;
  bool strong = false;
};

std::optional<RootedWitness> order_witness_rooted(const ColoredTree& t, const Rooted& r,
                                                  const EulerTour& e, ColorPair p, ColorPair q) {
  std::vector<std::pair<int, int>> ap, aq;  // arcs parent -> child
  for (int v = 0; v < t.n(); ++v) {
    int par = r.parent[v];
    if (par < 0) continue;
    ColorPair arc{t.colors[par], t.colors[v]};
    if (arc == p) ap.push_back({par, v});
    if (arc == q) aq.push_back({par, v});
  }
  std::optional<RootedWitness> weak;
  for (auto [u1, u2] : ap)
    for (auto [v1, v2] : ap) {
      if (!e.strict_anc(u2, v1)) continue;
      for (auto [w1, w2] : aq) {
        if (!e.strict_anc(u2, w1)) continue;
        if (e.anc(v2, w2)) continue;
        if (!e.anc(w2, v2)) return RootedWitness{{u1, u2, v1, v2, w1, w2}, true};
        if (!weak) weak = RootedWitness{{u1, u2, v1, v2, w1, w2}, false};
      }
    }
  return weak;
}

}  // namespace

OrderRelation order_relation(const std::vector<ColoredTree>& accepted, int c) {
  OrderRelation rel;
  rel.useful = useful_pairs(accepted, c);
  int k = static_cast<int>(rel.useful.size());
  std::vector<std::vector<char>> direct(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::optional<OrderWitness> strong, weak;
      for (const ColoredTree& t : accepted) {
        if (t.n() > 60) continue;  // exhaustive rooting search is capped
        for (int root = 0; root < t.n() && !strong; ++root) {
          Rooted r = root_tree(t, root);
          EulerTour e = euler(r);
          if (auto w = order_witness_rooted(t, r, e, rel.useful[i], rel.useful[j])) {
            OrderWitness ow{rel.useful[i], rel.useful[j], t, root, w->verts};
            if (w->strong)
              strong = ow;
            else if (!weak)
              weak = ow;
          }
        }
        if (strong) break;
      }
      if (strong || weak) {
        direct[i][j] = 1;
        rel.edges.push_back(strong ? *strong : *weak);
      }
    }
  // transitive closure
  std::vector<std::vector<char>> reach = direct;
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      if (reach[i][m])
        for (int j = 0; j < k; ++j)
          if (reach[m][j]) reach[i][j] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (reach[i][j]) {
        rel.closure.push_back({i, j});
        if (i == j) rel.non_strict = true;
      }
  // longest chain over directly witnessed edges (simple path, small graphs)
  std::vector<int> best_path, cur;
  std::vector<char> used(k, 0);
  long long steps = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (++steps > 2'000'000) return;
    cur.push_back(v);
    used[v] = 1;
    if (cur.size() > best_path.size()) best_path = cur;
    for (int w = 0; w < k; ++w)
      if (direct[v][w] && !used[w]) self(self, w);
    used[v] = 0;
    cur.pop_back();
  };
  for (int v = 0; v < k; ++v) dfs(dfs, v);
  for (int v : best_path) rel.longest_chain.push_back(rel.useful[v]);
  return rel;
}

RootedTree depump(const RootedTree& in, const OrderRelation* order) {
  validate_tree(in.t);
  if (in.root < 0 || in.root >= in.t.n()) throw InputError("depump: root out of range");
  int c = in.t.c;
  std::vector<ColorPair> pairs;
  if (order) {
    // linear extension of the strict part, lex tie-break, then leftovers
    int k = static_cast<int>(order->useful.size());
    std::vector<std::vector<char>> strict(k, std::vector<char>(k, 0));
    for (auto& [i, j] : order->closure)
      if (i != j) strict[i][j] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (strict[i][j] && strict[j][i]) strict[i][j] = strict[j][i] = 0;
    std::vector<char> done(k, 0);
    for (int picked = 0; picked < k; ++picked) {
      int sel = -1;
      for (int v = 0; v < k; ++v) {
        if (done[v]) continue;
        bool blocked = false;
        for (int u = 0; u < k; ++u)
          if (!done[u] && strict[u][v]) blocked = true;
        if (!blocked) {
          sel = v;
          break;
        }
      }
      if (sel < 0)
        for (int v = 0; v < k && sel < 0; ++v)
          if (!done[v]) sel = v;
      done[sel] = 1;
      pairs.push_back(order->useful[sel]);
    }
    for (int c1 = 1; c1 <= c; ++c1)
      for (int c2 = 1; c2 <= c; ++c2)
        if (std::find(pairs.begin(), pairs.end(), ColorPair{c1, c2}) == pairs.end())
          pairs.push_back({c1, c2});
  } else {
    for (int c1 = 1; c1 <= c; ++c1)
      for (int c2 = 1; c2 <= c; ++c2) pairs.push_back({c1, c2});
  }

  ColoredTree t = in.t;
  int root = in.root;
  for (ColorPair p : pairs) {
    for (;;) {
      Rooted r = root_tree(t, root);
      EulerTour e = euler(r);
      std::vector<std::pair<int, int>> arcs;
      for (int v = 0; v < t.n(); ++v)
        if (r.parent[v] >= 0 && t.colors[r.parent[v]] == p.c1 && t.colors[v] == p.c2)
          arcs.push_back({r.parent[v], v});
      // closest-to-root arc that has another pair arc below it on a branch
      int ui = -1;
      for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        bool rep = false;
        for (int j = 0; j < static_cast<int>(arcs.size()) && !rep; ++j)
          if (j != i && e.anc(arcs[i].second, arcs[j].first)) rep = true;
        if (!rep) continue;
        if (ui < 0 || r.depth[arcs[i].first] < r.depth[arcs[ui].first] ||
            (r.depth[arcs[i].first] == r.depth[arcs[ui].first] && arcs[i] < arcs[ui]))
          ui = i;
      }
      if (ui < 0) break;
      auto [u1, u2] = arcs[ui];
      int vi = -1;  // deepest pair arc below u2
      for (int j = 0; j < static_cast<int>(arcs.size()); ++j) {
        if (j == ui || !e.anc(u2, arcs[j].first)) continue;
        if (vi < 0 || r.depth[arcs[j].first] > r.depth[arcs[vi].first] ||
            (r.depth[arcs[j].first] == r.depth[arcs[vi].first] && arcs[j] < arcs[vi]))
          vi = j;
      }
      int v2 = arcs[vi].second;
      // replace the subtree at u2 by the subtree at v2
      std::vector<char> cut(t.n(), 0);
      for (int w : subtree_vertices(r, u2)) cut[w] = 1;
      for (int w : subtree_vertices(r, v2)) cut[w] = 0;
      std::vector<int> keep;
      for (int w = 0; w < t.n(); ++w)
        if (!cut[w]) keep.push_back(w);
      std::vector<int> where(t.n(), -1);
      for (int i = 0; i < static_cast<int>(keep.size()); ++i) where[keep[i]] = i;
      ColoredTree next = induced(t, keep);
      next.edges.push_back({where[u1], where[v2]});
      root = where[root];
      t = std::move(next);
    }
  }
  return {t, root};
}

namespace {

void validate_order_witness(const OrderWitness& w, bool need_incomparable) {
  validate_tree(w.tree);
  if (w.root < 0 || w.root >= w.tree.n()) throw InputError("witness: root out of range");
  Rooted r = root_tree(w.tree, w.root);
  EulerTour e = euler(r);
  auto [u1, u2, v1, v2, w1, w2] = w.verts;
  auto arc_ok = [&](int a, int b, ColorPair p) {
    return r.parent[b] == a && w.tree.colors[a] == p.c1 && w.tree.colors[b] == p.c2;
  };
  if (!arc_ok(u1, u2, w.from) || !arc_ok(v1, v2, w.from) || !arc_ok(w1, w2, w.to))
    throw InputError("witness: arcs do not match the colour pairs");
  if (!e.strict_anc(u2, v1) || !e.strict_anc(u2, w1))
    throw InputError("witness: u2 must be a strict ancestor of v1 and w1");
  if (e.anc(v2, w2)) throw InputError("witness: v2 must not be an ancestor of w2");
  if (need_incomparable && e.anc(w2, v2))
    throw InputError("witness: v2 and w2 must be incomparable");
}

// Copy the subtree at x into `out`, substituting a fresh copy of the subtree
// at `sub` (with budget-1) whenever a marked vertex is reached with budget > 0.
struct Doubler {
  const ColoredTree* t;
  const Rooted* r;
  int sub;         // substitution source (u2)
  int m1, m2;      // marked targets (v2, w2); m2 < 0 for single-slot chains
  ColoredTree out;
  std::vector<std::array<int, 6>> copies;  // tracked vertex images per emitted sub-copy
  std::array<int, 6> tracked{};            // original ids to track inside sub-copies

  int emit(int x, int budget) {
    if (budget > 0 && (x == m1 || x == m2)) return copy_sub(budget - 1);
    return plain(x, budget);
  }
  int plain(int x, int budget) {
    if (out.n() > 20'000'000) throw InputError("family construction: result too large");
    int id = out.n();
    out.colors.push_back(t->colors[x]);
    for (int y : r->children[x]) {
      int cid = emit(y, budget);
      out.edges.push_back({id, cid});
    }
    return id;
  }
  int copy_sub(int budget) {
    std::array<int, 6> img{-1, -1, -1, -1, -1, -1};
    int id = copy_track(sub, budget, img);
    copies.push_back(img);
    return id;
  }
  // like emit, but records images of tracked ids for this copy only
  int copy_track(int x, int budget, std::array<int, 6>& img) {
    if (budget > 0 && (x == m1 || x == m2)) return copy_sub(budget - 1);
    if (out.n() > 20'000'000) throw InputError("family construction: result too large");
    int id = out.n();
    out.colors.push_back(t->colors[x]);
    for (int i = 0; i < 6; ++i)
      if (tracked[i] == x && img[i] < 0) img[i] = id;
    for (int y : r->children[x]) {
      int cid = copy_track(y, budget, img);
      out.edges.push_back({id, cid});
    }
    return id;
  }
};

}  // namespace

ColoredTree build_logcase_family(const OrderWitness& w, int i) {
  if (i < 1) throw InputError("logcase: i must be >= 1");
  if (i > 24) throw InputError("logcase: i too large");
  if (!(w.from == w.to)) throw InputError("logcase: witness must relate a pair to itself");
  validate_order_witness(w, true);
  Rooted r = root_tree(w.tree, w.root);
  Doubler d;
  d.t = &w.tree;
  d.r = &r;
  d.sub = w.verts[1];
  d.m1 = w.verts[3];
  d.m2 = w.verts[5];
  d.out.c = w.tree.c;
  d.tracked = {-1, -1, -1, -1, -1, -1};
  d.plain(w.root, i - 1);
  return std::move(d.out);
}

ColoredTree build_chain_rakes(const std::vector<OrderWitness>& chain, const UsefulWitness& last,
                              int N) {
  if (N < 1) throw InputError("chain rakes: N must be >= 1");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!(chain[i].to == chain[i + 1].from))
      throw InputError("chain rakes: witnesses do not chain");
  if (!chain.empty() && !(chain.back().to == last.pair))
    throw InputError("chain rakes: usefulness witness does not match the chain top");
  for (const OrderWitness& w : chain) validate_order_witness(w, true);
  {
    auto [u1, u2, v1, v2] = last.verts;
    if (last.tree.colors[u1] != last.pair.c1 || last.tree.colors[u2] != last.pair.c2 ||
        last.tree.colors[v1] != last.pair.c1 || last.tree.colors[v2] != last.pair.c2 ||
        !in_path_order(last.tree, {u1, u2}, {v1, v2}))
      throw InputError("chain rakes: invalid usefulness witness");
  }

  // S^(k): pump the usefulness witness; track its u1u2 copy (kept side).
  ColoredTree s = last.tree;
  EdgeRef su{last.verts[0], last.verts[1]};
  {
    EdgeRef uv{last.verts[0], last.verts[1]}, xy{last.verts[2], last.verts[3]};
    EdgeRef cxy = xy;
    std::vector<int> m1, m2;
    for (int j = 2; j <= N; ++j) {
      s = graft_mapped(s, cxy, last.tree, uv, &m1, &m2);
      su = {m1[su.u], m1[su.v]};
      cxy = {m2[xy.u], m2[xy.v]};
    }
  }

  // S^(i) for i = k-1 .. 1: build U^(i) (N chained copies of the subtree at
  // u2), then graft S^(i+1) at every tracked w1w2 copy.
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const OrderWitness& w = *it;
    Rooted r = root_tree(w.tree, w.root);
    Doubler d;
    d.t = &w.tree;
    d.r = &r;
    d.sub = w.verts[1];
    d.m1 = w.verts[3];
    d.m2 = -1;
    d.out.c = w.tree.c;
    d.tracked = {w.verts[0], w.verts[1], w.verts[4], w.verts[5], -1, -1};
    // The root-level pass substitutes at v2 only; budget N yields N copies.
    std::array<int, 6> top{-1, -1, -1, -1, -1, -1};
    d.copy_track(w.root, N, top);
    ColoredTree u_tree = std::move(d.out);
    EdgeRef uu{top[0], top[1]};
    std::vector<EdgeRef> wsites;
    for (auto& img : d.copies) wsites.push_back({img[2], img[3]});

    std::vector<int> m1, m2;
    for (size_t idx = 0; idx < wsites.size(); ++idx) {
      EdgeRef site = wsites[idx];
      u_tree = graft_mapped(u_tree, site, s, su, &m1, &m2);
      uu = {m1[uu.u], m1[uu.v]};
      for (size_t o = idx + 1; o < wsites.size(); ++o)
        wsites[o] = {m1[wsites[o].u], m1[wsites[o].v]};
    }
    s = std::move(u_tree);
    su = uu;
  }
  return s;
}

}  // namespace treechk
