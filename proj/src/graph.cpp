#include "treechk/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace treechk {

Adjacency adjacency(const ColoredGraph& g) {
  Adjacency adj(g.n());
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

void validate_graph(const ColoredGraph& g) {
  const int n = g.n();
  for (int i = 0; i < n; ++i)
    if (g.colors[i] < 1 || g.colors[i] > g.c)
      throw InputError("vertex " + std::to_string(i) + " has color " +
                       std::to_string(g.colors[i]) + " outside 1.." +
                       std::to_string(g.c));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self loop at vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second)
      throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
}

std::vector<int> bfs_dist(const Adjacency& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

bool is_connected(const ColoredGraph& g) {
  if (g.n() == 0) return false;
  auto dist = bfs_dist(adjacency(g), 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const ColoredGraph& g) {
  return g.n() >= 1 && static_cast<int>(g.edges.size()) == g.n() - 1 && is_connected(g);
}

void validate_tree(const ColoredGraph& g) {
  validate_graph(g);
  if (!is_tree(g)) throw InputError("graph is not a tree");
}

std::vector<int> degrees(const ColoredGraph& g) {
  std::vector<int> deg(g.n(), 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

int diameter(const ColoredGraph& g) {
  if (g.n() == 0) throw InputError("diameter of empty graph");
  auto adj = adjacency(g);
  auto far = [&](int s) {
    auto dist = bfs_dist(adj, s);
    int best = s;
    for (int i = 0; i < g.n(); ++i) {
      if (dist[i] < 0) throw InputError("diameter of disconnected graph");
      if (dist[i] > dist[best]) best = i;
    }
    return std::pair{best, dist[best]};
  };
  if (is_tree(g)) {
    auto [a, _] = far(0);
    return far(a).second;
  }
  int best = 0;
  for (int s = 0; s < g.n(); ++s) best = std::max(best, far(s).second);
  return best;
}

std::vector<int> tree_path(const ColoredGraph& t, int a, int b) {
  auto adj = adjacency(t);
  std::vector<int> prev(t.n(), -1);
  std::deque<int> q{a};
  prev[a] = a;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == b) break;
    for (int w : adj[u])
      if (prev[w] < 0) {
        prev[w] = u;
        q.push_back(w);
      }
  }
  if (prev[b] < 0) throw InputError("tree_path: no path");
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> tree_centers(const ColoredGraph& t) {
  const int n = t.n();
  if (n == 1) return {0};
  auto adj = adjacency(t);
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].size());
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  for (int i = 0; i < n; ++i)
    if (deg[i] <= 1) layer.push_back(i);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int u : layer) {
      removed[u] = true;
      --remaining;
      for (int w : adj[u])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int i = 0; i < n; ++i)
    if (!removed[i]) centers.push_back(i);
  return centers;
}

std::vector<int> eccentricities(const ColoredGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> ecc(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    auto dist = bfs_dist(adj, s);
    for (int d : dist) {
      if (d < 0) throw InputError("eccentricities of disconnected graph");
      ecc[s] = std::max(ecc[s], d);
    }
  }
  return ecc;
}

Rooted root_tree(const ColoredGraph& t, int root) {
  Rooted r;
  r.t = &t;
  r.root = root;
  const int n = t.n();
  r.parent.assign(n, -1);
  r.children.assign(n, {});
  r.depth.assign(n, 0);
  auto adj = adjacency(t);
  r.order.reserve(n);
  std::vector<int> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    r.order.push_back(u);
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        r.parent[w] = u;
        r.depth[w] = r.depth[u] + 1;
        r.children[u].push_back(w);
        stack.push_back(w);
      }
  }
  if (static_cast<int>(r.order.size()) != n) throw InputError("root_tree: not connected");
  return r;
}

int subtree_height(const Rooted& r, int v) {
  int h = 0;
  for (int u : subtree_vertices(r, v)) h = std::max(h, r.depth[u] - r.depth[v]);
  return h;
}

std::vector<int> subtree_vertices(const Rooted& r, int v) {
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int w : r.children[u]) stack.push_back(w);
  }
  return out;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
  ColoredGraph out;
  out.c = g.c;
  out.colors.assign(g.n(), 0);
  for (int i = 0; i < g.n(); ++i) out.colors[perm[i]] = g.colors[i];
  out.edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) out.edges.push_back({perm[u], perm[v]});
  return out;
}

ColoredGraph induced(const ColoredGraph& g, const std::vector<int>& keep) {
  std::vector<int> idx(g.n(), -1);
  ColoredGraph out;
  out.c = g.c;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    idx[keep[i]] = i;
    out.colors.push_back(g.colors[keep[i]]);
  }
  for (auto [u, v] : g.edges)
    if (idx[u] >= 0 && idx[v] >= 0) out.edges.push_back({idx[u], idx[v]});
  return out;
}

ColoredGraph disjoint_union(const ColoredGraph& g1, const ColoredGraph& g2) {
  ColoredGraph out = g1;
  out.c = std::max(g1.c, g2.c);
  const int k = g1.n();
  out.colors.insert(out.colors.end(), g2.colors.begin(), g2.colors.end());
  for (auto [u, v] : g2.edges) out.edges.push_back({u + k, v + k});
  return out;
}

ColoredGraph make_path(int n, int color) {
  ColoredGraph g;
  g.c = std::max(1, color);
  g.colors.assign(n, color);
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

ColoredGraph make_star(int leaves, int center_color, int leaf_color) {
  ColoredGraph g;
  g.c = std::max({1, center_color, leaf_color});
  g.colors.assign(leaves + 1, leaf_color);
  g.colors[0] = center_color;
  for (int i = 1; i <= leaves; ++i) g.edges.push_back({0, i});
  return g;
}

ColoredGraph make_cycle(int n, int color) {
  ColoredGraph g = make_path(n, color);
  if (n >= 3) g.edges.push_back({n - 1, 0});
  return g;
}

ColoredGraph make_complete_binary(int h, int color) {
  const int n = (1 << (h + 1)) - 1;
  ColoredGraph g;
  g.c = std::max(1, color);
  g.colors.assign(n, color);
  for (int i = 1; i < n; ++i) g.edges.push_back({(i - 1) / 2, i});
  return g;
}

ColoredGraph make_cubic(int h, int color) {
  // two adjacent hubs, each with two complete binary pendants of height h-1
  ColoredGraph g;
  g.c = std::max(1, color);
  g.colors.assign(2, color);
  g.edges.push_back({0, 1});
  auto attach = [&](int host) {
    ColoredGraph pend = make_complete_binary(h - 1, color);
    int base = g.n();
    g = disjoint_union(g, pend);
    g.edges.push_back({host, base});
  };
  for (int hub = 0; hub < 2; ++hub)
    for (int s = 0; s < 2; ++s) attach(hub);
  return g;
}

}  // namespace treechk
