#include "treechk/view.hpp"

#include <algorithm>
#include <deque>

namespace treechk {

namespace {

ColoredGraph extract(const ColoredGraph& g, const std::vector<int>& keep,
                     const std::vector<char>& keep_edge_endpoint,
                     std::vector<int>& idx_out) {
  idx_out.assign(g.n(), -1);
  ColoredGraph out;
  out.c = g.c;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    idx_out[keep[i]] = i;
    out.colors.push_back(g.colors[keep[i]]);
  }
  for (auto [a, b] : g.edges)
    if (idx_out[a] >= 0 && idx_out[b] >= 0 &&
        (keep_edge_endpoint[a] || keep_edge_endpoint[b]))
      out.edges.push_back({idx_out[a], idx_out[b]});
  return out;
}

bool ball_is_tree(const ColoredGraph& ball) {
  return static_cast<int>(ball.edges.size()) == ball.n() - 1;
}

}  // namespace

NodeView node_view(const ColoredGraph& g, int v, int d) {
  if (d < 1) throw InputError("node_view: radius must be >= 1");
  auto dist = bfs_dist(adjacency(g), v);
  std::vector<int> keep;
  std::vector<char> inner(g.n(), 0);
  for (int i = 0; i < g.n(); ++i)
    if (dist[i] >= 0 && dist[i] <= d) {
      keep.push_back(i);
      if (dist[i] <= d - 1) inner[i] = 1;
    }
  std::sort(keep.begin(), keep.end(),
            [&](int a, int b) { return std::pair{dist[a], a} < std::pair{dist[b], b}; });
  NodeView w;
  std::vector<int> idx;
  w.g = extract(g, keep, inner, idx);
  w.center = idx[v];
  w.radius = d;
  w.orig = keep;
  w.dist.reserve(keep.size());
  for (int i : keep) w.dist.push_back(dist[i]);
  return w;
}

EdgeView edge_view(const ColoredGraph& g, int u, int v, int d) {
  if (d < 1) throw InputError("edge_view: radius must be >= 1");
  auto adj = adjacency(g);
  if (std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end())
    throw InputError("edge_view: uv is not an edge");
  // multi-source distances from {u, v}
  std::vector<int> dist(g.n(), -1);
  std::deque<int> q{u, v};
  dist[u] = dist[v] = 0;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b : adj[a])
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push_back(b);
      }
  }
  std::vector<int> keep;
  std::vector<char> inner(g.n(), 0);
  for (int i = 0; i < g.n(); ++i)
    if (dist[i] >= 0 && dist[i] <= d - 1) {
      keep.push_back(i);
      if (dist[i] <= d - 2) inner[i] = 1;
    }
  std::sort(keep.begin(), keep.end(),
            [&](int a, int b) { return std::pair{dist[a], a} < std::pair{dist[b], b}; });
  EdgeView w;
  std::vector<int> idx;
  w.g = extract(g, keep, inner, idx);
  // the center edge survives even at d=1
  bool have_uv = false;
  for (auto [a, b] : w.g.edges)
    if ((a == idx[u] && b == idx[v]) || (a == idx[v] && b == idx[u])) have_uv = true;
  if (!have_uv) w.g.edges.push_back({idx[u], idx[v]});
  w.u = idx[u];
  w.v = idx[v];
  w.radius = d;
  w.orig = keep;
  return w;
}

std::string node_view_code(const NodeView& w) {
  if (!ball_is_tree(w.g)) throw InputError("node_view_code: ball has a cycle");
  return rooted_code(w.g, w.center);
}

std::string edge_view_code(const EdgeView& w) {
  if (!ball_is_tree(w.g)) throw InputError("edge_view_code: ball has a cycle");
  // drop uv, split into the two sides
  ColoredGraph cut = w.g;
  cut.edges.erase(std::remove_if(cut.edges.begin(), cut.edges.end(),
                                 [&](const std::pair<int, int>& e) {
                                   return (e.first == w.u && e.second == w.v) ||
                                          (e.first == w.v && e.second == w.u);
                                 }),
                  cut.edges.end());
  auto dist_u = bfs_dist(adjacency(cut), w.u);
  std::vector<int> uside, vside;
  for (int i = 0; i < cut.n(); ++i) (dist_u[i] >= 0 ? uside : vside).push_back(i);
  ColoredGraph gu = induced(cut, uside);
  ColoredGraph gv = induced(cut, vside);
  int lu = static_cast<int>(std::find(uside.begin(), uside.end(), w.u) - uside.begin());
  int lv = static_cast<int>(std::find(vside.begin(), vside.end(), w.v) - vside.begin());
  return "[" + rooted_code(gu, lu) + "|" + rooted_code(gv, lv) + "]";
}

bool node_views_isomorphic(const NodeView& a, const NodeView& b) {
  if (a.radius != b.radius) return false;
  if (ball_is_tree(a.g) && ball_is_tree(b.g))
    return node_view_code(a) == node_view_code(b);
  return graphs_isomorphic_pinned(a.g, a.center, b.g, b.center);
}

bool edge_views_isomorphic(const EdgeView& a, const EdgeView& b) {
  if (a.radius != b.radius) return false;
  if (ball_is_tree(a.g) && ball_is_tree(b.g))
    return edge_view_code(a) == edge_view_code(b);
  if (a.g.colors[a.u] != b.g.colors[b.u] || a.g.colors[a.v] != b.g.colors[b.v])
    return false;
  // mark the ordered endpoints with fresh colors and reduce to a single pin
  ColoredGraph ga = a.g, gb = b.g;
  int base = std::max(ga.c, gb.c);
  ga.c = gb.c = base + 2;
  ga.colors[a.u] = base + 1;
  ga.colors[a.v] = base + 2;
  gb.colors[b.u] = base + 1;
  gb.colors[b.v] = base + 2;
  return graphs_isomorphic_pinned(ga, a.u, gb, b.u);
}

}  // namespace treechk
