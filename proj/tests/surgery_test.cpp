#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "treechk/canonical.hpp"
#include "treechk/checker.hpp"
#include "treechk/constructions.hpp"
#include "treechk/enumerate.hpp"
#include "treechk/surgery.hpp"
#include "treechk/view.hpp"

using namespace treechk;

namespace {

std::vector<int> parent_walk(const ColoredTree& t, int root) {
  std::vector<std::vector<int>> adj(t.n());
  for (auto& e : t.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> par(t.n(), -2), st{root};
  par[root] = -1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : adj[v])
      if (par[w] == -2) {
        par[w] = v;
        st.push_back(w);
      }
  }
  return par;
}

bool is_anc(const std::vector<int>& par, int a, int d) {
  for (int v = d; v != -1; v = par[v])
    if (v == a) return true;
  return false;
}

// e before f on a common path: tree_path(e.u -> f.v) starts e.u,e.v and
// ends f.u,f.v
bool path_order_ok(const ColoredTree& t, EdgeRef e, EdgeRef f) {
  if (e.u == f.v) return false;
  std::vector<int> p = tree_path(t, e.u, f.v);
  return p.size() >= 3 && p[1] == e.v && p[p.size() - 2] == f.u;
}

std::set<std::string> code_set(const ColoredTree& t, int d) {
  std::set<std::string> out;
  for (int v = 0; v < t.n(); ++v) out.insert(node_view_code(node_view(t, v, d)));
  return out;
}

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// host plus a pendant path of 2d+2 fresh-colored vertices hung on `at`; the
// middle marker edge's view at radius d lies entirely inside the marker path,
// so two such constructions always have equal ordered edge views there.
std::pair<ColoredTree, EdgeRef> with_marker_path(const ColoredTree& host, int at, int d) {
  ColoredTree t = host;
  t.c = host.c + 1;
  int base = t.n();
  for (int j = 0; j < 2 * d + 2; ++j) {
    t.colors.push_back(host.c + 1);
    t.edges.push_back({j == 0 ? at : base + j - 1, base + j});
  }
  return {t, EdgeRef{base + d, base + d + 1}};
}

int height_of(const ColoredTree& t, int root) {
  auto dist = oracle::bfs(t, root);
  return *std::max_element(dist.begin(), dist.end());
}

bool branch_pairs_distinct(const ColoredTree& t, int root) {
  auto par = parent_walk(t, root);
  for (int v = 0; v < t.n(); ++v) {
    std::set<std::pair<int, int>> seen;
    for (int x = v; par[x] != -1; x = par[x])
      if (!seen.insert({t.colors[par[x]], t.colors[x]}).second) return false;
  }
  return true;
}

std::set<std::pair<int, int>> arc_pairs(const ColoredTree& t, int root) {
  auto par = parent_walk(t, root);
  std::set<std::pair<int, int>> out;
  for (int v = 0; v < t.n(); ++v)
    if (par[v] >= 0) out.insert({t.colors[par[v]], t.colors[v]});
  return out;
}

// order-witness constraints, re-derived from scratch: both `from` arcs and
// the `to` arc are parent arcs, u2 strictly above v1 and w1, v2 not above w2
void check_order_witness(const OrderWitness& w) {
  auto par = parent_walk(w.tree, w.root);
  auto [u1, u2, v1, v2, w1, w2] = w.verts;
  CHECK(par[u2] == u1);
  CHECK(par[v2] == v1);
  CHECK(par[w2] == w1);
  CHECK(w.tree.colors[u1] == w.from.c1);
  CHECK(w.tree.colors[u2] == w.from.c2);
  CHECK(w.tree.colors[v1] == w.from.c1);
  CHECK(w.tree.colors[v2] == w.from.c2);
  CHECK(w.tree.colors[w1] == w.to.c1);
  CHECK(w.tree.colors[w2] == w.to.c2);
  CHECK(u2 != v1);
  CHECK(u2 != w1);
  CHECK(is_anc(par, u2, v1));
  CHECK(is_anc(par, u2, w1));
  CHECK_FALSE(is_anc(par, v2, w2));
}

bool witness_strong(const OrderWitness& w) {
  auto par = parent_walk(w.tree, w.root);
  return !is_anc(par, w.verts[3], w.verts[5]) && !is_anc(par, w.verts[5], w.verts[3]);
}

void check_useful_witness(const UsefulWitness& w) {
  auto [u1, u2, v1, v2] = w.verts;
  CHECK(w.tree.colors[u1] == w.pair.c1);
  CHECK(w.tree.colors[u2] == w.pair.c2);
  CHECK(w.tree.colors[v1] == w.pair.c1);
  CHECK(w.tree.colors[v2] == w.pair.c2);
  CHECK(std::set<int>{u1, u2, v1, v2}.size() == 4);
  CHECK(path_order_ok(w.tree, {u1, u2}, {v1, v2}));
}

// brute usefulness: scan every tree path for two disjoint arcs reading the
// pair in order
std::set<std::pair<int, int>> brute_useful(const ColoredTree& t) {
  std::set<std::pair<int, int>> out;
  for (int s = 0; s < t.n(); ++s)
    for (int e = 0; e < t.n(); ++e) {
      if (s == e) continue;
      std::vector<int> p = tree_path(t, s, e);
      int m = static_cast<int>(p.size());
      for (int i = 0; i + 1 < m; ++i)
        for (int j = i + 2; j + 1 < m; ++j)
          if (t.colors[p[i]] == t.colors[p[j]] && t.colors[p[i + 1]] == t.colors[p[j + 1]])
            out.insert({t.colors[p[i]], t.colors[p[i + 1]]});
    }
  return out;
}

bool path_shape(const ColoredTree& t) {
  auto deg = degrees(t);
  if (t.n() == 1) return true;
  int ones = 0;
  for (int v = 0; v < t.n(); ++v) {
    if (deg[v] > 2) return false;
    if (deg[v] == 1) ++ones;
  }
  return ones == 2;
}

void check_zigzag(const ColoredTree& t, const Zigzag& z) {
  auto deg = degrees(t);
  auto [u1, u2, u3, v1, v2, v3] = z.verts;
  CHECK(std::set<int>{u1, u2, u3, v1, v2, v3}.size() == 6);
  CHECK(deg[u1] == deg[u3]);
  CHECK(deg[u2] == deg[u1] + 1);
  CHECK(deg[v1] == deg[v3]);
  CHECK(deg[v2] == deg[v1] - 1);
  // all six in order on the u1 -> v3 path
  std::vector<int> p = tree_path(t, u1, v3);
  std::vector<int> want{u1, u2, u3, v1, v2, v3};
  size_t at = 0;
  for (int v : p)
    if (at < want.size() && v == want[at]) ++at;
  CHECK(at == want.size());
}

ColoredTree caterpillar(const std::vector<int>& pendants) {
  ColoredTree t;
  int b = static_cast<int>(pendants.size());
  t.colors.assign(b, 1);
  for (int i = 1; i < b; ++i) t.edges.push_back({i - 1, i});
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < pendants[i]; ++j) {
      t.edges.push_back({i, t.n()});
      t.colors.push_back(1);
    }
  return t;
}

}  // namespace

TEST_CASE("graft: basics, maps and size law") {
  ColoredTree p4 = make_path(4);
  ColoredTree q4 = make_path(4);
  for (int v = 0; v < 4; ++v) q4.colors[v] = 2;
  q4.c = 2;
  ColoredTree p4w = p4;
  p4w.c = 2;

  std::vector<int> m1, m2;
  ColoredTree g = graft_mapped(p4w, {1, 2}, q4, {1, 2}, &m1, &m2);
  CHECK(g.n() == 4);
  ColoredTree expect = make_path(4);
  expect.c = 2;
  expect.colors = {1, 1, 2, 2};
  CHECK(trees_isomorphic(g, expect));
  CHECK(path_shape(g));
  CHECK(m1 == std::vector<int>{0, 1, -1, -1});
  CHECK(m2 == std::vector<int>{-1, -1, 2, 3});
  CHECK(g.colors == std::vector<int>{1, 1, 2, 2});
  CHECK(g.colors[m2[2]] == 2);

  // self-graft at the same edge is an isomorphism
  ColoredTree t = gen_increasing_caterpillar(4);
  for (auto& e : t.edges) {
    ColoredTree s = graft(t, {e.first, e.second}, t, {e.first, e.second});
    CHECK(s.n() == t.n());
    CHECK(trees_isomorphic(s, t));
  }

  // size law |g| = |u-side of t| + |v2-side of t2|
  ColoredTree a = make_star(4), b = make_path(5);
  ColoredTree g2 = graft(a, {0, 1}, b, {3, 2});
  CHECK(g2.n() == 4 + 3);
  CHECK_THROWS_AS(graft(a, {1, 2}, b, {0, 1}), InputError);
  CHECK_THROWS_AS(graft(a, {0, 1}, b, {0, 2}), InputError);
  CHECK_THROWS_AS(graft(a, {0, 1}, q4, {0, 1}), InputError);  // palettes differ
}

TEST_CASE("graft: equal marker views keep node view codes inside the sources") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    int c = 1 + static_cast<int>(rng() % 2);
    ColoredTree h1 = oracle::random_tree(2 + static_cast<int>(rng() % 9), c, rng);
    ColoredTree h2 = oracle::random_tree(2 + static_cast<int>(rng() % 9), c, rng);
    auto [t1, e1] = with_marker_path(h1, static_cast<int>(rng() % h1.n()), d);
    auto [t2, e2] = with_marker_path(h2, static_cast<int>(rng() % h2.n()), d);
    REQUIRE(edge_view_code(edge_view(t1, e1.u, e1.v, d)) ==
            edge_view_code(edge_view(t2, e2.u, e2.v, d)));

    // same orientation: swaps one marker tail for another, an isomorphism
    ColoredTree same = graft(t1, e1, t2, e2);
    CHECK(trees_isomorphic(same, t1));

    // reversed orientation glues the two hosts through the marker path
    REQUIRE(edge_view_code(edge_view(t1, e1.u, e1.v, d)) ==
            edge_view_code(edge_view(t2, e2.v, e2.u, d)));
    ColoredTree joined = graft(t1, e1, t2, {e2.v, e2.u});
    CHECK(joined.n() == h1.n() + h2.n() + 2 * d + 2);
    CHECK(is_tree(joined));
    std::set<std::string> sources = code_set(t1, d);
    for (const std::string& s : code_set(t2, d)) sources.insert(s);
    CHECK(subset_of(code_set(joined, d), sources));
  }
}

TEST_CASE("pump: P_6 at d=1 inserts two-vertex segments") {
  ColoredTree p6 = make_path(6);
  auto pr = find_equal_view_edge_pair(p6, 1);
  REQUIRE(pr.has_value());
  auto [e, f] = *pr;
  CHECK(e.u == 0);
  CHECK(e.v == 1);
  CHECK(f.u == 2);
  CHECK(f.v == 3);
  CHECK(pump_segment_size(p6, e, f) == 2);
  for (int i = 1; i <= 5; ++i) {
    ColoredTree ti = pump(p6, e, f, i, 1);
    CHECK(ti.n() == 6 + 2 * (i - 1));
    CHECK(trees_isomorphic(ti, make_path(6 + 2 * (i - 1))));
  }
}

TEST_CASE("pump: validation") {
  ColoredTree p6 = make_path(6);
  CHECK_THROWS_AS(pump(p6, {0, 1}, {2, 3}, 0, 1), InputError);
  CHECK_THROWS_AS(pump(p6, {0, 1}, {2, 3}, 2, 0), InputError);
  // reversed order on the path
  CHECK_THROWS_AS(pump(p6, {3, 4}, {1, 2}, 2, 1), InputError);
  CHECK_THROWS_AS(pump_segment_size(p6, {3, 4}, {1, 2}), InputError);
  // e.u == f.v is excluded even though a path exists
  CHECK_THROWS_AS(pump(p6, {1, 2}, {0, 1}, 2, 1), InputError);
  // equal views at d=1 but not at d=2 near the path end
  ColoredTree p8 = make_path(8);
  CHECK(edge_view_code(edge_view(p8, 0, 1, 2)) != edge_view_code(edge_view(p8, 3, 4, 2)));
  CHECK_THROWS_AS(pump(p8, {0, 1}, {3, 4}, 2, 2), InputError);
  // non-edges
  CHECK_THROWS_AS(pump(p6, {0, 2}, {3, 4}, 2, 1), InputError);
}

TEST_CASE("pump: contiguous fallback pair on P_3") {
  ColoredTree p3 = make_path(3);
  auto pr = find_equal_view_edge_pair(p3, 1);
  REQUIRE(pr.has_value());
  CHECK(pr->first.u == 0);
  CHECK(pr->first.v == 1);
  CHECK(pr->second.u == 1);
  CHECK(pr->second.v == 2);
  CHECK(pump_segment_size(p3, pr->first, pr->second) == 1);
  ColoredTree t4 = pump(p3, pr->first, pr->second, 4, 1);
  CHECK(trees_isomorphic(t4, make_path(6)));
}

TEST_CASE("pump: found pairs pump within the memorized view language") {
  std::mt19937_64 rng(47);
  int found = 0;
  std::vector<ColoredTree> inputs;
  for (int n = 5; n <= 12; ++n) inputs.push_back(make_path(n));
  ColoredTree alt = make_path(8);
  alt.c = 2;
  for (int v = 0; v < 8; ++v) alt.colors[v] = 1 + v % 2;
  inputs.push_back(alt);
  for (int trial = 0; trial < 40; ++trial)
    inputs.push_back(oracle::random_tree(6 + static_cast<int>(rng() % 7),
                                         1 + static_cast<int>(rng() % 2), rng));
  for (const ColoredTree& t : inputs) {
    for (int d = 1; d <= 2; ++d) {
      auto pr = find_equal_view_edge_pair(t, d);
      if (!pr) continue;
      ++found;
      auto [e, f] = *pr;
      CHECK(edge_view_code(edge_view(t, e.u, e.v, d)) == edge_view_code(edge_view(t, f.u, f.v, d)));
      CHECK(path_order_ok(t, e, f));
      CheckerSpec mem = make_view_memorizing_checker(t, d);
      long long seg = pump_segment_size(t, e, f);
      CHECK(seg >= 1);
      for (int i = 1; i <= 4; ++i) {
        ColoredTree ti = pump(t, e, f, i, d);
        CHECK(is_tree(ti));
        CHECK(ti.n() == t.n() + (i - 1) * seg);
        CHECK(subset_of(code_set(ti, d), code_set(t, d)));
        CHECK(accepts(mem, ti).accepted);
        if (i == 1) CHECK(trees_isomorphic(ti, t));
      }
    }
  }
  CHECK(found >= 20);
}

TEST_CASE("duplicate: cycle edge doubles the cycle") {
  ColoredGraph c6 = make_cycle(6);
  ColoredGraph h = duplicate(c6, {0, 1});
  CHECK(h.n() == 12);
  CHECK(h.edges.size() == 12);
  CHECK(is_connected(h));
  for (int v : degrees(h)) CHECK(v == 2);
  CHECK(diameter(h) == 6);  // C_12
  CHECK_THROWS_AS(duplicate(c6, {0, 2}), InputError);
}

TEST_CASE("duplicate: bridge edge disconnects into two copies") {
  ColoredTree p4 = make_path(4);
  p4.colors = {1, 2, 1, 2};
  p4.c = 2;
  ColoredGraph h = duplicate(p4, {1, 2});
  CHECK(h.n() == 8);
  CHECK_FALSE(is_connected(h));
  for (int v = 0; v < 4; ++v) CHECK(h.colors[v + 4] == p4.colors[v]);
  auto dist = oracle::bfs(h, 0);
  std::vector<int> comp;
  for (int v = 0; v < 8; ++v)
    if (dist[v] >= 0) comp.push_back(v);
  CHECK(comp == std::vector<int>{0, 1, 6, 7});
  // the surviving component re-glues the u-side with the copied v-side
  CHECK(trees_isomorphic(induced(h, comp), p4));
}

TEST_CASE("duplicate: cross distance law on unicyclic graphs") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);
    ColoredGraph g = oracle::random_tree(n, 1 + static_cast<int>(rng() % 3), rng);
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    bool adjacent = false;
    for (auto& e : g.edges)
      adjacent |= (e.first == a && e.second == b) || (e.first == b && e.second == a);
    if (a == b || adjacent) {
      --trial;
      continue;
    }
    g.edges.push_back({a, b});
    // base distance with uv removed
    ColoredGraph base = g;
    base.edges.pop_back();
    int d0 = oracle::bfs(base, a)[b];
    REQUIRE(d0 >= 2);

    ColoredGraph h = duplicate(g, {a, b});
    CHECK(is_connected(h));
    // drop the cross edge (a, b+n) and measure the detour it forced
    ColoredGraph cut = h;
    std::erase_if(cut.edges, [&](const std::pair<int, int>& e) {
      return (e.first == a && e.second == b + n) || (e.first == b + n && e.second == a);
    });
    CHECK(oracle::bfs(cut, a)[b + n] == 2 * d0 + 1);
  }
}

TEST_CASE("find_equal_degree_pair_path: smallest path hit is P_6") {
  CHECK_FALSE(find_equal_degree_pair_path(make_path(4)).has_value());
  CHECK_FALSE(find_equal_degree_pair_path(make_path(5)).has_value());
  CHECK_FALSE(find_equal_degree_pair_path(make_star(5)).has_value());
  auto pr = find_equal_degree_pair_path(make_path(6));
  REQUIRE(pr.has_value());
  CHECK(pr->first.u == 1);
  CHECK(pr->first.v == 2);
  CHECK(pr->second.u == 3);
  CHECK(pr->second.v == 4);

  // monotone backbone degrees leave nothing to pair up
  for (int b = 2; b <= 7; ++b)
    CHECK_FALSE(find_equal_degree_pair_path(gen_increasing_caterpillar(b)).has_value());

  std::mt19937_64 rng(67);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ColoredTree t = oracle::random_tree(6 + static_cast<int>(rng() % 8), 1, rng);
    auto q = find_equal_degree_pair_path(t);
    if (!q) continue;
    ++found;
    auto deg = degrees(t);
    auto [e, f] = *q;
    CHECK(deg[e.u] == deg[f.u]);
    CHECK(deg[e.v] == deg[f.v]);
    CHECK(std::set<int>{e.u, e.v, f.u, f.v}.size() == 4);
    CHECK(path_order_ok(t, e, f));
  }
  CHECK(found >= 20);
}

TEST_CASE("find_zigzag: hand caterpillar and monotone negatives") {
  // backbone degrees 2,3,2,5,4,5: an up-dip then a down-dip
  ColoredTree t = caterpillar({1, 1, 0, 3, 2, 4});
  REQUIRE(t.n() == 17);
  auto z = find_zigzag(t);
  REQUIRE(z.has_value());
  check_zigzag(t, *z);

  CHECK_FALSE(find_zigzag(make_path(12)).has_value());
  CHECK_FALSE(find_zigzag(make_star(9)).has_value());
  CHECK_FALSE(find_zigzag(make_complete_binary(4)).has_value());
  CHECK_FALSE(find_zigzag(make_cubic(3)).has_value());
  for (int b = 2; b <= 7; ++b)
    CHECK_FALSE(find_zigzag(gen_increasing_caterpillar(b)).has_value());
}

TEST_CASE("find_zigzag: agreement with the brute scan") {
  // free-tree census of zigzag-positive shapes
  std::map<int, int> hits;
  for (int n = 2; n <= 13; ++n) {
    int cnt = 0;
    for_each_free_tree(n, [&](const ColoredTree& t) {
      bool brute = oracle::brute_zigzag(t);
      auto z = find_zigzag(t);
      CHECK(brute == z.has_value());
      if (z) {
        check_zigzag(t, *z);
        ++cnt;
      }
    });
    hits[n] = cnt;
  }
  for (int n = 2; n <= 10; ++n) CHECK(hits[n] == 0);
  CHECK(hits[11] == 1);
  CHECK(hits[12] == 6);
  CHECK(hits[13] == 24);

  std::mt19937_64 rng(7);
  int pos = 0;
  for (int trial = 0; trial < 300; ++trial) {
    ColoredTree t = oracle::random_tree(14 + trial % 3, 1, rng);
    auto z = find_zigzag(t);
    CHECK(oracle::brute_zigzag(t) == z.has_value());
    if (z) {
      check_zigzag(t, *z);
      ++pos;
    }
  }
  CHECK(pos >= 10);
}

TEST_CASE("useful_pairs: matches the brute path scan") {
  int checked = 0;
  for (int n = 2; n <= 7; ++n)
    enumerate_colored_trees(n, 2, [&](const ColoredTree& t) {
      ++checked;
      auto got = useful_pairs({t}, 2);
      std::set<std::pair<int, int>> gotset;
      for (ColorPair p : got) gotset.insert({p.c1, p.c2});
      CHECK(gotset == brute_useful(t));
      for (ColorPair p : got) {
        auto w = useful_witness({t}, p);
        REQUIRE(w.has_value());
        CHECK(w->pair == p);
        check_useful_witness(*w);
      }
    });
  CHECK(checked > 500);

  // multi-tree input unions per-tree results
  ColoredTree a = make_path(5), b = make_path(6);
  for (int v = 0; v < 6; ++v) b.colors[v] = 2;
  a.c = b.c = 2;
  auto both = useful_pairs({a, b}, 2);
  CHECK(both.size() == 2);
  CHECK(useful_witness({a, b}, ColorPair{1, 1}).has_value());
  CHECK(useful_witness({a, b}, ColorPair{2, 2}).has_value());
  CHECK_FALSE(useful_witness({a, b}, ColorPair{1, 2}).has_value());
  CHECK_THROWS_AS(useful_pairs({b}, 1), InputError);  // color out of palette

  // stars have no vertex-disjoint pair of arcs on a path
  CHECK(useful_pairs({ColoredTree(make_star(6))}, 1).empty());
}

TEST_CASE("order_relation: paths give only a weak self-edge") {
  OrderRelation rel = order_relation({ColoredTree(make_path(10))}, 1);
  REQUIRE(rel.useful.size() == 1);
  CHECK(rel.useful[0] == ColorPair{1, 1});
  REQUIRE(rel.edges.size() == 1);
  const OrderWitness& w = rel.edges[0];
  CHECK(w.from == w.to);
  check_order_witness(w);
  CHECK_FALSE(witness_strong(w));  // nested chain arcs only
  CHECK(rel.non_strict);
  CHECK(rel.closure == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(rel.longest_chain.size() == 1);
  CHECK_THROWS_AS(build_logcase_family(w, 2), InputError);
}

TEST_CASE("order_relation: the cubic tree carries a strong self-edge") {
  ColoredTree cub = make_cubic(3);
  OrderRelation rel = order_relation({cub}, 1);
  REQUIRE(rel.useful.size() == 1);
  REQUIRE(rel.edges.size() == 1);
  const OrderWitness& w = rel.edges[0];
  CHECK(w.from == ColorPair{1, 1});
  CHECK(w.to == ColorPair{1, 1});
  check_order_witness(w);
  CHECK(witness_strong(w));
  CHECK(rel.non_strict);  // self edge still makes the order non-strict
  CHECK(trees_isomorphic(w.tree, cub));
}

TEST_CASE("order_relation: rake corpus, all witnesses validate") {
  std::vector<ColoredTree> rakes{gen_k_rake(2, 3), gen_k_rake(2, 4), gen_k_rake(2, 5)};
  OrderRelation rel = order_relation(rakes, 6);
  CHECK(rel.useful.size() == 8);
  CHECK(rel.edges.size() == 24);
  int strong = 0;
  for (const OrderWitness& w : rel.edges) {
    check_order_witness(w);
    strong += witness_strong(w);
  }
  CHECK(strong == 6);  // exactly the edges into the sink pair (4,5)
  for (const OrderWitness& w : rel.edges)
    if (witness_strong(w)) CHECK(w.to == ColorPair{4, 5});
  CHECK(rel.longest_chain.size() == 4);
  // closure contains every direct edge
  auto idx = [&](ColorPair p) {
    return static_cast<int>(std::find(rel.useful.begin(), rel.useful.end(), p) -
                            rel.useful.begin());
  };
  std::set<std::pair<int, int>> clo(rel.closure.begin(), rel.closure.end());
  for (const OrderWitness& w : rel.edges) CHECK(clo.count({idx(w.from), idx(w.to)}) == 1);
  // and is transitively closed
  for (auto [i, j] : clo)
    for (auto [k, l] : clo)
      if (j == k) CHECK(clo.count({i, l}) == 1);
}

TEST_CASE("depump: collapses paths and keeps branch pairs distinct") {
  RootedTree out = depump({ColoredTree(make_path(10)), 0});
  CHECK(out.t.n() == 2);
  CHECK(height_of(out.t, out.root) == 1);

  // a star is already collapsed
  ColoredTree st = make_star(3);
  st.c = 2;
  st.colors = {1, 2, 2, 2};
  RootedTree kept = depump({st, 0});
  CHECK(trees_isomorphic(kept.t, st));

  CHECK_THROWS_AS(depump({ColoredTree(make_path(3)), 5}), InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng() % 39);
    int c = 1 + static_cast<int>(rng() % 3);
    ColoredTree t = oracle::random_tree(n, c, rng);
    RootedTree in{t, static_cast<int>(rng() % n)};
    RootedTree r = depump(in);
    CHECK(is_tree(r.t));
    CHECK(height_of(r.t, r.root) <= c * c);
    CHECK(branch_pairs_distinct(r.t, r.root));
    auto inp = arc_pairs(t, in.root), outp = arc_pairs(r.t, r.root);
    for (auto& p : outp) CHECK(inp.count(p) == 1);
  }

  // ordering pairs by the relation must preserve the same guarantees
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 13);
    int c = 1 + static_cast<int>(rng() % 3);
    ColoredTree t = oracle::random_tree(n, c, rng);
    RootedTree in{t, static_cast<int>(rng() % n)};
    OrderRelation rel = order_relation({t}, c);
    RootedTree r = depump(in, &rel);
    CHECK(height_of(r.t, r.root) <= c * c);
    CHECK(branch_pairs_distinct(r.t, r.root));
  }
}

TEST_CASE("build_logcase_family: doubling growth from the cubic witness") {
  OrderRelation rel = order_relation({ColoredTree(make_cubic(3))}, 1);
  REQUIRE(rel.edges.size() == 1);
  const OrderWitness& w = rel.edges[0];
  REQUIRE(witness_strong(w));

  CHECK(trees_isomorphic(build_logcase_family(w, 1), w.tree));
  CheckerSpec bin = preset_checker("binary");
  std::vector<int> sizes{30, 54, 102, 198, 390, 774, 1542};
  std::vector<int> diams{7, 9, 12, 16, 20, 24, 28};
  for (int i = 1; i <= 7; ++i) {
    ColoredTree ti = build_logcase_family(w, i);
    CHECK(is_tree(ti));
    CHECK(ti.n() == sizes[i - 1]);
    CHECK(ti.n() == 6 + 24 * (1 << (i - 1)));
    CHECK(diameter(ti) == diams[i - 1]);
    CHECK(accepts(bin, ti).accepted);
  }
  CHECK_THROWS_AS(build_logcase_family(w, 0), InputError);
  CHECK_THROWS_AS(build_logcase_family(w, 25), InputError);

  // witnesses of distinct pairs are rejected
  std::vector<ColoredTree> rakes{gen_k_rake(2, 3), gen_k_rake(2, 4), gen_k_rake(2, 5)};
  OrderRelation rr = order_relation(rakes, 6);
  for (const OrderWitness& e : rr.edges)
    if (witness_strong(e)) CHECK_THROWS_AS(build_logcase_family(e, 2), InputError);
}

TEST_CASE("build_chain_rakes: empty chain pumps the usefulness witness") {
  auto uw = useful_witness({ColoredTree(make_path(5))}, ColorPair{1, 1});
  REQUIRE(uw.has_value());
  check_useful_witness(*uw);
  for (int N = 1; N <= 6; ++N) {
    ColoredTree s = build_chain_rakes({}, *uw, N);
    CHECK(s.n() == 5 + 2 * (N - 1));
    CHECK(trees_isomorphic(s, make_path(5 + 2 * (N - 1))));
  }
}

TEST_CASE("build_chain_rakes: one strong link grows a sqrt-diameter family") {
  std::vector<ColoredTree> rakes{gen_k_rake(2, 3), gen_k_rake(2, 4), gen_k_rake(2, 5)};
  OrderRelation rel = order_relation(rakes, 6);
  const OrderWitness* link = nullptr;
  for (const OrderWitness& e : rel.edges)
    if (e.from == ColorPair{1, 2} && e.to == ColorPair{4, 5}) link = &e;
  REQUIRE(link != nullptr);
  REQUIRE(witness_strong(*link));
  auto last = useful_witness(rakes, ColorPair{4, 5});
  REQUIRE(last.has_value());

  CheckerSpec rk = make_rake_checker(2);
  std::vector<int> sizes{17, 31, 51, 77, 109};
  std::vector<int> diams{11, 19, 28, 37, 46};
  for (int N = 1; N <= 5; ++N) {
    ColoredTree s = build_chain_rakes({*link}, *last, N);
    CHECK(is_tree(s));
    CHECK(s.n() == sizes[N - 1]);
    CHECK(s.n() == 3 * N * N + 5 * N + 9);
    CHECK(diameter(s) == diams[N - 1]);
    CHECK(accepts(rk, s).accepted);
  }

  // weak links and mismatched usefulness witnesses are rejected
  const OrderWitness* weak = nullptr;
  for (const OrderWitness& e : rel.edges)
    if (!witness_strong(e)) weak = &e;
  REQUIRE(weak != nullptr);
  auto weak_last = useful_witness(rakes, weak->to);
  REQUIRE(weak_last.has_value());
  CHECK_THROWS_AS(build_chain_rakes({*weak}, *weak_last, 2), InputError);
  auto wrong = useful_witness(rakes, ColorPair{1, 2});
  REQUIRE(wrong.has_value());
  CHECK_THROWS_AS(build_chain_rakes({*link}, *wrong, 2), InputError);
}
