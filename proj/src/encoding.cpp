#include "treechk/encoding.hpp"

#include <algorithm>
#include <map>

#include "treechk/canonical.hpp"
#include "treechk/enumerate.hpp"

namespace treechk {

namespace {

// C(v+k, k) with saturation; k stays small (c-1), v modest
long long multiset_count(int k, long long v) {
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (v + i) / i;
    if (r > (__int128)4e18) return (long long)4e18;
  }
  return static_cast<long long>(r);
}

// non-increasing c-tuple <-> 1-based lexicographic rank
long long tuple_rank(const std::vector<long long>& x) {
  const int c = static_cast<int>(x.size());
  long long below = 0;
  for (int j = 0; j < c; ++j)
    for (long long v = 0; v < x[j]; ++v) below += multiset_count(c - 1 - j, v);
  return below + 1;
}

std::vector<long long> tuple_unrank(long long i, int c) {
  long long rem = i - 1;
  std::vector<long long> x(c, 0);
  long long bound = -1;  // -1 = unbounded
  for (int j = 0; j < c; ++j) {
    long long v = 0;
    while (true) {
      long long cnt = multiset_count(c - 1 - j, v);
      if (rem < cnt) break;
      rem -= cnt;
      ++v;
      if (bound >= 0 && v > bound) throw InputError("tuple_unrank: rank out of range");
    }
    x[j] = v;
    bound = v;
  }
  return x;
}

const std::vector<ColoredTree>& height_enum_lists(int k, int maxh) {
  static std::map<std::pair<int, int>, std::vector<ColoredTree>> memo;
  auto key = std::pair{k, maxh};
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, rooted_trees_by_height(k, maxh)).first;
  return it->second;
}

int tree_height_from(const ColoredTree& t, int root) {
  Rooted r = root_tree(t, root);
  int h = 0;
  for (int v = 0; v < t.n(); ++v) h = std::max(h, r.depth[v]);
  return h;
}

bool is_bare_leaf_tree(const ColoredTree& t) { return t.n() == 1 && t.colors[0] == 1; }

// star with all colors 1: root plus sigma leaves
bool star_shape(const ColoredTree& t, int root, long long& sigma) {
  Rooted r = root_tree(t, root);
  for (int v = 0; v < t.n(); ++v) {
    if (t.colors[v] != 1) return false;
    if (r.depth[v] > 1) return false;
  }
  sigma = t.n() - 1;
  return true;
}

}  // namespace

ColoredTree letter_tree(const EncodingSpec& enc, int i) {
  if (i < 1) throw InputError("letter_tree: letters are 1-based");
  switch (enc.kind) {
    case EncodingSpec::Kind::StarD2:
      return make_star(i);
    case EncodingSpec::Kind::ColoredStarD2: {
      auto x = tuple_unrank(i, enc.c);
      ColoredTree t;
      t.c = enc.c;
      t.colors.push_back(1);
      for (int col = 1; col <= enc.c; ++col)
        for (long long r = 0; r < x[col - 1]; ++r) {
          t.colors.push_back(col);
          t.edges.push_back({0, t.n() - 1});
        }
      return t;
    }
    case EncodingSpec::Kind::HeightEnum: {
      if (enc.d < 3) throw InputError("HeightEnum encoding needs d >= 3");
      long long rest = i;
      for (int k = 1;; ++k) {
        const auto& list = height_enum_lists(k, enc.d - 1);
        if (rest <= static_cast<long long>(list.size())) {
          ColoredTree t = list[rest - 1];
          t.c = std::max(t.c, enc.c);
          return t;
        }
        rest -= static_cast<long long>(list.size());
        if (k > 64) throw InputError("letter_tree: index too large");
      }
    }
  }
  throw InputError("letter_tree: bad kind");
}

int letter_tree_size(const EncodingSpec& enc, int i) { return letter_tree(enc, i).n(); }

std::optional<int> letter_index(const EncodingSpec& enc, const ColoredTree& t, int root) {
  switch (enc.kind) {
    case EncodingSpec::Kind::StarD2: {
      long long sigma = 0;
      if (!star_shape(t, root, sigma) || sigma < 1) return std::nullopt;
      return static_cast<int>(sigma);
    }
    case EncodingSpec::Kind::ColoredStarD2: {
      if (t.colors[root] != 1) return std::nullopt;
      Rooted r = root_tree(t, root);
      std::vector<long long> x(enc.c, 0);
      for (int v = 0; v < t.n(); ++v) {
        if (v == root) continue;
        if (r.depth[v] != 1) return std::nullopt;
        if (t.colors[v] < 1 || t.colors[v] > enc.c) return std::nullopt;
        ++x[t.colors[v] - 1];
      }
      for (int j = 0; j + 1 < enc.c; ++j)
        if (x[j] < x[j + 1]) return std::nullopt;  // only non-increasing tuples encode
      return static_cast<int>(tuple_rank(x));
    }
    case EncodingSpec::Kind::HeightEnum: {
      for (int col : t.colors)
        if (col != 1) return std::nullopt;
      if (tree_height_from(t, root) > enc.d - 1) return std::nullopt;
      std::string code = rooted_code(t, root);
      long long offset = 0;
      for (int k = 1; k < t.n(); ++k)
        offset += static_cast<long long>(height_enum_lists(k, enc.d - 1).size());
      const auto& list = height_enum_lists(t.n(), enc.d - 1);
      for (size_t j = 0; j < list.size(); ++j)
        if (rooted_code(list[j], 0) == code) return static_cast<int>(offset + j + 1);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<PendantDecode> decode_pendant(const EncodingSpec& enc, bool padded,
                                            const std::vector<ColoredTree>& pendants) {
  const int mult = padded ? 6 : 3;
  PendantDecode out;
  const int cnt = static_cast<int>(pendants.size());
  if (padded) {
    int r6 = cnt % 6;
    out.last = r6 >= 3;
    out.m = out.last ? r6 - 3 : r6;
  } else {
    out.m = cnt % 3;
  }
  std::map<std::string, std::pair<long long, const ColoredTree*>> classes;
  for (const auto& p : pendants) {
    auto [it, fresh] = classes.try_emplace(rooted_code(p, 0), 0, &p);
    (void)fresh;
    ++it->second.first;
  }
  // pending leaves: m bare color-1 leaves
  if (out.m > 0) {
    std::string bare = rooted_code(make_star(0), 0);
    auto it = classes.find(bare);
    if (it == classes.end() || it->second.first < out.m) return std::nullopt;
    it->second.first -= out.m;
    if (it->second.first == 0) classes.erase(it);
  }
  if (out.last) {
    // exactly one class holds the three padding stars
    std::string star_code;
    for (auto& [code, cl] : classes)
      if (cl.first % 6 == 3) {
        if (!star_code.empty()) return std::nullopt;
        star_code = code;
      }
    if (star_code.empty()) return std::nullopt;
    auto& cl = classes[star_code];
    if (!star_shape(*cl.second, 0, out.sigma)) return std::nullopt;
    cl.first -= 3;
    if (cl.first == 0) classes.erase(star_code);
  }
  // remaining classes split into `mult` identical copies of the letter forest
  ColoredTree f;
  f.c = std::max(1, enc.c);
  f.colors.push_back(1);
  for (auto& [code, cl] : classes) {
    if (cl.first % mult != 0) return std::nullopt;
    for (long long r = 0; r < cl.first / mult; ++r) {
      int base = f.n();
      f = disjoint_union(f, *cl.second);
      f.edges.push_back({0, base});
    }
  }
  auto idx = letter_index(enc, f, 0);
  if (!idx) return std::nullopt;
  out.letter = *idx;
  return out;
}

namespace {

void attach_copy(ColoredTree& t, int host, const ColoredTree& sub, int sub_root) {
  int base = t.n();
  t.c = std::max(t.c, sub.c);
  t.colors.insert(t.colors.end(), sub.colors.begin(), sub.colors.end());
  for (auto [u, v] : sub.edges) t.edges.push_back({u + base, v + base});
  t.edges.push_back({host, sub_root + base});
}

std::vector<ColoredTree> root_child_subtrees(const ColoredTree& f, int root) {
  Rooted r = root_tree(f, root);
  std::vector<ColoredTree> out;
  for (int ch : r.children[root]) {
    auto verts = subtree_vertices(r, ch);
    std::sort(verts.begin(), verts.end());
    // keep the child first so the induced subtree is rooted at 0
    std::vector<int> order{ch};
    for (int v : verts)
      if (v != ch) order.push_back(v);
    out.push_back(induced(f, order));
  }
  return out;
}

void check_encode_args(const Word& s, const EncodingSpec& enc, int d) {
  if (d < 2) throw InputError("caterpillar encodings need d >= 2");
  if (enc.kind == EncodingSpec::Kind::HeightEnum && enc.d != d)
    throw InputError("HeightEnum encoding is tied to its d");
  if (s.empty()) throw InputError("empty word");
  for (int a : s)
    if (a < 1) throw InputError("letters are 1-based");
}

ColoredTree encode_core(const Word& s, const EncodingSpec& enc, int d, int copies,
                        long long sigma_last) {
  check_encode_args(s, enc, d);
  const int p = static_cast<int>(s.size());
  ColoredTree t;
  t.c = std::max(1, enc.c);
  t.colors.assign(p + 2, 1);  // backbone r_0 .. r_{p+1}
  for (int i = 0; i + 1 <= p + 1; ++i) t.edges.push_back({i, i + 1});
  // tails: bare path of d vertices below each end
  for (int end : {0, p + 1}) attach_copy(t, end, make_path(d), 0);
  for (int i = 1; i <= p; ++i) {
    ColoredTree f = letter_tree(enc, s[i - 1]);
    auto subs = root_child_subtrees(f, 0);
    for (int copy = 0; copy < copies; ++copy)
      for (const auto& sub : subs) attach_copy(t, i, sub, 0);
    for (int leaf = 0; leaf < i % 3; ++leaf) attach_copy(t, i, make_star(0), 0);
    if (sigma_last >= 0 && i == p)
      for (int r = 0; r < 3; ++r) attach_copy(t, i, make_star(static_cast<int>(sigma_last)), 0);
  }
  return t;
}

}  // namespace

ColoredTree encode_caterpillar(const Word& s, const EncodingSpec& enc, int d) {
  return encode_core(s, enc, d, 3, -1);
}

ColoredTree encode_padded(const Word& s, const EncodingSpec& enc, int d, long long sigma) {
  if (sigma < 0) throw InputError("encode_padded: sigma must be >= 0");
  return encode_core(s, enc, d, 6, sigma);
}

long long caterpillar_size(const Word& s, const EncodingSpec& enc, int d) {
  check_encode_args(s, enc, d);
  long long n = static_cast<long long>(s.size()) + 2 + 2 * d;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i)
    n += 3LL * (letter_tree_size(enc, s[i - 1]) - 1) + i % 3;
  return n;
}

long long padded_size(const Word& s, const EncodingSpec& enc, int d, long long sigma) {
  check_encode_args(s, enc, d);
  long long n = static_cast<long long>(s.size()) + 2 + 2 * d + 3 * (sigma + 1);
  for (int i = 1; i <= static_cast<int>(s.size()); ++i)
    n += 6LL * (letter_tree_size(enc, s[i - 1]) - 1) + i % 3;
  return n;
}

int caterpillar_diameter(int p, int d) { return p + 2 * d + 1; }

std::vector<int> peel_numbers(const ColoredTree& t) {
  const int n = t.n();
  auto adj = adjacency(t);
  std::vector<int> peel(n, 1);
  for (int v = 0; v < n; ++v) {
    // depth of each neighbor branch via one BFS with first-step tracking
    std::vector<int> first(n, -1), dist(n, -1);
    std::vector<int> q{v};
    dist[v] = 0;
    std::vector<int> best;  // per neighbor slot
    std::map<int, int> branch_depth;
    for (size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          first[w] = (u == v) ? w : first[u];
          branch_depth[first[w]] = std::max(branch_depth[first[w]], dist[w]);
          q.push_back(w);
        }
    }
    std::vector<int> depths;
    for (auto [_, dep] : branch_depth) depths.push_back(dep);
    std::sort(depths.rbegin(), depths.rend());
    peel[v] = 1 + (depths.size() >= 2 ? depths[1] : 0);
  }
  return peel;
}

namespace {

struct BackboneScan {
  std::vector<int> backbone;                 // ordered P* path
  std::vector<std::vector<ColoredTree>> pendants;  // per backbone vertex
};

BackboneScan scan_backbone(const ColoredTree& t, int d) {
  validate_tree(t);
  auto peel = peel_numbers(t);
  std::vector<int> pstar;
  for (int v = 0; v < t.n(); ++v)
    if (peel[v] > d) pstar.push_back(v);
  if (pstar.size() < 3) throw InputError("decode: backbone too short");
  std::vector<char> in_p(t.n(), 0);
  for (int v : pstar) in_p[v] = 1;
  auto adj = adjacency(t);
  std::vector<int> ends;
  for (int v : pstar) {
    int k = 0;
    for (int w : adj[v]) k += in_p[w];
    if (k == 1) ends.push_back(v);
    if (k > 2) throw InputError("decode: backbone is not a path");
  }
  if (ends.size() != 2) throw InputError("decode: backbone is not a path");
  BackboneScan out;
  int prev = -1, cur = ends[0];
  while (true) {
    out.backbone.push_back(cur);
    int next = -1;
    for (int w : adj[cur])
      if (in_p[w] && w != prev) next = w;
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (out.backbone.size() != pstar.size()) throw InputError("decode: backbone is not a path");
  // pendant subtrees: components of t minus the backbone, attached per vertex
  Rooted r = root_tree(t, out.backbone.front());
  out.pendants.resize(out.backbone.size());
  std::map<int, int> pos;
  for (size_t i = 0; i < out.backbone.size(); ++i) pos[out.backbone[i]] = static_cast<int>(i);
  for (size_t i = 0; i < out.backbone.size(); ++i) {
    int b = out.backbone[i];
    for (int w : adj[b]) {
      if (in_p[w]) continue;
      if (r.parent[b] == w)
        throw InputError("decode: non-backbone vertex above the backbone");
      auto verts = subtree_vertices(r, w);
      std::vector<int> order{w};
      for (int v : verts)
        if (v != w) order.push_back(v);
      out.pendants[i].push_back(induced(t, order));
    }
  }
  return out;
}

bool tail_ok(const ColoredTree& t, int backbone_vertex,
             const std::vector<ColoredTree>& pend, int d) {
  if (t.colors[backbone_vertex] != 1) return false;
  if (pend.size() != 1) return false;
  const ColoredTree& path = pend[0];
  if (path.n() != d) return false;
  auto deg = degrees(path);
  int leaves = 0;
  for (int v = 0; v < path.n(); ++v) {
    if (path.colors[v] != 1) return false;
    if (deg[v] > 2) return false;
    if (deg[v] <= 1) ++leaves;
  }
  if (d == 1) return leaves == 1 && path.n() == 1;
  if (leaves != 2) return false;
  return deg[0] == 1;  // rooted at the attachment end
}

struct CoreDecode {
  Word word;
  long long sigma = 0;
};

CoreDecode decode_core(const ColoredTree& t, const EncodingSpec& enc, int d, bool padded) {
  auto scan = scan_backbone(t, d);
  const int p = static_cast<int>(scan.backbone.size()) - 2;
  if (p < 1) throw InputError("decode: no letter positions");
  if (!tail_ok(t, scan.backbone.front(), scan.pendants.front(), d) ||
      !tail_ok(t, scan.backbone.back(), scan.pendants.back(), d))
    throw InputError("decode: malformed end tails");
  std::vector<PendantDecode> dec(p);
  for (int i = 1; i <= p; ++i) {
    if (t.colors[scan.backbone[i]] != 1) throw InputError("decode: backbone color");
    auto pd = decode_pendant(enc, padded, scan.pendants[i]);
    if (!pd) throw InputError("decode: bad pendant forest at position " + std::to_string(i));
    dec[i - 1] = *pd;
  }
  auto fits = [&](bool reversed) {
    for (int i = 1; i <= p; ++i) {
      const auto& pd = dec[reversed ? p - i : i - 1];
      if (pd.m != i % 3) return false;
      if (padded && pd.last != (i == p)) return false;
      if (!padded && pd.last) return false;
    }
    return true;
  };
  bool fwd = fits(false), bwd = fits(true);
  if (!fwd && !bwd) throw InputError("decode: positions do not satisfy the mod-3 pattern");
  bool reversed = !fwd;
  CoreDecode out;
  out.word.resize(p);
  for (int i = 1; i <= p; ++i) out.word[i - 1] = dec[reversed ? p - i : i - 1].letter;
  if (padded) out.sigma = dec[reversed ? 0 : p - 1].sigma;
  return out;
}

}  // namespace

Word decode_caterpillar(const ColoredTree& t, const EncodingSpec& enc, int d) {
  return decode_core(t, enc, d, false).word;
}

PaddedDecode decode_padded(const ColoredTree& t, const EncodingSpec& enc, int d) {
  auto core = decode_core(t, enc, d, true);
  return {core.word, core.sigma};
}

}  // namespace treechk
