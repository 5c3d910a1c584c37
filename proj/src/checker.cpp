#include "treechk/checker.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace treechk {

namespace {

// 256-bit saturating helper for exact integer roots of n^num.
struct U256 {
  std::array<std::uint64_t, 4> w{};
  bool sat = false;
};

U256 u256_one() {
  U256 r;
  r.w[0] = 1;
  return r;
}

void u256_mul(U256& a, std::uint64_t m) {
  if (a.sat) return;
  unsigned __int128 carry = 0;
  for (auto& limb : a.w) {
    unsigned __int128 cur = (unsigned __int128)limb * m + carry;
    limb = (std::uint64_t)cur;
    carry = cur >> 64;
  }
  if (carry) a.sat = true;
}

U256 u256_pow(std::uint64_t base, long long e) {
  U256 r = u256_one();
  for (long long i = 0; i < e && !r.sat; ++i) u256_mul(r, base);
  return r;
}

// -1 / 0 / +1; saturated compares above every exact value.
int u256_cmp(const U256& a, const U256& b) {
  if (a.sat || b.sat) {
    if (a.sat && b.sat) return 0;
    return a.sat ? 1 : -1;
  }
  for (int i = 3; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
  }
  return 0;
}

// floor(n^(num/den)) by binary search on r with r^den <= n^num.
long long ipow_root(long long n, long long num, long long den, bool ceil_mode) {
  U256 target = u256_pow((std::uint64_t)n, num);
  if (target.sat) {  // out of the exact domain; never hit at tested scales
    long double v = powl((long double)n, (long double)num / (long double)den);
    return ceil_mode ? (long long)ceill(v - 1e-9L) : (long long)floorl(v + 1e-9L);
  }
  std::uint64_t lo = 0, hi = num <= den ? (std::uint64_t)n + 1 : (std::uint64_t)2e18;
  while (lo < hi) {  // invariant: lo^den <= n^num < (hi+1)^den
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (u256_cmp(u256_pow(mid, den), target) <= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (!ceil_mode) return (long long)lo;
  return u256_cmp(u256_pow(lo, den), target) == 0 ? (long long)lo : (long long)lo + 1;
}

}  // namespace

long long TargetDiameter::operator()(long long n) const {
  if (n < 1) return -1;
  switch (kind) {
    case Kind::ConstantK:
      return k;
    case Kind::FloorPow:
    case Kind::CeilPow:
      if (num <= 0 || den <= 0) return -1;
      return ipow_root(n, num, den, kind == Kind::CeilPow);
    case Kind::FloorLog: {
      long long r = 0;
      for (long long x = n; x > 1; x >>= 1) ++r;
      return r;
    }
    case Kind::Table:
      if (n > (long long)table.size()) return -1;
      return table[n - 1];
  }
  return -1;
}

MyopicParams normalize_myopic(MyopicParams p, std::vector<std::string>* log) {
  auto note = [&](const std::string& s) {
    if (log) log->push_back(s);
  };
  if (p.plus.lo != 0) {
    p.plus.lo = 0;
    note("a_plus forced to 0");
  }
  if (p.equal.lo != 0 || p.equal.hi != 0) {
    bool had_upper = p.equal.hi > 0;
    p.equal = {0, 0};
    if (had_upper) {
      if (p.leaf.hi != kUnbounded) p.leaf.hi += 1;
      note("equal-degree neighbors dropped; b_leaf increased by 1");
    } else {
      note("a_equal forced to 0");
    }
  }
  if (p.leaf.lo != 0) {
    p.leaf.lo = 0;
    note("a_leaf forced to 0");
  }
  if (p.plus.hi > 1) {
    p.plus.hi = 1;
    note("b_plus capped at 1");
  }
  return p;
}

const char* regime_name(MyopicRegime r) {
  switch (r) {
    case MyopicRegime::Constant:
      return "Constant";
    case MyopicRegime::Log:
      return "Log";
    case MyopicRegime::LogOverLogLog:
      return "LogOverLogLog";
    case MyopicRegime::Sqrt:
      return "Sqrt";
    case MyopicRegime::Linear:
      return "Linear";
    case MyopicRegime::Unclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

MyopicRegime classify_myopic(const MyopicParams& raw) {
  MyopicParams p = normalize_myopic(raw);
  long long bl = p.leaf.hi, am = p.minus.lo, bm = p.minus.hi, bp = p.plus.hi;
  // degenerate grids first: no leaf neighbors / no descending edges / no
  // ascending edges; the structural path and star classes pin the first two
  if (bl == 0) return MyopicRegime::Constant;
  if (bm == 0) return bl == kUnbounded ? MyopicRegime::Constant : MyopicRegime::Linear;
  if (bp == 0) return MyopicRegime::Unclassified;
  if (bl == kUnbounded) return am <= 1 ? MyopicRegime::Sqrt : MyopicRegime::Log;
  return bm == kUnbounded ? MyopicRegime::LogOverLogLog : MyopicRegime::Constant;
}

int rake_color(int i, int j) { return 3 * (i - 1) + j; }

std::pair<int, int> rake_level_pos(int color) {
  return {(color - 1) / 3 + 1, (color - 1) % 3 + 1};
}

namespace {

// ---- radius-1 verdicts shared by the ball path and the enumeration pruner --

bool degree_set_ok(const CheckerSpec& spec, int deg) { return spec.degree_set.contains(deg); }

bool d1_rules_ok(const CheckerSpec& spec, int own, const std::vector<int>& nbr) {
  for (const auto& rule : spec.rules) {
    if (rule.own_color != own) continue;
    std::vector<long long> cnt(spec.c + 1, 0);
    for (int col : nbr) {
      if (col < 1 || col > spec.c) return false;
      ++cnt[col];
    }
    for (int col = 1; col <= spec.c; ++col) {
      const Interval& iv = col <= (int)rule.neighbor_counts.size()
                               ? rule.neighbor_counts[col - 1]
                               : Interval{0, 0};
      if (!iv.contains(cnt[col])) return false;
    }
    return true;
  }
  return false;  // no rule for this color
}

bool rake_ok(const CheckerSpec& spec, int own, const std::vector<int>& nbr) {
  int k = spec.rake_k;
  if (own < 1 || own > 3 * k) return false;
  if ((int)nbr.size() > 3) return false;
  auto [i, j] = rake_level_pos(own);
  int next = j % 3 + 1, prev = (j + 1) % 3 + 1;
  int same_next = 0, same_prev = 0, parent = 0, child = 0;
  for (int col : nbr) {
    if (col < 1 || col > 3 * k) return false;
    auto [iy, jy] = rake_level_pos(col);
    if (iy == i) {
      if (jy == next)
        ++same_next;
      else if (jy == prev)
        ++same_prev;
      else
        return false;
    } else if (iy == i - 1) {
      ++parent;
    } else if (iy == i + 1) {
      if (jy != 1) return false;
      ++child;
    } else {
      return false;
    }
  }
  if (child > 1 || (child == 1 && i >= k)) return false;
  bool start = same_next == 1 && same_prev == 0;
  bool end = same_next == 0 && same_prev == 1;
  bool interior = same_next == 1 && same_prev == 1;
  if (!start && !end && !interior) return false;
  // only a level path's first vertex attaches upward; the top level floats
  if (start) return parent == (i == 1 ? 0 : 1);
  return parent == 0;
}

// ---- ball bookkeeping for the radius-(d+1) caterpillar checkers ------------

struct Ball {
  const ColoredGraph* g = nullptr;
  Adjacency adj;
  int center = 0;
  int d = 2;

  int deg(int v) const { return (int)adj[v].size(); }
  int color(int v) const { return g->colors[v]; }
};

// Depth (from x) of the branch through neighbor y, capped at `cap`; exact
// below the cap. Only sound when x is within distance 1 of the ball center.
int branch_depth_capped(const Ball& b, int x, int y, int cap) {
  std::vector<int> dist(b.g->n(), -1);
  dist[x] = 0;
  dist[y] = 1;
  std::vector<int> q{y};
  int best = 1;
  for (size_t h = 0; h < q.size(); ++h) {
    int u = q[h];
    best = std::max(best, dist[u]);
    if (dist[u] >= cap) continue;
    for (int w : b.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return std::min(best, cap);
}

std::vector<int> branch_depths(const Ball& b, int x, int cap) {
  std::vector<int> ds;
  for (int y : b.adj[x]) ds.push_back(branch_depth_capped(b, x, y, cap));
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

// peel > d, i.e. at least two branches reach depth d
bool is_top(const Ball& b, int x) {
  auto ds = branch_depths(b, x, b.d);
  return ds.size() >= 2 && ds[1] >= b.d;
}

// exact peel number when !is_top(x)
int peel_below(const Ball& b, int x) {
  auto ds = branch_depths(b, x, b.d);
  return 1 + (ds.size() >= 2 ? ds[1] : 0);
}

// The away component of y (excluding x), rooted at local vertex 0 = y.
ColoredTree away_subtree(const Ball& b, int x, int y) {
  std::vector<int> keep{y};
  std::vector<char> seen(b.g->n(), 0);
  seen[x] = seen[y] = 1;
  for (size_t h = 0; h < keep.size(); ++h)
    for (int w : b.adj[keep[h]])
      if (!seen[w]) {
        seen[w] = 1;
        keep.push_back(w);
      }
  return induced(*b.g, keep);
}

// From x, neighbor y starts a hanging tail: bare color-1 path of exactly d
// vertices whose far end is a confirmed leaf. Sound when x is the center.
bool tail_dir(const Ball& b, int x, int y) {
  int prev = x, cur = y;
  for (int j = 1; j <= b.d; ++j) {
    if (b.color(cur) != 1) return false;
    if (j < b.d) {
      if (b.deg(cur) != 2) return false;
      int nxt = b.adj[cur][0] == prev ? b.adj[cur][1] : b.adj[cur][0];
      prev = cur;
      cur = nxt;
    } else {
      if (b.deg(cur) != 1) return false;
    }
  }
  return true;
}

// From x, neighbor y looks like a tail root: degree 2 and beyond it a bare
// color-1 chain of d more vertices (the chain's far end is policed by y).
bool endish_dir(const Ball& b, int x, int y) {
  if (b.color(y) != 1 || b.deg(y) != 2) return false;
  int prev = x, cur = y;
  for (int j = 1; j <= b.d; ++j) {
    int nxt = -1;
    for (int w : b.adj[cur])
      if (w != prev) {
        if (nxt != -1) return false;
        nxt = w;
      }
    if (nxt == -1) return false;
    prev = cur;
    cur = nxt;
    if (b.color(cur) != 1) return false;
    if (j <= b.d - 1 && b.deg(cur) != 2) return false;
  }
  return true;
}

// Letter data (position mod 3, letter index) of the backbone neighbor u as
// seen from the center: u's unique deep branch is its own continuation, the
// rest is its pendant. Deep pendant pieces (the d=2 padding stars) make the
// continuation ambiguous, so every deep branch is tried; u polices its own
// pendant exactly, the center only needs a consistent (m, letter).
struct SideInfo {
  int m = 0;
  int letter = 0;
};

std::optional<SideInfo> side_info(const Ball& b, const CheckerSpec& spec, int z, int u) {
  bool padded = spec.kind == CheckerSpec::Kind::PaddedDiameter;
  std::vector<int> aways, deep;
  for (int w : b.adj[u])
    if (w != z) {
      aways.push_back(w);
      if (branch_depth_capped(b, u, w, b.d) >= b.d) deep.push_back(w);
    }
  std::set<std::pair<int, int>> found;
  for (int cont : deep) {
    std::vector<ColoredTree> pendants;
    for (int w : aways)
      if (w != cont) pendants.push_back(away_subtree(b, u, w));
    if (auto de = decode_pendant(spec.enc, padded, pendants)) found.insert({de->m, de->letter});
  }
  if (found.size() != 1) return std::nullopt;
  return SideInfo{found.begin()->first, found.begin()->second};
}

bool caterpillar_verdict(const CheckerSpec& spec, const NodeView& view) {
  Ball b{&view.g, adjacency(view.g), view.center, spec.cat_d};
  if ((int)view.g.edges.size() >= view.g.n()) return false;  // cyclic ball
  if (view.g.n() == 1) return false;
  bool padded = spec.kind == CheckerSpec::Kind::PaddedDiameter;
  int z = b.center;

  if (!is_top(b, z)) {
    // off the backbone, peel numbers must increase toward it
    int own = peel_below(b, z);
    for (int y : b.adj[z])
      if (is_top(b, y) || peel_below(b, y) > own) return true;
    return false;
  }

  if (b.color(z) != 1) return false;

  // tail root: bare degree-2 junction between its tail and the backbone
  int tails = 0;
  for (int y : b.adj[z])
    if (tail_dir(b, z, y)) ++tails;
  if (b.deg(z) == 2 && tails == 1) {
    for (int y : b.adj[z])
      if (!tail_dir(b, z, y)) return is_top(b, y) && !endish_dir(b, z, y);
    return false;
  }
  if (tails != 0) return false;

  // letter position: classify directions, decode the own pendant
  int endish = 0;
  std::vector<SideInfo> sides;
  std::vector<ColoredTree> pendants;
  for (int y : b.adj[z]) {
    if (endish_dir(b, z, y)) {
      ++endish;
    } else if (is_top(b, y)) {
      auto si = side_info(b, spec, z, y);
      if (!si) return false;
      sides.push_back(*si);
    } else {
      pendants.push_back(away_subtree(b, z, y));
    }
  }
  auto de = decode_pendant(spec.enc, padded, pendants);
  if (!de) return false;
  const LanguageSpec& lang = spec.language;

  auto dcheck = [&]() {
    Word w = lang.word_from_last(de->letter);
    if ((int)(w.size() % 3) != de->m) return false;
    long long kk = padded_size(w, spec.enc, b.d, 0);
    long long delta = (long long)w.size() + 2 * b.d + 1;
    return spec.target(kk + 3 * de->sigma) == delta;
  };

  if (endish == 2 && sides.empty()) {  // single-letter word
    if (de->m != 1 || !lang.single_ok(de->letter)) return false;
    return padded ? de->last && dcheck() : !de->last;
  }
  if (endish == 1 && sides.size() == 1) {
    int mu = sides[0].m, lu = sides[0].letter;
    if (mu == (de->m + 1) % 3) {  // first letter, the side reads position 2
      if (de->m != 1 || !lang.start_ok(de->letter, lu)) return false;
      return !de->last;
    }
    if (mu == (de->m + 2) % 3) {  // last letter
      if (!lang.end_ok(lu, de->letter)) return false;
      return padded ? de->last && dcheck() : !de->last;
    }
    return false;
  }
  if (endish == 0 && sides.size() == 2) {  // interior letter
    if (de->last) return false;
    int want_prev = (de->m + 2) % 3, want_next = (de->m + 1) % 3;
    for (int o = 0; o < 2; ++o) {
      const SideInfo& a = sides[o];
      const SideInfo& c = sides[1 - o];
      if (a.m == want_prev && c.m == want_next)
        return lang.window_ok(a.letter, de->letter, c.letter);
    }
    return false;
  }
  return false;
}

bool myopic_verdict(const MyopicParams& p, const NodeView& view) {
  Adjacency adj = adjacency(view.g);
  int z = view.center;
  int degv = (int)adj[z].size();
  if (degv <= 1) return true;
  long long nl = 0, nm = 0, ne = 0, np = 0;
  for (int y : adj[z]) {
    int dy = (int)adj[y].size();
    if (dy <= 1)
      ++nl;
    else if (dy == degv - 1)
      ++nm;
    else if (dy == degv)
      ++ne;
    else if (dy == degv + 1)
      ++np;
    else
      return false;
  }
  if (!p.leaf.contains(nl)) return false;
  if (nm > p.minus.hi) return false;
  if (nm < p.minus.lo && degv > p.minus.lo) return false;  // low-degree exemption
  if (!p.equal.contains(ne)) return false;
  if (!p.plus.contains(np)) return false;
  return true;
}

std::vector<int> view_neighbor_colors(const NodeView& view) {
  std::vector<int> out;
  for (auto [a, bb] : view.g.edges) {
    if (a == view.center) out.push_back(view.g.colors[bb]);
    if (bb == view.center) out.push_back(view.g.colors[a]);
  }
  return out;
}

}  // namespace

bool node_verdict_view(const CheckerSpec& spec, const NodeView& w) {
  switch (spec.kind) {
    case CheckerSpec::Kind::DegreeSet:
    case CheckerSpec::Kind::Distance1Rules:
    case CheckerSpec::Kind::Rake:
      return d1_verdict(spec, w.g.colors[w.center], view_neighbor_colors(w));
    case CheckerSpec::Kind::SpecialCaterpillar:
    case CheckerSpec::Kind::PaddedDiameter:
      return caterpillar_verdict(spec, w);
    case CheckerSpec::Kind::DegreeMyopic:
      return myopic_verdict(spec.myopic, w);
    case CheckerSpec::Kind::Custom:
      if (!spec.custom) throw InputError("custom checker without a predicate");
      return spec.custom(w);
  }
  return false;
}

bool node_verdict(const CheckerSpec& spec, const ColoredGraph& g, int v) {
  return node_verdict_view(spec, node_view(g, v, spec.radius));
}

bool is_d1_kind(const CheckerSpec& spec) {
  return spec.kind == CheckerSpec::Kind::DegreeSet ||
         spec.kind == CheckerSpec::Kind::Distance1Rules ||
         spec.kind == CheckerSpec::Kind::Rake;
}

bool d1_verdict(const CheckerSpec& spec, int own_color, const std::vector<int>& neighbor_colors) {
  switch (spec.kind) {
    case CheckerSpec::Kind::DegreeSet:
      return degree_set_ok(spec, (int)neighbor_colors.size());
    case CheckerSpec::Kind::Distance1Rules:
      return d1_rules_ok(spec, own_color, neighbor_colors);
    case CheckerSpec::Kind::Rake:
      return rake_ok(spec, own_color, neighbor_colors);
    default:
      throw InputError("d1_verdict on a non-distance-1 checker");
  }
}

Verdict accepts(const CheckerSpec& spec, const ColoredGraph& g) {
  validate_graph(g);
  if (g.c != spec.c)
    throw InputError("palette mismatch: tree has c=" + std::to_string(g.c) + ", checker expects c=" +
                     std::to_string(spec.c));
  if (is_d1_kind(spec)) {
    Adjacency adj = adjacency(g);
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> nbr;
      for (int y : adj[v]) nbr.push_back(g.colors[y]);
      if (!d1_verdict(spec, g.colors[v], nbr)) return {false, v};
    }
    return {true, -1};
  }
  for (int v = 0; v < g.n(); ++v)
    if (!node_verdict(spec, g, v)) return {false, v};
  return {true, -1};
}

CheckerSpec make_degree_set_checker(IntervalSet degrees) {
  for (const auto& iv : degrees.parts)
    if (iv.lo > iv.hi) throw InputError("malformed degree interval");
  CheckerSpec s;
  s.kind = CheckerSpec::Kind::DegreeSet;
  s.c = 1;
  s.radius = 1;
  s.degree_set = degrees;
  s.name = degrees.contains(1) ? "degree-set" : "degree-set (1 outside S: only trivial trees)";
  return s;
}

CheckerSpec make_distance1_checker(int c, std::vector<Distance1Rule> rules) {
  if (c < 1) throw InputError("palette must be positive");
  for (const auto& r : rules) {
    if (r.own_color < 1 || r.own_color > c) throw InputError("rule color outside palette");
    if ((int)r.neighbor_counts.size() != c) throw InputError("rule must bound every color");
    for (const auto& iv : r.neighbor_counts)
      if (iv.lo > iv.hi) throw InputError("malformed count interval");
  }
  CheckerSpec s;
  s.kind = CheckerSpec::Kind::Distance1Rules;
  s.c = c;
  s.radius = 1;
  s.rules = std::move(rules);
  s.name = "distance-1 rules";
  return s;
}

CheckerSpec make_rake_checker(int k) {
  if (k < 1) throw InputError("rake level must be >= 1");
  CheckerSpec s;
  s.kind = CheckerSpec::Kind::Rake;
  s.c = 3 * k;
  s.radius = 1;
  s.rake_k = k;
  s.name = "rake k=" + std::to_string(k);
  return s;
}

namespace {

void validate_caterpillar_config(int d, const EncodingSpec& enc) {
  if (enc.kind == EncodingSpec::Kind::HeightEnum) {
    if (d < 3 || enc.d != d) throw InputError("malformed encoding: height family needs d >= 3");
  } else {
    if (d != 2 || enc.d != 2) throw InputError("malformed encoding: star families need d = 2");
  }
  if (enc.kind == EncodingSpec::Kind::ColoredStarD2 && enc.c < 1)
    throw InputError("malformed encoding: empty palette");
}

}  // namespace

CheckerSpec make_special_checker(int d, LanguageSpec lang, EncodingSpec enc) {
  validate_caterpillar_config(d, enc);
  CheckerSpec s;
  s.kind = CheckerSpec::Kind::SpecialCaterpillar;
  s.c = enc.kind == EncodingSpec::Kind::ColoredStarD2 ? enc.c : 1;
  s.cat_d = d;
  s.radius = d + 1;
  s.language = lang;
  s.enc = enc;
  s.name = "special caterpillar d=" + std::to_string(d);
  return s;
}

CheckerSpec make_padded_checker(int d, LanguageSpec lang, EncodingSpec enc, TargetDiameter target) {
  CheckerSpec s = make_special_checker(d, lang, enc);
  s.kind = CheckerSpec::Kind::PaddedDiameter;
  s.target = target;
  s.name = "padded exact-diameter d=" + std::to_string(d);
  return s;
}

CheckerSpec make_myopic_checker(MyopicParams params) {
  for (const Interval* iv : {&params.leaf, &params.minus, &params.equal, &params.plus})
    if (iv->lo > iv->hi || iv->lo < 0) throw InputError("malformed myopic bounds");
  CheckerSpec s;
  s.kind = CheckerSpec::Kind::DegreeMyopic;
  s.c = 1;
  s.radius = 2;
  s.myopic = params;
  s.name = "degree-myopic";
  return s;
}

CheckerSpec make_view_memorizing_checker(const ColoredTree& source, int radius) {
  validate_tree(source);
  if (radius < 1) throw InputError("radius must be >= 1");
  auto codes = std::make_shared<std::set<std::string>>();
  for (int v = 0; v < source.n(); ++v) codes->insert(node_view_code(node_view(source, v, radius)));
  CheckerSpec s;
  s.kind = CheckerSpec::Kind::Custom;
  s.c = source.c;
  s.radius = radius;
  s.custom = [codes](const NodeView& w) { return codes->count(node_view_code(w)) > 0; };
  s.name = "view-memorizing r=" + std::to_string(radius);
  return s;
}

CheckerSpec preset_checker(const std::string& name) {
  if (name == "paths") return make_degree_set_checker(IntervalSet::of({1, 2}));
  if (name == "binary") return make_degree_set_checker(IntervalSet::of({1, 3}));
  if (name == "accept-all") return make_degree_set_checker(IntervalSet::range(0, kUnbounded));
  if (name.rfind("rake:", 0) == 0) return make_rake_checker(std::stoi(name.substr(5)));
  if (name.rfind("myopic:", 0) == 0) {
    std::stringstream ss(name.substr(7));
    std::vector<long long> vals;
    std::string tok;
    while (std::getline(ss, tok, ','))
      vals.push_back(tok == "inf" ? kUnbounded : std::stoll(tok));
    if (vals.size() != 8) throw InputError("myopic preset needs 8 bounds");
    MyopicParams p;
    p.leaf = {vals[0], vals[1]};
    p.minus = {vals[2], vals[3]};
    p.equal = {vals[4], vals[5]};
    p.plus = {vals[6], vals[7]};
    return make_myopic_checker(p);
  }
  throw InputError("unknown preset checker: " + name);
}

}  // namespace treechk
