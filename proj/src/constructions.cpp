#include "treechk/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace treechk {
namespace {

constexpr long long kGenCap = 20'000'000;

int add_vertex(ColoredTree& t, int color, int parent) {
  int id = t.n();
  t.colors.push_back(color);
  if (parent >= 0) t.edges.push_back({parent, id});
  if (id > kGenCap) throw InputError("generator: result too large");
  return id;
}

}  // namespace

ColoredTree gen_increasing_caterpillar(int i) {
  if (i < 1) throw InputError("increasing caterpillar: i must be >= 1");
  ColoredTree t;
  t.c = 1;
  int prev = add_vertex(t, 1, -1);
  for (int j = 2; j <= i; ++j) prev = add_vertex(t, 1, prev);
  // backbone vertex j has ids j-1; pad to total degree j
  for (int j = 1; j <= i && i > 1; ++j) {
    int backbone = (j == 1 || j == i) ? 1 : 2;
    for (int pad = 0; pad < j - backbone; ++pad) add_vertex(t, 1, j - 1);
  }
  return t;
}

namespace {

int ary_node(ColoredTree& t, int a, int h, int parent) {
  int v = add_vertex(t, 1, parent);
  if (h == 1) {
    for (int j = 0; j < a - 1; ++j) add_vertex(t, 1, v);
    return v;
  }
  for (int j = 0; j < a; ++j) ary_node(t, a, h - 1, v);
  for (int j = 0; j < h - 2; ++j) add_vertex(t, 1, v);
  return v;
}

}  // namespace

ColoredTree gen_ary_pended(int a, int i) {
  if (a < 2 || i < 1) throw InputError("ary pended: need a >= 2, i >= 1");
  ColoredTree t;
  t.c = 1;
  int root = add_vertex(t, 1, -1);
  if (i == 1) {
    for (int j = 0; j < a; ++j) add_vertex(t, 1, root);
    return t;
  }
  for (int j = 0; j < a; ++j) ary_node(t, a, i - 1, root);
  for (int j = 0; j < i - 1; ++j) add_vertex(t, 1, root);
  return t;
}

namespace {

int factorial_node(ColoredTree& t, int a, int i, int parent) {
  if (i == a - 1) {  // subdivided star on 2a-1 vertices
    int root = add_vertex(t, 1, parent);
    for (int j = 0; j < a - 1; ++j) {
      int mid = add_vertex(t, 1, root);
      add_vertex(t, 1, mid);
    }
    return root;
  }
  int root = add_vertex(t, 1, parent);
  for (int j = 0; j < i; ++j) factorial_node(t, a, i - 1, root);
  return root;
}

}  // namespace

ColoredTree gen_factorial_tree(int a, int i) {
  if (a < 2 || i < a - 1) throw InputError("factorial tree: need a >= 2, i >= a-1");
  long long size = 2 * a - 1;
  for (int j = a - 1; j < i; ++j) size = (j + 1) * size + 1;
  if (size > kGenCap) throw InputError("factorial tree: result too large");
  ColoredTree t;
  t.c = 1;
  factorial_node(t, a, i, -1);
  return t;
}

namespace {

// choose how much of `R` to spend against a capacity, never stranding 1
long long rake_take(long long cap, long long R) {
  if (cap >= R) return R;
  if (cap == R - 1) return cap >= 3 ? cap - 1 : 0;
  return cap;
}

}  // namespace

ColoredTree gen_k_rake(int k, int ell) {
  if (k < 1 || ell < 1) throw InputError("k-rake: need k >= 1, ell >= 1");
  long long target = 1;
  for (int j = 0; j < k; ++j) {
    target *= ell;
    if (target > kGenCap) throw InputError("k-rake: result too large");
  }
  ColoredTree t;
  t.c = 3 * k;
  auto color = [&](int level, int pos) { return 3 * (level - 1) + ((pos - 1) % 3) + 1; };
  auto path = [&](int level, int len, int host) {
    std::vector<int> ids;
    int prev = host;
    for (int pos = 1; pos <= len; ++pos) {
      prev = add_vertex(t, color(level, pos), prev);
      ids.push_back(prev);
    }
    return ids;
  };
  if (k == 1) {
    path(1, ell, -1);
    return t;
  }
  if (k == 3 && ell == 2) {
    // ell^k = 8 < top path + usable teeth; shorter top path still reaches kl
    std::vector<int> top = path(1, 6, -1);
    path(2, 2, top[1]);
    return t;
  }
  int m = k * ell + 1;
  std::vector<int> top = path(1, m, -1);
  long long budget = target - m;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = std::min(a - 1, m - a), db = std::min(b - 1, m - b);
    return da != db ? da > db : a < b;
  });
  for (int a : order) {
    long long cap = std::min(a - 1, m - a);
    if (cap < 2 || budget < 2) continue;
    long long len = rake_take(cap, budget);
    if (len < 2) continue;
    budget -= len;
    std::vector<int> tooth = path(2, static_cast<int>(len), top[a - 1]);
    if (k == 3)
      for (int b = 1; b <= static_cast<int>(len) && budget >= 2; ++b) {
        long long sub = rake_take(cap - b, budget);
        if (sub < 2) continue;
        budget -= sub;
        path(3, static_cast<int>(sub), tooth[b - 1]);
      }
  }
  if (budget != 0) throw InputError("k-rake: could not realize the exact size");
  return t;
}

ColoredTree gen_caterpillar_family(const LanguageSpec& lang, const EncodingSpec& enc, int d,
                                   int p) {
  if (p < 2) throw InputError("caterpillar family: p must be >= 2");
  return encode_caterpillar(lang.word(p), enc, d);
}

ColoredTree gen_exact_diameter_family(const TargetDiameter& target, const LanguageSpec& lang,
                                      const EncodingSpec& enc, int d, int p) {
  if (p < 2) throw InputError("exact diameter family: p must be >= 2");
  Word w = lang.word(p);
  long long delta = static_cast<long long>(w.size()) + 2 * d + 1;
  long long base = padded_size(w, enc, d, 0);
  bool monotone = target.kind != TargetDiameter::Kind::Table;
  for (long long sigma = 0; base + 3 * sigma <= 10'000'000; ++sigma) {
    long long val = target(base + 3 * sigma);
    if (val == delta) return encode_padded(w, enc, d, sigma);
    if (monotone && val > delta) break;
    if (target.kind == TargetDiameter::Kind::Table && val < 0 &&
        base + 3 * sigma > static_cast<long long>(target.table.size()))
      break;
  }
  throw InputError("exact diameter family: no padding realizes the target");
}

ColoredTree gen_basics(const std::string& kind, int n) {
  if (n < 1) throw InputError("gen_basics: n must be >= 1");
  if (kind == "path") return make_path(n);
  if (kind == "star") return n == 1 ? make_path(1) : make_star(n - 1);
  if (kind == "binary") {
    int h = 0;
    long long size = 1;
    while (size < n) {
      size = 2 * size + 1;
      ++h;
    }
    if (size != n) throw InputError("gen_basics: binary needs n = 2^{h+1} - 1");
    return make_complete_binary(h);
  }
  throw InputError("gen_basics: unknown kind " + kind);
}

ColoredTree gen_family(const FamilySpec& f) {
  using K = FamilySpec::Kind;
  switch (f.kind) {
    case K::Path: return gen_basics("path", f.n);
    case K::Star: return gen_basics("star", f.n);
    case K::BinaryComplete: return gen_basics("binary", f.n);
    case K::IncreasingCaterpillar: return gen_increasing_caterpillar(f.i);
    case K::AryPended: return gen_ary_pended(f.a, f.i);
    case K::FactorialTree: return gen_factorial_tree(f.a, f.i);
    case K::KRake: return gen_k_rake(f.k, f.ell);
    case K::L1Caterpillar:
    case K::L2Caterpillar: return gen_caterpillar_family(f.lang, f.enc, f.d, f.p);
    case K::ExactDiameter: return gen_exact_diameter_family(f.target, f.lang, f.enc, f.d, f.p);
    case K::LogCase: throw InputError("logcase generation needs an order witness");
  }
  throw InputError("unknown family kind");
}

}  // namespace treechk
