#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "treechk/canonical.hpp"
#include "treechk/constructions.hpp"
#include "treechk/encoding.hpp"
#include "treechk/surgery.hpp"

using namespace treechk;

namespace {

bool caterpillar_shape(const ColoredTree& t) {
  // removing all leaves leaves a (possibly empty) path
  auto deg = degrees(t);
  std::vector<int> keep;
  for (int v = 0; v < t.n(); ++v)
    if (deg[v] > 1) keep.push_back(v);
  if (keep.size() <= 1) return true;
  ColoredTree core = induced(t, keep);
  auto cdeg = degrees(core);
  int ones = 0;
  for (int v = 0; v < core.n(); ++v) {
    if (cdeg[v] > 2) return false;
    if (cdeg[v] == 1) ++ones;
  }
  return ones == 2;
}

int height_of(const ColoredTree& t, int root) {
  auto dist = oracle::bfs(t, root);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace

TEST_CASE("gen_increasing_caterpillar: backbone vertex j has degree j") {
  CHECK_THROWS_AS(gen_increasing_caterpillar(0), InputError);
  CHECK(gen_increasing_caterpillar(1).n() == 1);
  for (int i = 2; i <= 40; ++i) {
    ColoredTree t = gen_increasing_caterpillar(i);
    CHECK(is_tree(t));
    CHECK(t.n() == i * (i - 1) / 2 + 2);
    CHECK(caterpillar_shape(t));
    CHECK(diameter(t) == i);
    auto deg = degrees(t);
    for (int j = 1; j <= i; ++j) CHECK(deg[j - 1] == j);
  }
}

TEST_CASE("gen_ary_pended: parent degree sits one above every internal child") {
  CHECK_THROWS_AS(gen_ary_pended(1, 3), InputError);
  CHECK_THROWS_AS(gen_ary_pended(2, 0), InputError);
  for (int a = 2; a <= 4; ++a) {
    CHECK(trees_isomorphic(gen_ary_pended(a, 1), make_star(a)));
    for (int i = 2; i <= (a == 2 ? 7 : 5); ++i) {
      ColoredTree t = gen_ary_pended(a, i);
      CHECK(is_tree(t));
      CHECK(height_of(t, 0) == i);
      auto deg = degrees(t);
      CHECK(deg[0] == a + i - 1);
      // every internal vertex below another internal vertex is one lighter
      std::vector<std::vector<int>> adj(t.n());
      for (auto& e : t.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
      }
      auto dist = oracle::bfs(t, 0);
      for (int v = 1; v < t.n(); ++v) {
        if (deg[v] == 1) continue;
        int par = -1;
        for (int w : adj[v])
          if (dist[w] == dist[v] - 1) par = w;
        CHECK(deg[par] == deg[v] + 1);
      }
    }
  }
}

TEST_CASE("gen_factorial_tree: n(T_i) = 1 + i * n(T_{i-1})") {
  CHECK_THROWS_AS(gen_factorial_tree(1, 1), InputError);
  CHECK_THROWS_AS(gen_factorial_tree(3, 1), InputError);  // i < a-1
  CHECK_THROWS_AS(gen_factorial_tree(2, 11), InputError);  // past the size cap
  for (int a = 2; a <= 4; ++a) {
    long long expect = 2 * a - 1;
    int top = a == 2 ? 8 : (a == 3 ? 7 : 6);
    for (int i = a - 1; i <= top; ++i) {
      if (i > a - 1) expect = i * expect + 1;
      ColoredTree t = gen_factorial_tree(a, i);
      CHECK(is_tree(t));
      CHECK(t.n() == expect);
      auto deg = degrees(t);
      if (i > a - 1) CHECK(deg[0] == i);
    }
    // base case is the subdivided star: a-1 middle vertices of degree 2
    ColoredTree base = gen_factorial_tree(a, a - 1);
    CHECK(base.n() == 2 * a - 1);
    auto deg = degrees(base);
    CHECK(deg[0] == a - 1);
    // a-1 middle vertices, plus the root itself when a-1 == 2
    CHECK(std::count(deg.begin(), deg.end(), 2) == (a - 1) + (a == 3 ? 1 : 0));
    CHECK(diameter(base) == (a == 2 ? 2 : 4));
  }
}

TEST_CASE("gen_k_rake: exact sizes, diameters and checker acceptance") {
  CHECK_THROWS_AS(gen_k_rake(0, 3), InputError);
  CHECK_THROWS_AS(gen_k_rake(2, 0), InputError);
  CHECK_THROWS_AS(gen_k_rake(2, 2), InputError);  // 4 vertices cannot reach diameter 4
  CHECK_THROWS_AS(gen_k_rake(9, 100), InputError);  // over the size cap

  for (int ell = 2; ell <= 8; ++ell) {
    ColoredTree t = gen_k_rake(1, ell);
    CHECK(t.n() == ell);
    CHECK(t.c == 3);
    CHECK(diameter(t) == ell - 1);
    for (int v = 0; v < ell; ++v) CHECK(t.colors[v] == v % 3 + 1);
    CHECK(accepts(make_rake_checker(1), t).accepted);
  }
  for (int k = 2; k <= 3; ++k)
    for (int ell = 2; ell <= 6; ++ell) {
      if (k == 2 && ell == 2) continue;
      ColoredTree t = gen_k_rake(k, ell);
      CHECK(is_tree(t));
      long long want = 1;
      for (int j = 0; j < k; ++j) want *= ell;
      CHECK(t.n() == want);
      CHECK(t.c == 3 * k);
      CHECK(diameter(t) == k * ell);
      CHECK(accepts(make_rake_checker(k), t).accepted);
    }
  // higher k still realizes the size and diameter with two-level teeth
  ColoredTree t = gen_k_rake(4, 2);
  CHECK(t.n() == 16);
  CHECK(t.c == 12);
  CHECK(diameter(t) == 8);
}

TEST_CASE("gen_caterpillar_family: wraps the word encoder") {
  LanguageSpec l1, l2;
  l1.kind = LanguageSpec::Kind::L1;
  l2.kind = LanguageSpec::Kind::L2;
  EncodingSpec star;  // StarD2
  EncodingSpec henum;
  henum.kind = EncodingSpec::Kind::HeightEnum;
  henum.d = 3;

  CHECK_THROWS_AS(gen_caterpillar_family(l1, star, 2, 1), InputError);
  for (int p = 2; p <= 5; ++p) {
    ColoredTree t = gen_caterpillar_family(l1, star, 2, p);
    CHECK(tree_code(t) == tree_code(encode_caterpillar(l1.word(p), star, 2)));
    CHECK(decode_caterpillar(t, star, 2) == l1.word(p));
  }
  ColoredTree t2 = gen_caterpillar_family(l2, henum, 3, 3);
  CHECK(tree_code(t2) == tree_code(encode_caterpillar(l2.word(3), henum, 3)));
}

TEST_CASE("gen_exact_diameter_family: ceil-sqrt family hits its target exactly") {
  LanguageSpec l2;
  l2.kind = LanguageSpec::Kind::L2;
  EncodingSpec star;
  TargetDiameter sq;
  sq.kind = TargetDiameter::Kind::CeilPow;
  sq.num = 1;
  sq.den = 2;

  std::vector<std::pair<int, int>> frozen{{258, 17}, {578, 25}, {1158, 35}, {2118, 47},
                                          {3602, 61}};
  for (int p = 4; p <= 8; ++p) {
    ColoredTree t = gen_exact_diameter_family(sq, l2, star, 2, p);
    CHECK(t.n() == frozen[p - 4].first);
    CHECK(diameter(t) == frozen[p - 4].second);
    CHECK(diameter(t) == l2.length_of(p) + 5);  // |w| + 2d + 1
    CHECK(sq(t.n()) == diameter(t));
  }

  TargetDiameter c7;
  c7.kind = TargetDiameter::Kind::ConstantK;
  c7.k = 7;
  ColoredTree t7 = gen_exact_diameter_family(c7, l2, star, 2, 2);
  CHECK(t7.n() == 32);
  CHECK(diameter(t7) == 7);

  TargetDiameter c6;
  c6.kind = TargetDiameter::Kind::ConstantK;
  c6.k = 6;
  CHECK_THROWS_AS(gen_exact_diameter_family(c6, l2, star, 2, 2), InputError);
  CHECK_THROWS_AS(gen_exact_diameter_family(sq, l2, star, 2, 1), InputError);
}

TEST_CASE("gen_basics: path, star, complete binary") {
  CHECK_THROWS_AS(gen_basics("path", 0), InputError);
  CHECK_THROWS_AS(gen_basics("tree", 5), InputError);
  CHECK(trees_isomorphic(gen_basics("path", 6), make_path(6)));
  CHECK(gen_basics("star", 1).n() == 1);
  CHECK(trees_isomorphic(gen_basics("star", 7), make_star(6)));
  CHECK(trees_isomorphic(gen_basics("binary", 7), make_complete_binary(2)));
  CHECK(trees_isomorphic(gen_basics("binary", 15), make_complete_binary(3)));
  CHECK_THROWS_AS(gen_basics("binary", 6), InputError);
  CHECK_THROWS_AS(gen_basics("binary", 12), InputError);
}

TEST_CASE("gen_family: dispatch matches the direct generators") {
  FamilySpec f;
  f.kind = FamilySpec::Kind::Path;
  f.n = 9;
  CHECK(tree_code(gen_family(f)) == tree_code(make_path(9)));
  f.kind = FamilySpec::Kind::Star;
  f.n = 5;
  CHECK(tree_code(gen_family(f)) == tree_code(make_star(4)));
  f.kind = FamilySpec::Kind::BinaryComplete;
  f.n = 15;
  CHECK(tree_code(gen_family(f)) == tree_code(make_complete_binary(3)));
  f.kind = FamilySpec::Kind::IncreasingCaterpillar;
  f.i = 6;
  CHECK(tree_code(gen_family(f)) == tree_code(gen_increasing_caterpillar(6)));
  f.kind = FamilySpec::Kind::AryPended;
  f.a = 3;
  f.i = 3;
  CHECK(tree_code(gen_family(f)) == tree_code(gen_ary_pended(3, 3)));
  f.kind = FamilySpec::Kind::FactorialTree;
  f.a = 2;
  f.i = 4;
  CHECK(tree_code(gen_family(f)) == tree_code(gen_factorial_tree(2, 4)));
  f.kind = FamilySpec::Kind::KRake;
  f.k = 2;
  f.ell = 4;
  CHECK(tree_code(gen_family(f)) == tree_code(gen_k_rake(2, 4)));

  f.kind = FamilySpec::Kind::L1Caterpillar;
  f.lang.kind = LanguageSpec::Kind::L1;
  f.d = 2;
  f.p = 3;
  CHECK(tree_code(gen_family(f)) == tree_code(gen_caterpillar_family(f.lang, f.enc, 2, 3)));

  f.kind = FamilySpec::Kind::ExactDiameter;
  f.lang.kind = LanguageSpec::Kind::L2;
  f.target.kind = TargetDiameter::Kind::CeilPow;
  f.p = 4;
  CHECK(gen_family(f).n() == 258);

  f.kind = FamilySpec::Kind::LogCase;
  CHECK_THROWS_AS(gen_family(f), InputError);
}
