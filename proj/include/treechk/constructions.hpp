#pragma once

#include <string>

#include "treechk/checker.hpp"
#include "treechk/encoding.hpp"

namespace treechk {

// Uncolored caterpillar whose backbone vertex j has total degree j.
ColoredTree gen_increasing_caterpillar(int i);

// Pended complete a-ary tree of height i (T'_i): height-1 vertices carry a-1
// leaves, higher internal vertices a subtree children plus pending leaves that
// keep parent degrees exactly one above their children's.
ColoredTree gen_ary_pended(int a, int i);

// Recursive factorial family (T_i): base T_{a-1} is the subdivided star on
// 2a-1 vertices; T_{i+1} joins i+1 copies of T_i under a new root.
ColoredTree gen_factorial_tree(int a, int i);

// k-rake on exactly ell^k vertices, canonically 3k-colored so that
// make_rake_checker(k) accepts it. Realizes diameter k*ell whenever some
// ell^k-vertex tree of that diameter exists (k >= 2 and (k,ell) != (2,2));
// the impossible cells emit the closest structure (path for k=1).
ColoredTree gen_k_rake(int k, int ell);

// encode_caterpillar(word(p)) for the given language.
ColoredTree gen_caterpillar_family(const LanguageSpec& lang, const EncodingSpec& enc, int d,
                                   int p);

// Padded family instance: solves target(base + 3*sigma) == |word| + 2d + 1 by
// scanning sigma (sizes capped at 10^7; nondecreasing targets exit early) and
// emits the padded tree. Throws InputError when no sigma works.
ColoredTree gen_exact_diameter_family(const TargetDiameter& target, const LanguageSpec& lang,
                                      const EncodingSpec& enc, int d, int p);

// kind: "path" | "star" | "binary" (complete binary, n = 2^{h+1}-1).
ColoredTree gen_basics(const std::string& kind, int n);

struct FamilySpec {
  enum class Kind {
    Path,
    Star,
    BinaryComplete,
    IncreasingCaterpillar,
    AryPended,
    FactorialTree,
    KRake,
    L1Caterpillar,
    L2Caterpillar,
    ExactDiameter,
    LogCase
  };
  Kind kind = Kind::Path;
  int n = 1;         // Path/Star/BinaryComplete
  int a = 2, i = 1;  // AryPended/FactorialTree/IncreasingCaterpillar
  int k = 2, ell = 2;
  int d = 2, p = 2;
  LanguageSpec lang;
  EncodingSpec enc;
  TargetDiameter target;
};

// Dispatch for the parameterized kinds; LogCase needs an order witness and
// lives in build_logcase_family instead.
ColoredTree gen_family(const FamilySpec& f);

}  // namespace treechk
