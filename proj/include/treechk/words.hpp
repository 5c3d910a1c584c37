#pragma once

#include <random>
#include <vector>

#include "treechk/graph.hpp"

namespace treechk {

// Words over the alphabet a_1, a_2, ... as 1-based letter indices.
using Word = std::vector<int>;

// L1 = { a_1 a_2 ... a_p : p >= 1 }
Word l1_word(int p);
bool l1_member(const Word& w);

// L2 = { s_p : p >= 2 } with
//   s_p = a_1 a_2 * prod_{l=3..p} (a_1 a_l a_2 a_l ... a_{l-1} a_l)
// |s_p| = p(p-1); every letter a_l (l<p) appears p-1 times.
Word l2_word(int p);
bool l2_member(const Word& w);

// Window characterization of L2 (used by the local checkers): a word is in L2
// iff it starts (1,2), ends (p-1,p), and every interior triple matches one of
// the four patterns below. l2_member_windows must agree with l2_member.
bool l2_window_ok(int x, int y, int z);
bool l2_member_windows(const Word& w);

// Per-language local predicates consumed by the caterpillar checkers.
struct LanguageSpec {
  enum class Kind { L1, L2 };
  Kind kind = Kind::L1;

  bool member(const Word& w) const;
  Word word(int p) const;             // canonical member with max letter p
  int length_of(int p) const;         // |word(p)| without building it
  bool single_ok(int l) const;        // one-letter word (l)
  bool start_ok(int first, int second) const;
  bool end_ok(int penult, int last) const;
  bool window_ok(int x, int y, int z) const;
  // word regenerated from its last letter (both languages determine p = last)
  Word word_from_last(int last) const;
};

// w2 is a k-subdivision of w (subsequence semantics): w2 is a subsequence of
// w with every letter repeated k times, and w is a subsequence of w2.
bool is_k_subdivision(const Word& w2, const Word& w, int k);

// Random k-subdivision of w (each letter repeated 1..k times).
Word k_subdivide_sample(const Word& w, int k, std::mt19937_64& rng);

bool is_subsequence(const Word& needle, const Word& hay);

}  // namespace treechk
