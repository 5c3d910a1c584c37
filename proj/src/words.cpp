#include "treechk/words.hpp"

#include <algorithm>

namespace treechk {

Word l1_word(int p) {
  if (p < 1) throw InputError("l1_word: p must be >= 1");
  Word w(p);
  for (int i = 0; i < p; ++i) w[i] = i + 1;
  return w;
}

bool l1_member(const Word& w) {
  if (w.empty()) return false;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] != i + 1) return false;
  return true;
}

Word l2_word(int p) {
  if (p < 2) throw InputError("l2_word: p must be >= 2");
  Word w{1, 2};
  for (int l = 3; l <= p; ++l)
    for (int j = 1; j < l; ++j) {
      w.push_back(j);
      w.push_back(l);
    }
  return w;
}

bool l2_member(const Word& w) {
  if (w.size() < 2) return false;
  int p = *std::max_element(w.begin(), w.end());
  if (p < 2) return false;
  return w == l2_word(p);
}

bool l2_window_ok(int x, int y, int z) {
  if (y > x + 1 && z == x + 1 && x >= 1) return true;       // (k-1, l, k), k < l
  if (x == z && x > y && y > 1) return true;                // (l, k, l), 1 < k < l
  if (y == 1 && z == x + 1 && x >= 1) return true;          // (l-1, 1, l)
  if (y == x + 1 && y >= 2 && z == 1) return true;          // (k-1, k, 1)
  return false;
}

bool l2_member_windows(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) return false;
  if (w[0] != 1 || w[1] != 2) return false;
  if (w[n - 1] < 2 || w[n - 2] != w[n - 1] - 1) return false;
  for (int i = 1; i + 1 < n; ++i)
    if (!l2_window_ok(w[i - 1], w[i], w[i + 1])) return false;
  return true;
}

bool LanguageSpec::member(const Word& w) const {
  return kind == Kind::L1 ? l1_member(w) : l2_member(w);
}

Word LanguageSpec::word(int p) const {
  return kind == Kind::L1 ? l1_word(p) : l2_word(p);
}

int LanguageSpec::length_of(int p) const {
  return kind == Kind::L1 ? p : p * (p - 1);
}

bool LanguageSpec::single_ok(int l) const {
  return kind == Kind::L1 && l == 1;
}

bool LanguageSpec::start_ok(int first, int second) const {
  return first == 1 && second == 2;
}

bool LanguageSpec::end_ok(int penult, int last) const {
  if (kind == Kind::L1) return last == penult + 1;
  return last >= 2 && penult == last - 1;
}

bool LanguageSpec::window_ok(int x, int y, int z) const {
  if (kind == Kind::L1) return y == x + 1 && z == y + 1;
  return l2_window_ok(x, y, z);
}

Word LanguageSpec::word_from_last(int last) const {
  // in both languages the final letter is the maximum p
  return word(last);
}

bool is_subsequence(const Word& needle, const Word& hay) {
  size_t i = 0;
  for (size_t j = 0; j < hay.size() && i < needle.size(); ++j)
    if (hay[j] == needle[i]) ++i;
  return i == needle.size();
}

bool is_k_subdivision(const Word& w2, const Word& w, int k) {
  if (k < 1) throw InputError("is_k_subdivision: k must be >= 1");
  Word blown;
  blown.reserve(w.size() * k);
  for (int a : w)
    for (int r = 0; r < k; ++r) blown.push_back(a);
  return is_subsequence(w2, blown) && is_subsequence(w, w2);
}

Word k_subdivide_sample(const Word& w, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> reps(1, std::max(1, k));
  Word out;
  for (int a : w) {
    int r = reps(rng);
    for (int i = 0; i < r; ++i) out.push_back(a);
  }
  return out;
}

}  // namespace treechk
