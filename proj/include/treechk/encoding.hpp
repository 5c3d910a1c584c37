#pragma once

#include <optional>

#include "treechk/words.hpp"

namespace treechk {

// Letter gadgets f(a_i): rooted colored trees of depth <= d-1, one injective
// family per kind.
//  - StarD2 (d=2):        f(a_i) = star with i leaves, i >= 1 (no bare letter).
//  - ColoredStarD2 (d=2): f(a_i) = star realizing the i-th non-increasing
//                         c-tuple in lexicographic order (x_j leaves of color
//                         j); i = 1 is the bare tree.
//  - HeightEnum (d>=3):   f(a_i) = i-th rooted tree of height <= d-1, ordered
//                         by (size, canonical rooted code); i = 1 is bare.
struct EncodingSpec {
  enum class Kind { StarD2, ColoredStarD2, HeightEnum };
  Kind kind = Kind::StarD2;
  int c = 1;  // colors (ColoredStarD2); others use color 1 only
  int d = 2;  // checker radius this encoding targets; gadget depth <= d-1

  bool has_bare_letter() const { return kind != Kind::StarD2; }
};

// f(a_i), rooted at vertex 0.
ColoredTree letter_tree(const EncodingSpec& enc, int i);
int letter_tree_size(const EncodingSpec& enc, int i);

// Inverse: index of the rooted tree (t, root) in the gadget family, or
// nullopt if it is not a gadget (wrong colors, too tall, non-star, ...).
std::optional<int> letter_index(const EncodingSpec& enc, const ColoredTree& t, int root);

// Decoding of the pendant forest hanging below one backbone vertex.
// `pendants` are the child subtrees, each rooted at vertex 0.
struct PendantDecode {
  int m = 0;            // pending-leaf count (position mod 3)
  int letter = 0;
  bool last = false;    // padded: carries the three padding stars
  long long sigma = 0;  // padding star size when last
};
std::optional<PendantDecode> decode_pendant(const EncodingSpec& enc, bool padded,
                                            const std::vector<ColoredTree>& pendants);

// Special caterpillar T[s]: backbone r_0 .. r_{p+1}; r_i (1<=i<=p) carries
// three copies of f(s_i) with identified roots plus (i mod 3) pending leaves;
// r_0 and r_{p+1} each carry a hanging bare path of d vertices.
// diam T[s] = |s| + 2d + 1.
ColoredTree encode_caterpillar(const Word& s, const EncodingSpec& enc, int d);

// Padded variant: six copies of f(s_i) per letter plus (i mod 3) pending
// leaves; the last backbone letter vertex additionally carries three stars
// with sigma leaves each.
ColoredTree encode_padded(const Word& s, const EncodingSpec& enc, int d, long long sigma);

// Sizes without building: |T[s]| and its padded counterpart.
long long caterpillar_size(const Word& s, const EncodingSpec& enc, int d);
long long padded_size(const Word& s, const EncodingSpec& enc, int d, long long sigma);
int caterpillar_diameter(int p, int d);  // p + 2d + 1

// Inverse of encode_caterpillar / encode_padded; throws InputError when the
// tree is not a well-formed caterpillar for the encoding. Language membership
// is NOT checked here.
Word decode_caterpillar(const ColoredTree& t, const EncodingSpec& enc, int d);
struct PaddedDecode {
  Word word;
  long long sigma = 0;
};
PaddedDecode decode_padded(const ColoredTree& t, const EncodingSpec& enc, int d);

// Peel number of every vertex: 1 + second-largest neighbor-branch depth.
// The peel-above-d set P* of a caterpillar is exactly its backbone.
std::vector<int> peel_numbers(const ColoredTree& t);

}  // namespace treechk
