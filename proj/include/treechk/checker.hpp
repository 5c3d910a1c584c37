#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>

#include "treechk/encoding.hpp"
#include "treechk/view.hpp"
#include "treechk/words.hpp"

namespace treechk {

constexpr long long kUnbounded = std::numeric_limits<long long>::max();

struct Interval {
  long long lo = 0;
  long long hi = kUnbounded;
  bool contains(long long k) const { return k >= lo && k <= hi; }
  bool operator==(const Interval&) const = default;
};

struct IntervalSet {
  std::vector<Interval> parts;
  bool contains(long long k) const {
    for (const auto& p : parts)
      if (p.contains(k)) return true;
    return false;
  }
  static IntervalSet of(std::initializer_list<long long> vals) {
    IntervalSet s;
    for (long long v : vals) s.parts.push_back({v, v});
    return s;
  }
  static IntervalSet range(long long lo, long long hi) { return {{{lo, hi}}}; }
};

// per-own-color rule: neighbor count interval per neighbor color (1-based)
struct Distance1Rule {
  int own_color = 1;
  std::vector<Interval> neighbor_counts;
};

// D(n) targets for the exact-diameter checker
struct TargetDiameter {
  enum class Kind { ConstantK, FloorPow, CeilPow, FloorLog, Table };
  Kind kind = Kind::ConstantK;
  long long k = 1;             // ConstantK
  long long num = 1, den = 2;  // (Floor|Ceil)Pow: n^(num/den)
  std::vector<long long> table;

  long long operator()(long long n) const;  // -1 = undefined
};

// neighbor-type count bounds for the degree-myopic checkers (radius 2, c=1)
struct MyopicParams {
  Interval leaf, minus, equal, plus;
  bool operator==(const MyopicParams&) const = default;
};

MyopicParams normalize_myopic(MyopicParams p, std::vector<std::string>* log = nullptr);

enum class MyopicRegime { Constant, Log, LogOverLogLog, Sqrt, Linear, Unclassified };
const char* regime_name(MyopicRegime r);
// classify after normalization
MyopicRegime classify_myopic(const MyopicParams& raw);

struct CheckerSpec {
  enum class Kind {
    DegreeSet,
    Distance1Rules,
    Rake,
    SpecialCaterpillar,
    PaddedDiameter,
    DegreeMyopic,
    Custom,
  };
  Kind kind = Kind::DegreeSet;
  int c = 1;       // colors the checker speaks about
  int radius = 1;  // node-view radius the verdict reads

  IntervalSet degree_set;             // DegreeSet
  std::vector<Distance1Rule> rules;   // Distance1Rules
  int rake_k = 1;                     // Rake
  LanguageSpec language;              // Special / Padded
  EncodingSpec enc;                   // Special / Padded
  int cat_d = 2;                      // Special / Padded: caterpillar d (radius = d+1)
  TargetDiameter target;              // Padded
  MyopicParams myopic;                // DegreeMyopic
  std::function<bool(const NodeView&)> custom;  // Custom (never serialized)
  std::string name;
};

CheckerSpec make_degree_set_checker(IntervalSet degrees);
CheckerSpec make_distance1_checker(int c, std::vector<Distance1Rule> rules);
CheckerSpec make_rake_checker(int k);
CheckerSpec make_special_checker(int d, LanguageSpec lang, EncodingSpec enc);
CheckerSpec make_padded_checker(int d, LanguageSpec lang, EncodingSpec enc, TargetDiameter target);
CheckerSpec make_myopic_checker(MyopicParams params);

// Custom checker accepting exactly the radius-r node-view codes occurring in
// the source tree (the finest local checker that accepts the source).
CheckerSpec make_view_memorizing_checker(const ColoredTree& source, int radius);

// rake colors: (level i in 1..k, position j in 1..3) <-> 3(i-1)+j
int rake_color(int i, int j);
std::pair<int, int> rake_level_pos(int color);

// The verdict is a function of the node view alone.
bool node_verdict_view(const CheckerSpec& spec, const NodeView& w);
bool node_verdict(const CheckerSpec& spec, const ColoredGraph& g, int v);

// fast path for radius-1 kinds (used by pruned enumeration)
bool d1_verdict(const CheckerSpec& spec, int own_color, const std::vector<int>& neighbor_colors);
bool is_d1_kind(const CheckerSpec& spec);

struct Verdict {
  bool accepted = false;
  int witness = -1;  // first rejecting vertex
};

Verdict accepts(const CheckerSpec& spec, const ColoredGraph& g);

// named presets: paths, binary, accept-all, rake:<k>,
// myopic:<8 comma-separated bounds, 'inf' allowed>
CheckerSpec preset_checker(const std::string& name);

}  // namespace treechk
