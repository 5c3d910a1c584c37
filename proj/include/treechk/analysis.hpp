#pragma once

#include <optional>

#include "treechk/checker.hpp"
#include "treechk/enumerate.hpp"
#include "treechk/surgery.hpp"

namespace treechk {

struct LandscapeRow {
  int n = 0;
  long long accepted_count = 0;
  int min_diameter = -1;
  int max_diameter = -1;
  bool truncated = false;
};

struct LandscapeReport {
  std::vector<LandscapeRow> rows;
};

// Sound coloring pruner for radius-1 checkers: cuts a partial coloring as
// soon as some fully-surrounded vertex rejects.
ColoringPruner d1_pruner(const CheckerSpec& spec);

// Exact per-n min/max diameter over every accepted isomorphism class,
// n = 1..n_max. Rows appear when something was accepted or the enumeration
// was truncated (then flagged). c must equal the checker palette.
LandscapeReport landscape(const CheckerSpec& spec, int n_max, int c,
                          const EnumOptions& opts = {});

// Same statistics over supplied generator outputs, grouped by size.
LandscapeReport landscape_families(const CheckerSpec& spec,
                                   const std::vector<ColoredTree>& instances);

// S_{c,d}(n): c^2/9 (d=1); (c n^c)^{2/(2c+1)} (d=2); 36 n / log2^2 n (d=3);
// 4 n / g_d(log2 n) for d > 3, with g_d inverting x / log2^{(d-3)} x by
// bisection. Logs are base 2. Throws below the evaluable floor.
double threshold_S(int c, int d, double n);

struct LinearEvidence {
  ColoredTree tree;
  EdgeRef e, f;  // equal ordered edge views, in path order
};

struct GapProbe {
  std::optional<LinearEvidence> linear;  // pumpable pair => linear max diameter
  int max_observed = -1;                 // bounded case: max accepted diameter
  double bound = -1;                     // (4d^2+4d+1) * S_{c,d}(n_max)
  long long accepted_scanned = 0;
  bool truncated = false;
};

GapProbe gap_probe(const CheckerSpec& spec, int n_max, int c, const EnumOptions& opts = {});

struct RegimeCandidate {
  enum class Kind { Constant, Log, LogOverLogLog, PowInvK, Pow2c, Sqrt, Linear };
  Kind kind = Kind::Constant;
  int k = 2;  // PowInvK: n^{1/k}
  int c = 1;  // Pow2c:   n^{2c/(2c+1)}
  double operator()(double n) const;
  std::string name() const;
};

struct RegimeFit {
  RegimeCandidate candidate;
  bool use_max = true;
  double lo = 0, hi = 0;  // observed diameter/candidate ratios, upper half
  double factor = 4.0;
  bool pass = false;
};

// Multiplicative-window fit: pass iff hi/lo <= factor over the upper half of
// the rows (by n). Needs >= 5 rows with accepted trees.
RegimeFit fit_regime(const LandscapeReport& rep, bool use_max, RegimeCandidate cand,
                     double factor = 4.0);

}  // namespace treechk
