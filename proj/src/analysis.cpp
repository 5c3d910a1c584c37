#include "treechk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace treechk {

ColoringPruner d1_pruner(const CheckerSpec& spec) {
  if (!is_d1_kind(spec)) throw InputError("d1_pruner: checker is not radius-1");
  // Cache keyed on the edge list itself: successive tree shapes can reuse a
  // stack address, so pointer identity is not a safe cache key.
  return [spec, cached = std::vector<std::pair<int, int>>{},
          cached_n = -1, adj = Adjacency{}](const ColoredTree& t, const std::vector<int>& colors,
                                            int just_fixed) mutable {
    if (t.n() != cached_n || t.edges != cached) {
      adj = adjacency(t);
      cached = t.edges;
      cached_n = t.n();
    }
    auto complete_rejects = [&](int v) {
      if (colors[v] == 0) return false;
      std::vector<int> nb;
      for (int w : adj[v]) {
        if (colors[w] == 0) return false;
        nb.push_back(colors[w]);
      }
      return !d1_verdict(spec, colors[v], nb);
    };
    if (complete_rejects(just_fixed)) return false;
    for (int w : adj[just_fixed])
      if (complete_rejects(w)) return false;
    return true;
  };
}

LandscapeReport landscape(const CheckerSpec& spec, int n_max, int c, const EnumOptions& opts) {
  if (c != spec.c) throw InputError("landscape: palette differs from the checker's");
  ColoringPruner pruner;
  if (is_d1_kind(spec)) pruner = d1_pruner(spec);
  LandscapeReport rep;
  for (int n = 1; n <= n_max; ++n) {
    LandscapeRow row;
    row.n = n;
    EnumOptions eo = opts;
    if (pruner && !eo.pruner) eo.pruner = &pruner;
    EnumResult res = enumerate_colored_trees(
        n, c,
        [&](const ColoredTree& t) {
          if (!accepts(spec, t).accepted) return;
          int dm = diameter(t);
          if (row.accepted_count == 0) {
            row.min_diameter = row.max_diameter = dm;
          } else {
            row.min_diameter = std::min(row.min_diameter, dm);
            row.max_diameter = std::max(row.max_diameter, dm);
          }
          ++row.accepted_count;
        },
        eo);
    row.truncated = res.truncated;
    if (row.accepted_count > 0 || row.truncated) rep.rows.push_back(row);
  }
  return rep;
}

LandscapeReport landscape_families(const CheckerSpec& spec,
                                   const std::vector<ColoredTree>& instances) {
  std::map<int, LandscapeRow> by_n;
  for (const ColoredTree& t : instances) {
    if (!accepts(spec, t).accepted) continue;
    LandscapeRow& row = by_n[t.n()];
    row.n = t.n();
    int dm = diameter(t);
    if (row.accepted_count == 0) {
      row.min_diameter = row.max_diameter = dm;
    } else {
      row.min_diameter = std::min(row.min_diameter, dm);
      row.max_diameter = std::max(row.max_diameter, dm);
    }
    ++row.accepted_count;
  }
  LandscapeReport rep;
  for (auto& [n, row] : by_n) rep.rows.push_back(row);
  return rep;
}

namespace {

double iterlog2(double x, int k) {
  for (int i = 0; i < k; ++i) x = std::log2(x);
  return x;
}

// inverse of f(x) = x / log2^{(k)} x on its increasing tail
double inv_iterlog_ratio(double y, int k) {
  double lo = 2.0;
  for (int i = 0; i < k; ++i) {
    lo = std::exp2(lo);
    if (!std::isfinite(lo)) throw InputError("threshold: d too large to evaluate");
  }
  auto f = [&](double x) { return x / iterlog2(x, k); };
  if (y < f(lo)) throw InputError("threshold: n below the evaluable floor");
  double hi = lo;
  while (f(hi) < y) {
    hi *= 2;
    if (!std::isfinite(hi)) throw InputError("threshold: argument overflow");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = lo + (hi - lo) / 2;
    (f(mid) < y ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

double threshold_S(int c, int d, double n) {
  if (c < 1 || d < 1) throw InputError("threshold: need c >= 1, d >= 1");
  if (d == 1) return c * c / 9.0;
  if (n < 2) throw InputError("threshold: need n >= 2");
  if (d == 2) return std::pow(c * std::pow(n, c), 2.0 / (2 * c + 1));
  if (d == 3) {
    double l = std::log2(n);
    return 36.0 * n / (l * l);
  }
  return 4.0 * n / inv_iterlog_ratio(std::log2(n), d - 3);
}

GapProbe gap_probe(const CheckerSpec& spec, int n_max, int c, const EnumOptions& opts) {
  if (c != spec.c) throw InputError("gap_probe: palette differs from the checker's");
  ColoringPruner pruner;
  if (is_d1_kind(spec)) pruner = d1_pruner(spec);
  GapProbe gp;
  for (int n = 1; n <= n_max && !gp.linear; ++n) {
    EnumOptions eo = opts;
    if (pruner && !eo.pruner) eo.pruner = &pruner;
    EnumResult res = enumerate_colored_trees(
        n, c,
        [&](const ColoredTree& t) {
          if (gp.linear || !accepts(spec, t).accepted) return;
          ++gp.accepted_scanned;
          gp.max_observed = std::max(gp.max_observed, diameter(t));
          if (auto pair = find_equal_view_edge_pair(t, spec.radius))
            gp.linear = LinearEvidence{t, pair->first, pair->second};
        },
        eo);
    gp.truncated = gp.truncated || res.truncated;
  }
  if (!gp.linear) {
    try {
      gp.bound = (4.0 * spec.radius * spec.radius + 4 * spec.radius + 1) *
                 threshold_S(c, spec.radius, n_max);
    } catch (const InputError&) {
      gp.bound = -1;
    }
  }
  return gp;
}

double RegimeCandidate::operator()(double n) const {
  n = std::max(n, 2.0);
  switch (kind) {
    case Kind::Constant: return 1.0;
    case Kind::Log: return std::log2(n);
    case Kind::LogOverLogLog: {
      double m = std::max(n, 4.0);
      return std::log2(m) / std::log2(std::log2(m));
    }
    case Kind::PowInvK: return std::pow(n, 1.0 / k);
    case Kind::Pow2c: return std::pow(n, 2.0 * c / (2 * c + 1));
    case Kind::Sqrt: return std::sqrt(n);
    case Kind::Linear: return n;
  }
  return 1.0;
}

std::string RegimeCandidate::name() const {
  switch (kind) {
    case Kind::Constant: return "constant";
    case Kind::Log: return "log";
    case Kind::LogOverLogLog: return "logloglog";
    case Kind::PowInvK: return "pow:1/" + std::to_string(k);
    case Kind::Pow2c: return "pow:2c/(2c+1),c=" + std::to_string(c);
    case Kind::Sqrt: return "sqrt";
    case Kind::Linear: return "linear";
  }
  return "?";
}

RegimeFit fit_regime(const LandscapeReport& rep, bool use_max, RegimeCandidate cand,
                     double factor) {
  std::vector<LandscapeRow> rows;
  for (const LandscapeRow& r : rep.rows)
    if (r.accepted_count > 0) rows.push_back(r);
  if (rows.size() < 5) throw InputError("fit_regime: need at least 5 rows");
  std::sort(rows.begin(), rows.end(),
            [](const LandscapeRow& a, const LandscapeRow& b) { return a.n < b.n; });
  RegimeFit fit;
  fit.candidate = cand;
  fit.use_max = use_max;
  fit.factor = factor;
  bool first = true;
  for (size_t i = rows.size() / 2; i < rows.size(); ++i) {
    double diam = use_max ? rows[i].max_diameter : rows[i].min_diameter;
    double ratio = diam / cand(static_cast<double>(rows[i].n));
    if (first) {
      fit.lo = fit.hi = ratio;
      first = false;
    } else {
      fit.lo = std::min(fit.lo, ratio);
      fit.hi = std::max(fit.hi, ratio);
    }
  }
  fit.pass = fit.lo > 0 && fit.hi / fit.lo <= factor;
  return fit;
}

}  // namespace treechk
