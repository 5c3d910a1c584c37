#pragma once

#include <string>

#include "treechk/analysis.hpp"
#include "treechk/checker.hpp"
#include "treechk/surgery.hpp"

namespace treechk {

// Tree file format: {"c": int, "colors": [int...], "edges": [[u,v]...]},
// 0-based vertex ids; JSONL variant is one such object per line.
std::string tree_to_json(const ColoredGraph& g);
ColoredGraph tree_from_json(const std::string& text);
std::string trees_to_jsonl(const std::vector<ColoredTree>& ts);
std::vector<ColoredTree> trees_from_jsonl(const std::string& text);

ColoredGraph load_tree(const std::string& path);
void save_tree(const ColoredGraph& g, const std::string& path);
// .jsonl loads every line; anything else loads one tree
std::vector<ColoredTree> load_trees(const std::string& path);

// Checker spec JSON, tagged by kind. Custom checkers cannot be serialized.
std::string checker_to_json(const CheckerSpec& spec);
CheckerSpec checker_from_json(const std::string& text);
// preset name (paths, binary, accept-all, rake:k, myopic:...) or a file path
CheckerSpec load_checker_arg(const std::string& preset_or_path);

std::string verdict_json(const Verdict& v);

// CSV columns: n,accepted_count,min_diameter,max_diameter,truncated
std::string landscape_csv(const LandscapeReport& rep);
LandscapeReport landscape_from_csv(const std::string& text);
std::string landscape_svg(const LandscapeReport& rep);  // log-log min/max plot

std::string gap_probe_json(const GapProbe& gp);
std::string regime_fit_json(const RegimeFit& fit);
// {pairs, edges, chain, strict}
std::string order_relation_json(const OrderRelation& rel);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace treechk
