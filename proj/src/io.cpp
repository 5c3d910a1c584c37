#include "treechk/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace treechk {

using nlohmann::json;

namespace {

json bound_json(long long b) {
  if (b == kUnbounded) return "inf";
  return b;
}

long long bound_from(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kUnbounded;
    throw InputError("bad bound token: " + j.get<std::string>());
  }
  return j.get<long long>();
}

json interval_json(const Interval& iv) { return json::array({bound_json(iv.lo), bound_json(iv.hi)}); }

Interval interval_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("interval must be [lo, hi]");
  return {bound_from(j[0]), bound_from(j[1])};
}

// Myopic a/b values are capped at 64 in the file format; inf stays distinct.
long long clamp64(long long b) { return b == kUnbounded ? b : std::min(b, 64LL); }

json myopic_interval_json(const Interval& iv) {
  return json::array({bound_json(clamp64(iv.lo)), bound_json(clamp64(iv.hi))});
}

Interval myopic_interval_from(const json& j) {
  Interval iv = interval_from(j);
  return {clamp64(iv.lo), clamp64(iv.hi)};
}

json tree_json(const ColoredGraph& g) {
  json edges = json::array();
  for (auto& [u, v] : g.edges) edges.push_back({u, v});
  return json{{"c", g.c}, {"colors", g.colors}, {"edges", edges}};
}

ColoredGraph tree_from(const json& j) {
  ColoredGraph g;
  g.c = j.at("c").get<int>();
  g.colors = j.at("colors").get<std::vector<int>>();
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be [u, v]");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  validate_graph(g);
  return g;
}

json encoding_json(const EncodingSpec& enc) {
  switch (enc.kind) {
    case EncodingSpec::Kind::StarD2: return json{{"kind", "star"}};
    case EncodingSpec::Kind::ColoredStarD2: return json{{"kind", "cstar"}, {"c", enc.c}};
    case EncodingSpec::Kind::HeightEnum: return json{{"kind", "heightenum"}, {"d", enc.d}};
  }
  throw InputError("unknown encoding kind");
}

EncodingSpec encoding_from(const json& j) {
  EncodingSpec enc;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "star") {
    enc.kind = EncodingSpec::Kind::StarD2;
    enc.d = 2;
  } else if (kind == "cstar") {
    enc.kind = EncodingSpec::Kind::ColoredStarD2;
    enc.c = j.at("c").get<int>();
    enc.d = 2;
  } else if (kind == "heightenum") {
    enc.kind = EncodingSpec::Kind::HeightEnum;
    enc.d = j.at("d").get<int>();
  } else {
    throw InputError("unknown encoding kind: " + kind);
  }
  return enc;
}

json target_json(const TargetDiameter& t) {
  switch (t.kind) {
    case TargetDiameter::Kind::ConstantK: return json{{"kind", "constant"}, {"k", t.k}};
    case TargetDiameter::Kind::FloorPow:
      return json{{"kind", "floor_pow"}, {"num", t.num}, {"den", t.den}};
    case TargetDiameter::Kind::CeilPow:
      return json{{"kind", "ceil_pow"}, {"num", t.num}, {"den", t.den}};
    case TargetDiameter::Kind::FloorLog: return json{{"kind", "floor_log"}};
    case TargetDiameter::Kind::Table: return json{{"kind", "table"}, {"values", t.table}};
  }
  throw InputError("unknown target kind");
}

TargetDiameter target_from(const json& j) {
  TargetDiameter t;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    t.kind = TargetDiameter::Kind::ConstantK;
    t.k = j.at("k").get<long long>();
  } else if (kind == "floor_pow" || kind == "ceil_pow") {
    t.kind = kind == "floor_pow" ? TargetDiameter::Kind::FloorPow : TargetDiameter::Kind::CeilPow;
    t.num = j.at("num").get<long long>();
    t.den = j.at("den").get<long long>();
    if (t.num < 1 || t.den < 1) throw InputError("pow target needs num, den >= 1");
  } else if (kind == "floor_log") {
    t.kind = TargetDiameter::Kind::FloorLog;
  } else if (kind == "table") {
    t.kind = TargetDiameter::Kind::Table;
    t.table = j.at("values").get<std::vector<long long>>();
  } else {
    throw InputError("unknown target kind: " + kind);
  }
  return t;
}

LanguageSpec language_from(const std::string& name) {
  LanguageSpec lang;
  if (name == "l1")
    lang.kind = LanguageSpec::Kind::L1;
  else if (name == "l2")
    lang.kind = LanguageSpec::Kind::L2;
  else
    throw InputError("unknown language: " + name);
  return lang;
}

}  // namespace

std::string tree_to_json(const ColoredGraph& g) { return tree_json(g).dump(); }

ColoredGraph tree_from_json(const std::string& text) {
  try {
    return tree_from(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad tree json: ") + e.what());
  }
}

std::string trees_to_jsonl(const std::vector<ColoredTree>& ts) {
  std::string out;
  for (const ColoredTree& t : ts) {
    out += tree_json(t).dump();
    out += '\n';
  }
  return out;
}

std::vector<ColoredTree> trees_from_jsonl(const std::string& text) {
  std::vector<ColoredTree> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(tree_from_json(line));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot write " + tmp);
    out << content;
    if (!out) throw InputError("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

ColoredGraph load_tree(const std::string& path) { return tree_from_json(read_file(path)); }

void save_tree(const ColoredGraph& g, const std::string& path) {
  write_file(path, tree_to_json(g) + "\n");
}

std::vector<ColoredTree> load_trees(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl")
    return trees_from_jsonl(text);
  return {tree_from_json(text)};
}

std::string checker_to_json(const CheckerSpec& spec) {
  json j;
  switch (spec.kind) {
    case CheckerSpec::Kind::DegreeSet: {
      j["kind"] = "degree_set";
      json parts = json::array();
      for (const Interval& iv : spec.degree_set.parts) parts.push_back(interval_json(iv));
      j["degrees"] = parts;
      break;
    }
    case CheckerSpec::Kind::Distance1Rules: {
      j["kind"] = "distance1";
      j["c"] = spec.c;
      json rules = json::array();
      for (const Distance1Rule& r : spec.rules) {
        json counts = json::array();
        for (const Interval& iv : r.neighbor_counts) counts.push_back(interval_json(iv));
        rules.push_back(json{{"own", r.own_color}, {"counts", counts}});
      }
      j["rules"] = rules;
      break;
    }
    case CheckerSpec::Kind::Rake:
      j["kind"] = "rake";
      j["k"] = spec.rake_k;
      break;
    case CheckerSpec::Kind::SpecialCaterpillar:
    case CheckerSpec::Kind::PaddedDiameter:
      j["kind"] = spec.kind == CheckerSpec::Kind::SpecialCaterpillar ? "special" : "padded";
      j["d"] = spec.cat_d;
      j["language"] = spec.language.kind == LanguageSpec::Kind::L1 ? "l1" : "l2";
      j["encoding"] = encoding_json(spec.enc);
      if (spec.kind == CheckerSpec::Kind::PaddedDiameter) j["target"] = target_json(spec.target);
      break;
    case CheckerSpec::Kind::DegreeMyopic:
      j["kind"] = "myopic";
      j["leaf"] = myopic_interval_json(spec.myopic.leaf);
      j["minus"] = myopic_interval_json(spec.myopic.minus);
      j["equal"] = myopic_interval_json(spec.myopic.equal);
      j["plus"] = myopic_interval_json(spec.myopic.plus);
      break;
    case CheckerSpec::Kind::Custom:
      throw InputError("custom checkers are not serializable");
  }
  return j.dump();
}

CheckerSpec checker_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad checker json: ") + e.what());
  }
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "degree_set") {
      IntervalSet s;
      for (const json& p : j.at("degrees")) s.parts.push_back(interval_from(p));
      return make_degree_set_checker(s);
    }
    if (kind == "distance1") {
      std::vector<Distance1Rule> rules;
      for (const json& rj : j.at("rules")) {
        Distance1Rule r;
        r.own_color = rj.at("own").get<int>();
        for (const json& cj : rj.at("counts")) r.neighbor_counts.push_back(interval_from(cj));
        rules.push_back(std::move(r));
      }
      return make_distance1_checker(j.at("c").get<int>(), std::move(rules));
    }
    if (kind == "rake") return make_rake_checker(j.at("k").get<int>());
    if (kind == "special" || kind == "padded") {
      int d = j.at("d").get<int>();
      LanguageSpec lang = language_from(j.at("language").get<std::string>());
      EncodingSpec enc = encoding_from(j.at("encoding"));
      if (kind == "special") return make_special_checker(d, lang, enc);
      return make_padded_checker(d, lang, enc, target_from(j.at("target")));
    }
    if (kind == "myopic") {
      MyopicParams p;
      p.leaf = myopic_interval_from(j.at("leaf"));
      p.minus = myopic_interval_from(j.at("minus"));
      p.equal = myopic_interval_from(j.at("equal"));
      p.plus = myopic_interval_from(j.at("plus"));
      return make_myopic_checker(p);
    }
    throw InputError("unknown checker kind: " + kind);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad checker json: ") + e.what());
  }
}

CheckerSpec load_checker_arg(const std::string& preset_or_path) {
  if (std::filesystem::exists(preset_or_path))
    return checker_from_json(read_file(preset_or_path));
  try {
    return preset_checker(preset_or_path);
  } catch (const InputError&) {
    throw InputError("checker '" + preset_or_path + "' is neither a file nor a preset");
  }
}

std::string verdict_json(const Verdict& v) {
  return json{{"accepted", v.accepted}, {"witness", v.witness}}.dump();
}

std::string landscape_csv(const LandscapeReport& rep) {
  std::string out = "n,accepted_count,min_diameter,max_diameter,truncated\n";
  for (const LandscapeRow& r : rep.rows)
    out += std::to_string(r.n) + "," + std::to_string(r.accepted_count) + "," +
           std::to_string(r.min_diameter) + "," + std::to_string(r.max_diameter) + "," +
           (r.truncated ? "1" : "0") + "\n";
  return out;
}

LandscapeReport landscape_from_csv(const std::string& text) {
  LandscapeReport rep;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (line.empty()) continue;
    LandscapeRow r;
    char comma;
    int trunc = 0;
    std::istringstream ls(line);
    if (!(ls >> r.n >> comma >> r.accepted_count >> comma >> r.min_diameter >> comma >>
          r.max_diameter >> comma >> trunc))
      throw InputError("bad landscape csv row: " + line);
    r.truncated = trunc != 0;
    rep.rows.push_back(r);
  }
  return rep;
}

std::string landscape_svg(const LandscapeReport& rep) {
  const double W = 640, H = 480, M = 50;
  double xmax = 1, ymax = 1;
  for (const LandscapeRow& r : rep.rows) {
    if (r.accepted_count == 0) continue;
    xmax = std::max(xmax, std::log2(static_cast<double>(r.n) + 1));
    ymax = std::max(ymax, std::log2(static_cast<double>(r.max_diameter) + 2));
  }
  auto px = [&](double n) { return M + (W - 2 * M) * std::log2(n + 1) / xmax; };
  auto py = [&](double d) { return H - M - (H - 2 * M) * std::log2(d + 2) / ymax; };
  std::ostringstream s;
  s << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  s << "<rect width='100%' height='100%' fill='white'/>\n";
  s << "<line x1='" << M << "' y1='" << H - M << "' x2='" << W - M << "' y2='" << H - M
    << "' stroke='black'/>\n";
  s << "<line x1='" << M << "' y1='" << M << "' x2='" << M << "' y2='" << H - M
    << "' stroke='black'/>\n";
  s << "<text x='" << W / 2 << "' y='" << H - 10 << "'>log2 n</text>\n";
  s << "<text x='8' y='" << M - 10 << "'>log2 diameter</text>\n";
  for (int which = 0; which < 2; ++which) {
    std::ostringstream pts;
    for (const LandscapeRow& r : rep.rows) {
      if (r.accepted_count == 0) continue;
      pts << px(r.n) << "," << py(which ? r.max_diameter : r.min_diameter) << " ";
    }
    s << "<polyline fill='none' stroke='" << (which ? "crimson" : "steelblue")
      << "' points='" << pts.str() << "'/>\n";
  }
  s << "<text x='" << W - M - 90 << "' y='" << M << "' fill='crimson'>max</text>\n";
  s << "<text x='" << W - M - 90 << "' y='" << M + 16 << "' fill='steelblue'>min</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::string gap_probe_json(const GapProbe& gp) {
  json j;
  if (gp.linear) {
    j["linear"] = json{{"tree", tree_json(gp.linear->tree)},
                       {"e", {gp.linear->e.u, gp.linear->e.v}},
                       {"f", {gp.linear->f.u, gp.linear->f.v}}};
  } else {
    j["linear"] = nullptr;
    j["bound"] = gp.bound;
  }
  j["max_observed"] = gp.max_observed;
  j["accepted_scanned"] = gp.accepted_scanned;
  j["truncated"] = gp.truncated;
  return j.dump(2);
}

std::string regime_fit_json(const RegimeFit& fit) {
  return json{{"candidate", fit.candidate.name()}, {"which", fit.use_max ? "max" : "min"},
              {"lo", fit.lo},
              {"hi", fit.hi},
              {"factor", fit.factor},
              {"pass", fit.pass}}
      .dump(2);
}

std::string order_relation_json(const OrderRelation& rel) {
  json pairs = json::array();
  for (const ColorPair& p : rel.useful) pairs.push_back({p.c1, p.c2});
  json edges = json::array();
  for (const OrderWitness& w : rel.edges)
    edges.push_back(json{{"from", {w.from.c1, w.from.c2}},
                         {"to", {w.to.c1, w.to.c2}},
                         {"tree", tree_json(w.tree)},
                         {"root", w.root},
                         {"verts", w.verts}});
  json chain = json::array();
  for (const ColorPair& p : rel.longest_chain) chain.push_back({p.c1, p.c2});
  return json{{"pairs", pairs}, {"edges", edges}, {"chain", chain}, {"strict", !rel.non_strict}}
      .dump(2);
}

}  // namespace treechk
