// treechk: local checkers on colored trees — check, generate, analyze.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treechk/analysis.hpp"
#include "treechk/checker.hpp"
#include "treechk/constructions.hpp"
#include "treechk/enumerate.hpp"
#include "treechk/io.hpp"
#include "treechk/surgery.hpp"

using namespace treechk;

namespace {

void emit(const std::string& out, const std::string& content) {
  if (out.empty())
    std::cout << content;
  else
    write_file(out, content);
}

EdgeRef parse_edge(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("edge must be u,v: " + s);
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("edge must be u,v: " + s);
  }
}

std::vector<long long> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) return {std::stoll(s)};
    long long lo = std::stoll(s.substr(0, dots));
    long long hi = std::stoll(s.substr(dots + 2));
    if (lo > hi) throw InputError("empty range: " + s);
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad number or range: " + s);
  }
}

int parse_scalar(const std::string& s, const char* name) {
  std::vector<long long> vals = parse_range(s);
  if (vals.size() != 1) throw InputError(std::string(name) + " must be a single value");
  return static_cast<int>(vals[0]);
}

EncodingSpec parse_encoding(const std::string& s, int d) {
  EncodingSpec enc;
  enc.d = d;
  if (s == "star") {
    enc.kind = EncodingSpec::Kind::StarD2;
  } else if (s.rfind("cstar:", 0) == 0) {
    enc.kind = EncodingSpec::Kind::ColoredStarD2;
    enc.c = parse_scalar(s.substr(6), "encoding colors");
  } else if (s.rfind("heightenum:", 0) == 0) {
    enc.kind = EncodingSpec::Kind::HeightEnum;
    enc.d = parse_scalar(s.substr(11), "encoding depth");
  } else {
    throw InputError("encoding must be star | cstar:c | heightenum:d, got " + s);
  }
  return enc;
}

TargetDiameter parse_target(const std::string& s) {
  TargetDiameter t;
  if (s == "sqrt") {
    t.kind = TargetDiameter::Kind::CeilPow;
    t.num = 1;
    t.den = 2;
  } else if (s.rfind("constant:", 0) == 0) {
    t.kind = TargetDiameter::Kind::ConstantK;
    t.k = parse_scalar(s.substr(9), "target constant");
  } else if (s.rfind("floor_pow:", 0) == 0 || s.rfind("ceil_pow:", 0) == 0) {
    bool fl = s[0] == 'f';
    t.kind = fl ? TargetDiameter::Kind::FloorPow : TargetDiameter::Kind::CeilPow;
    std::string frac = s.substr(fl ? 10 : 9);
    auto slash = frac.find('/');
    if (slash == std::string::npos) throw InputError("pow target must be num/den");
    t.num = parse_scalar(frac.substr(0, slash), "target num");
    t.den = parse_scalar(frac.substr(slash + 1), "target den");
  } else if (s == "floor_log") {
    t.kind = TargetDiameter::Kind::FloorLog;
  } else if (s.rfind("table:", 0) == 0) {
    t.kind = TargetDiameter::Kind::Table;
    std::string rest = s.substr(6);
    size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      t.table.push_back(parse_scalar(rest.substr(pos, comma - pos), "table entry"));
      pos = comma + 1;
    }
  } else {
    throw InputError("unknown target: " + s);
  }
  return t;
}

struct GenArgs {
  std::string family, out;
  std::string n, a, i, k, ell, d, p;
  std::string language, encoding = "star", target;
};

int cmd_generate(const GenArgs& g) {
  using K = FamilySpec::Kind;
  FamilySpec f;
  std::string index;  // the one parameter that may be a range
  if (g.family == "path") {
    f.kind = K::Path;
    index = "n";
  } else if (g.family == "star") {
    f.kind = K::Star;
    index = "n";
  } else if (g.family == "binary") {
    f.kind = K::BinaryComplete;
    index = "n";
  } else if (g.family == "increasing-caterpillar") {
    f.kind = K::IncreasingCaterpillar;
    index = "i";
  } else if (g.family == "ary-pended") {
    f.kind = K::AryPended;
    index = "i";
  } else if (g.family == "factorial") {
    f.kind = K::FactorialTree;
    index = "i";
  } else if (g.family == "rake") {
    f.kind = K::KRake;
    index = "ell";
  } else if (g.family == "l1-caterpillar") {
    f.kind = K::L1Caterpillar;
    f.lang.kind = LanguageSpec::Kind::L1;
    index = "p";
  } else if (g.family == "l2-caterpillar") {
    f.kind = K::L2Caterpillar;
    f.lang.kind = LanguageSpec::Kind::L2;
    index = "p";
  } else if (g.family == "exact-diameter") {
    f.kind = K::ExactDiameter;
    index = "p";
  } else if (g.family == "logcase") {
    f.kind = K::LogCase;
    index = "i";
  } else {
    throw InputError("unknown family: " + g.family);
  }

  if (!g.a.empty()) f.a = parse_scalar(g.a, "--a");
  if (!g.k.empty()) f.k = parse_scalar(g.k, "--k");
  if (!g.d.empty()) f.d = parse_scalar(g.d, "--d");
  if (!g.language.empty()) {
    if (g.language == "l1")
      f.lang.kind = LanguageSpec::Kind::L1;
    else if (g.language == "l2")
      f.lang.kind = LanguageSpec::Kind::L2;
    else
      throw InputError("language must be l1 or l2");
  }
  f.enc = parse_encoding(g.encoding, f.d);
  if (!g.target.empty()) f.target = parse_target(g.target);
  if (f.kind == K::ExactDiameter && g.target.empty())
    throw InputError("exact-diameter needs --target");

  std::string index_arg = index == "n" ? g.n : index == "i" ? g.i : index == "ell" ? g.ell : g.p;
  for (const auto& [name, val] :
       {std::pair<std::string, std::string>{"n", g.n}, {"i", g.i}, {"ell", g.ell}, {"p", g.p}}) {
    if (name == index || val.empty()) continue;
    if (name == "n")
      f.n = parse_scalar(val, "--n");
    else if (name == "i")
      f.i = parse_scalar(val, "--i");
    else if (name == "ell")
      f.ell = parse_scalar(val, "--ell");
    else
      f.p = parse_scalar(val, "--p");
  }
  if (index_arg.empty()) throw InputError("family " + g.family + " needs --" + index);
  std::vector<long long> values = parse_range(index_arg);

  // Build everything first, write only after all succeed.
  std::vector<std::pair<long long, ColoredTree>> made;
  for (long long v : values) {
    FamilySpec inst = f;
    int iv = static_cast<int>(v);
    if (index == "n")
      inst.n = iv;
    else if (index == "i")
      inst.i = iv;
    else if (index == "ell")
      inst.ell = iv;
    else
      inst.p = iv;
    made.emplace_back(v, gen_family(inst));
  }

  auto ends_with = [](const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
  };
  std::string csv = index + ",n,diam\n";
  for (const auto& [v, t] : made)
    csv += std::to_string(v) + "," + std::to_string(t.n()) + "," + std::to_string(diameter(t)) +
           "\n";

  if (ends_with(g.out, ".json")) {
    if (made.size() != 1) throw InputError("single .json output needs a single-value range");
    save_tree(made[0].second, g.out);
    return 0;
  }
  if (ends_with(g.out, ".jsonl")) {
    std::vector<ColoredTree> ts;
    for (auto& [v, t] : made) ts.push_back(t);
    write_file(g.out, trees_to_jsonl(ts));
    write_file(g.out.substr(0, g.out.size() - 6) + ".csv", csv);
    return 0;
  }
  if (g.out.empty()) throw InputError("generate needs --out");
  for (const auto& [v, t] : made) save_tree(t, g.out + "_" + std::to_string(v) + ".json");
  write_file(g.out + ".csv", csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local checkers on colored trees: verdicts, families, diameter landscapes"};
  app.set_config("--config", "", "config file mirroring the flags (flags win)");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized trials (reports are deterministic)");
  app.require_subcommand(1);

  std::string tree_path, checker_arg, out, svg_out;

  auto* check = app.add_subcommand("check", "run a checker on one tree");
  check->add_option("--tree", tree_path, "tree json file")->required();
  check->add_option("--checker", checker_arg, "checker json file or preset name")->required();
  check->add_option("--out", out, "verdict json output (default stdout)");

  GenArgs gen;
  auto* generate = app.add_subcommand("generate", "emit family instances + size/diameter csv");
  generate->add_option("--family", gen.family,
                       "path|star|binary|increasing-caterpillar|ary-pended|factorial|rake|"
                       "l1-caterpillar|l2-caterpillar|exact-diameter|logcase")
      ->required();
  generate->add_option("--n", gen.n, "vertex count (path|star|binary); ranges as lo..hi");
  generate->add_option("--a", gen.a, "arity / base parameter");
  generate->add_option("--i", gen.i, "family index; ranges as lo..hi");
  generate->add_option("--k", gen.k, "rake depth");
  generate->add_option("--ell", gen.ell, "rake side length; ranges as lo..hi");
  generate->add_option("--d", gen.d, "checker radius for caterpillar families");
  generate->add_option("--p", gen.p, "alphabet size; ranges as lo..hi");
  generate->add_option("--language", gen.language, "l1|l2 (exact-diameter)");
  generate->add_option("--encoding", gen.encoding, "star|cstar:c|heightenum:d");
  generate->add_option("--target", gen.target,
                       "sqrt|constant:k|floor_pow:a/b|ceil_pow:a/b|floor_log|table:v1,v2,...");
  generate->add_option("--out", gen.out, ".json (single) | .jsonl | file prefix")->required();

  int nmax = 0, c_opt = 0;
  long long cap = -1;
  std::string mode = "enumerate", trees_path;
  auto* land = app.add_subcommand("landscape", "per-n min/max accepted diameter");
  land->add_option("--checker", checker_arg, "checker json file or preset name")->required();
  land->add_option("--nmax", nmax, "largest n to enumerate");
  land->add_option("--c", c_opt, "palette (default: checker palette)");
  land->add_option("--cap", cap, "per-n enumeration cap (default env TREECHK_CAP or 1e7)");
  land->add_option("--mode", mode, "enumerate|families");
  land->add_option("--trees", trees_path, "instances .jsonl (families mode)");
  land->add_option("--out", out, "csv output (default stdout)");
  land->add_option("--svg", svg_out, "also write a log-log min/max plot");

  auto* probe = app.add_subcommand("gapprobe", "pumpable-pair evidence or diameter bound");
  probe->add_option("--checker", checker_arg, "checker json file or preset name")->required();
  probe->add_option("--nmax", nmax, "largest n to scan")->required();
  probe->add_option("--c", c_opt, "palette (default: checker palette)");
  probe->add_option("--cap", cap, "enumeration cap");
  probe->add_option("--out", out, "json output (default stdout)");

  std::string csv_path, candidate, which = "max";
  double factor = 4.0;
  int fit_k = 2, fit_c = 1;
  auto* fit = app.add_subcommand("fit", "ratio-window regime fit on a landscape csv");
  fit->add_option("--csv", csv_path, "landscape csv")->required();
  fit->add_option("--candidate", candidate, "constant|log|logloglog|pow1k|pow2c|sqrt|linear")
      ->required();
  fit->add_option("--which", which, "max|min diameter column");
  fit->add_option("--factor", factor, "window factor (default 4)");
  fit->add_option("--k", fit_k, "k for pow1k: n^{1/k}");
  fit->add_option("--c", fit_c, "c for pow2c: n^{2c/(2c+1)}");
  fit->add_option("--out", out, "json output (default stdout)");

  auto* surgery = app.add_subcommand("surgery", "graft | pump | duplicate | order");
  surgery->require_subcommand(1);
  std::string tree2_path, edge1_s, edge2_s;
  int pump_i = 2, pump_d = 1, order_c = 1;
  auto* sgraft = surgery->add_subcommand("graft", "replace across --edge1 by tree2's --edge2 side");
  sgraft->add_option("--tree", tree_path)->required();
  sgraft->add_option("--edge1", edge1_s, "u,v in tree")->required();
  sgraft->add_option("--tree2", tree2_path)->required();
  sgraft->add_option("--edge2", edge2_s, "u,v in tree2")->required();
  sgraft->add_option("--out", out, "tree json output")->required();
  auto* spump = surgery->add_subcommand("pump", "replicate the uv..xy segment i times");
  spump->add_option("--tree", tree_path)->required();
  spump->add_option("--uv", edge1_s, "first edge u,v")->required();
  spump->add_option("--xy", edge2_s, "second edge x,y (path order)")->required();
  spump->add_option("--i", pump_i, "pump count (>= 1)");
  spump->add_option("--d", pump_d, "view radius the edges agree at");
  spump->add_option("--out", out, "tree json output")->required();
  auto* sdup = surgery->add_subcommand("duplicate", "cross two copies at --edge1");
  sdup->add_option("--tree", tree_path, "graph json file")->required();
  sdup->add_option("--edge1", edge1_s, "u,v")->required();
  sdup->add_option("--out", out, "graph json output")->required();
  auto* sorder = surgery->add_subcommand("order", "useful pairs + order relation report");
  sorder->add_option("--trees", trees_path, "accepted samples .jsonl")->required();
  sorder->add_option("--c", order_c, "palette")->required();
  sorder->add_option("--out", out, "json output (default stdout)");

  int enum_n = 1, enum_c = 1;
  auto* senum = app.add_subcommand("enumerate", "all colored trees on n vertices as jsonl");
  senum->add_option("--n", enum_n, "vertex count")->required();
  senum->add_option("--c", enum_c, "palette")->required();
  senum->add_option("--cap", cap, "enumeration cap");
  senum->add_option("--out", out, "jsonl output (default stdout)");

  int hk = 1, hd = -1;
  bool at_most = false;
  auto* sheights = app.add_subcommand("count-heights", "rooted trees on k vertices by height");
  sheights->add_option("--k", hk, "vertex count")->required();
  sheights->add_option("--d", hd, "single height (default: all)");
  sheights->add_flag("--at-most", at_most, "count height <= d instead of exactly d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      CheckerSpec spec = load_checker_arg(checker_arg);
      Verdict v = accepts(spec, load_tree(tree_path));
      emit(out, verdict_json(v) + "\n");
      return v.accepted ? 0 : 1;
    }
    if (generate->parsed()) return cmd_generate(gen);
    if (land->parsed()) {
      CheckerSpec spec = load_checker_arg(checker_arg);
      LandscapeReport rep;
      if (mode == "enumerate") {
        if (nmax <= 0) throw InputError("landscape --mode enumerate needs --nmax");
        EnumOptions opts;
        opts.cap = cap;
        rep = landscape(spec, nmax, c_opt > 0 ? c_opt : spec.c, opts);
      } else if (mode == "families") {
        if (trees_path.empty()) throw InputError("landscape --mode families needs --trees");
        rep = landscape_families(spec, load_trees(trees_path));
      } else {
        throw InputError("mode must be enumerate or families");
      }
      emit(out, landscape_csv(rep));
      if (!svg_out.empty()) write_file(svg_out, landscape_svg(rep));
      return 0;
    }
    if (probe->parsed()) {
      CheckerSpec spec = load_checker_arg(checker_arg);
      EnumOptions opts;
      opts.cap = cap;
      GapProbe gp = gap_probe(spec, nmax, c_opt > 0 ? c_opt : spec.c, opts);
      emit(out, gap_probe_json(gp) + "\n");
      return 0;
    }
    if (fit->parsed()) {
      RegimeCandidate cand;
      using RK = RegimeCandidate::Kind;
      if (candidate == "constant")
        cand.kind = RK::Constant;
      else if (candidate == "log")
        cand.kind = RK::Log;
      else if (candidate == "logloglog")
        cand.kind = RK::LogOverLogLog;
      else if (candidate == "pow1k")
        cand.kind = RK::PowInvK;
      else if (candidate == "pow2c")
        cand.kind = RK::Pow2c;
      else if (candidate == "sqrt")
        cand.kind = RK::Sqrt;
      else if (candidate == "linear")
        cand.kind = RK::Linear;
      else
        throw InputError("unknown candidate: " + candidate);
      cand.k = fit_k;
      cand.c = fit_c;
      if (which != "max" && which != "min") throw InputError("--which must be max or min");
      RegimeFit rf = fit_regime(landscape_from_csv(read_file(csv_path)), which == "max", cand,
                                factor);
      emit(out, regime_fit_json(rf) + "\n");
      return rf.pass ? 0 : 1;
    }
    if (sgraft->parsed()) {
      ColoredTree out_t = graft(load_tree(tree_path), parse_edge(edge1_s), load_tree(tree2_path),
                                parse_edge(edge2_s));
      save_tree(out_t, out);
      return 0;
    }
    if (spump->parsed()) {
      ColoredTree out_t =
          pump(load_tree(tree_path), parse_edge(edge1_s), parse_edge(edge2_s), pump_i, pump_d);
      save_tree(out_t, out);
      return 0;
    }
    if (sdup->parsed()) {
      save_tree(duplicate(load_tree(tree_path), parse_edge(edge1_s)), out);
      return 0;
    }
    if (sorder->parsed()) {
      OrderRelation rel = order_relation(load_trees(trees_path), order_c);
      emit(out, order_relation_json(rel) + "\n");
      return 0;
    }
    if (senum->parsed()) {
      std::string lines;
      EnumOptions opts;
      opts.cap = cap;
      EnumResult res = enumerate_colored_trees(
          enum_n, enum_c, [&](const ColoredTree& t) { lines += tree_to_json(t) + "\n"; }, opts);
      emit(out, lines);
      if (res.truncated) std::cerr << "truncated at " << res.count << " trees\n";
      return 0;
    }
    if (sheights->parsed()) {
      std::string table = "d,count\n";
      if (hd >= 0) {
        table += std::to_string(hd) + "," + std::to_string(count_height_trees(hd, hk, at_most)) +
                 "\n";
      } else {
        for (int d = 0; d < hk; ++d)
          table += std::to_string(d) + "," + std::to_string(count_height_trees(d, hk, at_most)) +
                   "\n";
      }
      std::cout << table;
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
