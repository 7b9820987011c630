#include "polyreg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "polyreg/errors.hpp"
#include "polyreg/json_io.hpp"

namespace polyreg::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string expr;
  std::string probes = "default";
  std::string slice;
  std::string perp;
  std::string alpha;
  unsigned m = 0;
  std::string f;
  std::string g;
  std::string op = "dot";
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> trials;
  std::string at;
};

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

ImagUnit parse_unit(const std::string& text) { return ImagUnit::from_quaternion(parse_quaternion(text)); }

std::vector<ProbePair> load_probes(const std::string& spec) {
  if (spec == "default") return default_probes();
  std::ifstream in(spec);
  if (!in) throw InvalidArgument("cannot open probe file '" + spec + "'");
  std::vector<ProbePair> out;
  std::string line;
  for (unsigned lineno = 1; std::getline(in, line); ++lineno) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) throw InvalidArgument("probe file line " + std::to_string(lineno) + ": expected I;J");
    try {
      out.push_back(validate_probe_pair(parse_unit(line.substr(0, semi)), parse_unit(line.substr(semi + 1))));
    } catch (const Error& e) {
      throw InvalidArgument("probe file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw EmptyProbeSet();
  return out;
}

std::string level_text(const IndexReport& r) {
  std::ostringstream out;
  out << "global: " << to_string(r.global) << "\n";
  for (std::size_t s = 0; s < r.per_slice.size(); ++s) {
    out << "  I=" << to_string(r.per_slice[s].I.value()) << ": " << to_string(r.per_slice[s].level);
    if (s < r.literal_rho.size()) out << "  (literal rho " << r.literal_rho[s] << ")";
    if (s < r.predicted_per_slice.size()) out << "  (predicted <= " << r.predicted_per_slice[s] << ")";
    out << "\n";
  }
  if (r.predicted_bound) out << "predicted bound: " << *r.predicted_bound << "\n";
  if (r.bound_tight) out << "bound tight: " << (*r.bound_tight ? "yes" : "no") << "\n";
  return out.str();
}

IndexReport levels_of(const Expr& e, const std::vector<ProbePair>& probes) {
  IndexReport r;
  for (const ProbePair& pr : probes) {
    Level lev = level_on_slice(restrict(e, pr.I));
    r.per_slice.push_back({pr.I, lev});
    r.global = std::max(r.global, lev);
  }
  if (e.kind() == Expr::Kind::Generic)
    for (const ProbePair& pr : probes) r.literal_rho.push_back(literal_rho(pr.I, e.value(), e.right_power()));
  return r;
}

std::string emit(const Options& o, const json& j, const std::string& text) {
  return o.format == "json" ? j.dump(2) + "\n" : text;
}

Result cmd_level(const Options& o) {
  IndexReport r = levels_of(parse_expr(o.expr), load_probes(o.probes));
  return {0, emit(o, to_json(r), level_text(r)), ""};
}

Result cmd_linearize(const Options& o) {
  ImagUnit I = parse_unit(o.slice);
  QbarDecomp d = qbar_taylor(restrict(parse_expr(o.expr), I));
  std::ostringstream text;
  text << "slice I=" << to_string(I.value()) << "\n";
  if (d.parts.empty()) text << "  zero function\n";
  for (std::size_t k = 0; k < d.parts.size(); ++k) text << "  phi_" << k << " = " << to_string(d.parts[k]) << "\n";
  return {0, emit(o, to_json(d), text.str()), ""};
}

Result cmd_split(const Options& o) {
  ProbePair pair = validate_probe_pair(parse_unit(o.slice), parse_unit(o.perp));
  SplitPair s = split_poly(restrict(parse_expr(o.expr), pair.I), pair);
  std::ostringstream text;
  text << "I=" << to_string(s.I.value()) << " J=" << to_string(s.J.value()) << "\n";
  text << "  F = " << to_string(component_poly(s.F, s.I)) << "\n";
  text << "  G = " << to_string(component_poly(s.G, s.I)) << "\n";
  return {0, emit(o, to_json(s), text.str()), ""};
}

Result cmd_index(const Options& o) {
  Quaternion alpha = parse_quaternion(o.alpha);
  IndexReport r = generic_index(alpha, o.m, load_probes(o.probes));
  json j = to_json(r);
  j["sphere_level"] = to_json(generic_sphere_level(alpha, o.m));
  j["literal_varrho"] = r.literal_varrho;
  std::string text = level_text(r) + "sphere level: " + to_string(generic_sphere_level(alpha, o.m)) + "\n" +
                     "literal varrho: " + std::to_string(r.literal_varrho) + "\n";
  return {0, emit(o, j, text), ""};
}

Result cmd_product(const Options& o) {
  std::vector<ProbePair> probes = load_probes(o.probes);
  Expr fe = parse_expr(o.f);
  Expr ge = parse_expr(o.g);
  if (o.op == "dot") {
    IndexReport r = product_level(expr_to_srpoly(fe), expr_to_srpoly(ge), probes);
    return {0, emit(o, to_json(r), level_text(r)), ""};
  }
  if (o.op == "star") {
    SRPoly s = star_product(expr_to_srpoly(fe), expr_to_srpoly(ge));
    IndexReport r = levels_of(srpoly_to_expr(s), probes);
    json j = to_json(r);
    j["product"] = to_string(s);
    j["coeffs"] = to_json(s);
    return {0, emit(o, j, "product: " + to_string(s) + "\n" + level_text(r)), ""};
  }
  IndexReport r;
  json slices = json::array();
  for (const ProbePair& pr : probes) {
    QbarDecomp fd = qbar_taylor(restrict(fe, pr.I));
    QbarDecomp gd = qbar_taylor(restrict(ge, pr.I));
    SlicePoly p = osp_product(fd.parts, gd.parts, pr.I);
    Level lev = level_on_slice(p);
    r.per_slice.push_back({pr.I, lev});
    r.global = std::max(r.global, lev);
    slices.push_back(to_json(p));
  }
  json j = to_json(r);
  j["restrictions"] = std::move(slices);
  return {0, emit(o, j, level_text(r)), ""};
}

Result cmd_verify(const Options& o) {
  std::vector<oracle::SuiteReport> reports;
  if (o.suite == "all") {
    reports = oracle::run_all_suites(o.seed, o.trials);
  } else {
    oracle::RandomSpec spec = oracle::RandomSpec::defaults_for(o.suite);
    if (o.seed) spec.seed = *o.seed;
    if (o.trials) spec.trials = *o.trials;
    reports.push_back(oracle::run_suite(o.suite, spec));
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  std::ostringstream text;
  json arr = json::array();
  for (const oracle::SuiteReport& r : reports) {
    arr.push_back(to_json(r));
    text << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials << " trials, " << r.failures.size()
         << " failures)\n";
    for (const std::string& n : r.notes) text << "  note: " << n << "\n";
    std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i)
      text << "  failure: " << r.failures[i].instance << "\n    expected " << r.failures[i].expected << "\n    actual   "
           << r.failures[i].actual << "\n";
    if (r.failures.size() > shown) text << "  ... " << r.failures.size() - shown << " more\n";
  }
  json j = o.suite == "all" ? arr : arr.front();
  return {ok ? 0 : 1, emit(o, j, text.str()), ""};
}

Result cmd_eval(const Options& o) {
  Quaternion v = eval_expr(parse_expr(o.expr), parse_quaternion(o.at));
  return {0, emit(o, json{{"value", to_string(v)}}, to_string(v) + "\n"), ""};
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact level analysis of quaternionic polynomial functions", "polyreg"};
  app.require_subcommand(1);
  auto format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto probes = [&o](CLI::App* sub) {
    sub->add_option("--probes", o.probes, "'default' or a file of I;J lines");
  };

  CLI::App* level = app.add_subcommand("level", "Exact level on each probe slice");
  level->add_option("--expr", o.expr, "Expression")->required();
  probes(level);
  format(level);

  CLI::App* linearize = app.add_subcommand("linearize", "qbar-Taylor decomposition on one slice");
  linearize->add_option("--expr", o.expr, "Expression")->required();
  linearize->add_option("--slice", o.slice, "Imaginary unit I")->required();
  format(linearize);

  CLI::App* split = app.add_subcommand("split", "Splitting f = F + G J on one slice");
  split->add_option("--expr", o.expr, "Expression")->required();
  split->add_option("--slice", o.slice, "Imaginary unit I")->required();
  split->add_option("--perp", o.perp, "Unit J orthogonal to I")->required();
  format(split);

  CLI::App* index = app.add_subcommand("index", "Level of the sandwich element q^n alpha q^m");
  index->add_option("--alpha", o.alpha, "Quaternion alpha")->required();
  index->add_option("--m", o.m, "Right power m")->required();
  probes(index);
  format(index);

  CLI::App* product = app.add_subcommand("product", "Level of a product of two polynomials");
  product->add_option("--f", o.f, "Left factor")->required();
  product->add_option("--g", o.g, "Right factor")->required();
  product->add_option("--op", o.op, "Product")->check(CLI::IsMember({"dot", "star", "osp"}));
  probes(product);
  format(product);

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->required();
  verify->add_option("--seed", o.seed, "Seed override");
  verify->add_option("--trials", o.trials, "Trial count override");
  format(verify);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate at a quaternion");
  eval->add_option("--expr", o.expr, "Expression")->required();
  eval->add_option("--at", o.at, "Point q")->required();
  format(eval);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string("usage error: ") + e.what() + "\n" + app.help()};
  }

  try {
    if (level->parsed()) return cmd_level(o);
    if (linearize->parsed()) return cmd_linearize(o);
    if (split->parsed()) return cmd_split(o);
    if (index->parsed()) return cmd_index(o);
    if (product->parsed()) return cmd_product(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_eval(o);
  } catch (const Error& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvariantViolation& e) {
    return {1, "", std::string("internal check failed: ") + e.what() + "\n"};
  }
}

}  // namespace polyreg::cli
