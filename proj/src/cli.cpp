#include "cyclo/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <thread>

#include "CLI11.hpp"

namespace cyclo {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::set<std::string> kCaseKeys = {
    "theorem", "p",   "q",      "p1",      "p2",       "x",      "y",           "x1",
    "x2",      "exps", "roots", "kernel", "rational", "nmax",   "printed",     "other_branch",
    "relaxed", "closure_tol", "label"};

enum class CaseKind { Parity, Closure, Thm6 };

std::string theorem_of(const Json& c) {
  if (!c.is_object()) fail(ErrorKind::Parse, "a case must be a JSON object");
  if (!c.contains("theorem") || !c["theorem"].is_string())
    fail(ErrorKind::Parse, "a case needs a \"theorem\" string");
  for (const auto& [k, v] : c.items())
    if (!kCaseKeys.count(k)) fail(ErrorKind::Parse, "unknown case parameter '" + k + "'");
  return c["theorem"].get<std::string>();
}

CaseKind kind_of(const std::string& name) {
  if (name == "closure") return CaseKind::Closure;
  if (name == "T61" || name == "T62" || name == "T63a" || name == "T63b") return CaseKind::Thm6;
  parse_theorem(name);
  return CaseKind::Parity;
}

int int_param(const Json& c, const char* key, std::optional<int> def = std::nullopt) {
  if (!c.contains(key)) {
    if (def) return *def;
    fail(ErrorKind::Parse, std::string("missing parameter '") + key + "'");
  }
  const Json& v = c[key];
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    auto l = parse_int_list(v.get<std::string>());
    if (l.size() == 1) return l[0];
  }
  fail(ErrorKind::Parse, std::string("parameter '") + key + "' must be an integer");
}

std::string text_of(const Json& v, const char* key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::Parse, std::string("parameter '") + key + "' must be a string");
}

RootOfUnity root_param(const Json& c, const char* key,
                       std::optional<RootOfUnity> def = std::nullopt) {
  if (!c.contains(key)) {
    if (def) return *def;
    fail(ErrorKind::Parse, std::string("missing root '") + key + "'");
  }
  return RootOfUnity::parse(text_of(c[key], key));
}

std::vector<int> int_list_param(const Json& c, const char* key) {
  if (!c.contains(key)) fail(ErrorKind::Parse, std::string("missing parameter '") + key + "'");
  const Json& v = c[key];
  if (v.is_array()) {
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) fail(ErrorKind::Parse, std::string(key) + " entries must be integers");
      out.push_back(e.get<int>());
    }
    return out;
  }
  if (v.is_number_integer()) return {v.get<int>()};
  if (v.is_string()) return parse_int_list(v.get<std::string>());
  fail(ErrorKind::Parse, std::string("parameter '") + key + "' must be a list of integers");
}

std::optional<std::vector<RootOfUnity>> root_list_param(const Json& c, const char* key) {
  if (!c.contains(key)) return std::nullopt;
  const Json& v = c[key];
  if (v.is_array()) {
    std::vector<RootOfUnity> out;
    for (const auto& e : v) out.push_back(RootOfUnity::parse(text_of(e, key)));
    return out;
  }
  return parse_root_list(text_of(v, key));
}

bool bool_param(const Json& c, const char* key) {
  if (!c.contains(key)) return false;
  if (!c[key].is_boolean()) fail(ErrorKind::Parse, std::string("parameter '") + key + "' must be boolean");
  return c[key].get<bool>();
}

double double_param(const Json& c, const char* key, double def) {
  if (!c.contains(key)) return def;
  if (!c[key].is_number()) fail(ErrorKind::Parse, std::string("parameter '") + key + "' must be a number");
  return c[key].get<double>();
}

FactoredRational rational_param(const Json& c) {
  if (!c.contains("rational")) fail(ErrorKind::Parse, "missing parameter 'rational'");
  const Json& v = c["rational"];
  if (v.is_object()) return rational_from_json(v);
  if (v.is_string()) return parse_rational_text(v.get<std::string>());
  fail(ErrorKind::Parse, "rational must be an object or a string");
}

ParityCase parity_case(const Json& c) {
  ParityCase pc;
  pc.theorem = parse_theorem(c["theorem"].get<std::string>());
  switch (pc.theorem) {
    case Theorem::T31:
    case Theorem::T41:
    case Theorem::Cor33:
      pc.exps = {int_param(c, "p"), int_param(c, "q")};
      pc.roots = {root_param(c, "x"), root_param(c, "y")};
      break;
    case Theorem::T32:
    case Theorem::T42:
      pc.exps = {int_param(c, "p1"), int_param(c, "p2"), int_param(c, "q")};
      pc.roots = {root_param(c, "x"), root_param(c, "x1"), root_param(c, "x2")};
      break;
    case Theorem::SplitS:
    case Theorem::SplitR: {
      pc.exps = int_list_param(c, "exps");
      auto r = root_list_param(c, "roots");
      if (!r) fail(ErrorKind::Parse, "missing parameter 'roots'");
      pc.roots = *r;
      break;
    }
  }
  pc.printed_example = bool_param(c, "printed");
  pc.other_branch = bool_param(c, "other_branch");
  pc.validate();
  return pc;
}

IntegrandSpec closure_spec(const Json& c) {
  IntegrandSpec is;
  is.kind = parse_kernel_kind(c.contains("kernel") ? text_of(c["kernel"], "kernel") : "H");
  is.p = int_list_param(c, "p");
  auto r = root_list_param(c, "roots");
  is.roots = r ? *r : std::vector<RootOfUnity>(is.p.size(), minus_one());
  is.x = root_param(c, "x", minus_one());
  is.rational = rational_param(c);
  is.relaxed_decay = bool_param(c, "relaxed");
  is.validate();
  if (int_param(c, "nmax", 200) < 1) fail(ErrorKind::Domain, "nmax must be positive");
  return is;
}

struct Thm6Case {
  Thm6 which;
  std::vector<int> p;
  std::vector<RootOfUnity> roots;
  RootOfUnity x;
  FactoredRational r;
  bool relaxed;
};

Thm6Case thm6_case(const Json& c) {
  Thm6Case t{parse_thm6(c["theorem"].get<std::string>()), int_list_param(c, "p"), {},
             root_param(c, "x"), rational_param(c), bool_param(c, "relaxed")};
  auto r = root_list_param(c, "roots");
  if (!r) fail(ErrorKind::Parse, "missing parameter 'roots'");
  t.roots = *r;
  thm6_integrand(t.which, t.p, t.roots, t.x, t.r, t.relaxed);
  return t;
}

Json params_of(const Json& c) {
  Json p = c;
  p.erase("theorem");
  return p;
}

}  // namespace

void validate_case(const Json& c) {
  std::string name = theorem_of(c);
  switch (kind_of(name)) {
    case CaseKind::Parity: parity_case(c); break;
    case CaseKind::Closure: closure_spec(c); break;
    case CaseKind::Thm6: thm6_case(c); break;
  }
}

CaseOutcome run_case(const Json& c, const PrecisionCtx& ctx) {
  std::string name = theorem_of(c);
  const int digits = ctx.digits;
  auto t0 = Clock::now();
  CaseOutcome out;
  Json rep;
  rep["theorem"] = name;
  rep["params"] = params_of(c);
  switch (kind_of(name)) {
    case CaseKind::Parity: {
      CheckReport r = check_parity(parity_case(c), ctx);
      rep["lhs"] = cval_json(r.lhs, digits);
      rep["rhs"] = cval_json(r.rhs, digits);
      rep["terms_used"] = r.terms_used;
      out.residual = r.residual;
      out.pass = r.pass;
      break;
    }
    case CaseKind::Closure: {
      IntegrandSpec is = closure_spec(c);
      const std::int64_t nmax = int_param(c, "nmax", 200);
      const double limit = double_param(c, "closure_tol", 1e-3);
      CVal a = closure_check(is, nmax, ctx);
      CVal b = closure_check(is, 2 * nmax, ctx);
      const double ra = abs_d(a.value), rb = abs_d(b.value);
      const double floor = std::pow(10.0, 5 - digits);
      rep["lhs"] = cval_json(a, digits);
      rep["rhs"] = cval_json(CVal(), digits);
      rep["doubled"] = cval_json(b, digits);
      rep["terms_used"] = 2 * nmax;
      out.residual = ra;
      out.pass = ra <= limit && (rb < ra || std::max(ra, rb) <= floor);
      break;
    }
    case CaseKind::Thm6: {
      Thm6Case t = thm6_case(c);
      CVal l = thm6_lhs(t.which, t.p, t.roots, t.x, t.r, ctx, t.relaxed);
      CVal r = thm6_rhs(t.which, t.p, t.roots, t.x, t.r, ctx, t.relaxed);
      rep["lhs"] = cval_json(l, digits);
      rep["rhs"] = cval_json(r, digits);
      rep["terms_used"] = accelerated_span(lcm_of_orders([&] {
                                             auto v = t.roots;
                                             v.push_back(t.x);
                                             return v;
                                           }()),
                                           ctx);
      out.residual = abs_d(l.value - r.value);
      out.pass = out.residual <= std::max(ctx.tol, 10 * (l.err + r.err));
      break;
    }
  }
  rep["residual"] = double_str(out.residual);
  rep["pass"] = out.pass;
  rep["seconds"] = since(t0);
  out.report = std::move(rep);
  return out;
}

std::vector<Json> expand_descriptor(const Json& d) {
  if (!d.is_object()) fail(ErrorKind::Parse, "a case must be a JSON object");
  if (!d.contains("grid")) return {d};
  const Json& grid = d["grid"];
  if (!grid.is_object() || grid.empty()) fail(ErrorKind::Parse, "grid must be a nonempty object");
  Json base = d;
  base.erase("grid");
  std::vector<std::pair<std::string, std::vector<Json>>> axes;
  for (const auto& [key, v] : grid.items()) {
    std::vector<Json> values;
    if (v.is_object() && v.contains("max_order")) {
      if (!v["max_order"].is_number_integer()) fail(ErrorKind::Parse, "max_order must be an integer");
      for (const auto& r : roots_up_to_order(v["max_order"].get<int>())) values.push_back(r.str());
    } else if (v.is_array() && !v.empty()) {
      values.assign(v.begin(), v.end());
    } else {
      fail(ErrorKind::Parse, "grid axis '" + key + "' must be a nonempty list or {\"max_order\":N}");
    }
    axes.emplace_back(key, std::move(values));
  }
  std::vector<Json> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    Json c = base;
    for (std::size_t i = 0; i < axes.size(); ++i) c[axes[i].first] = axes[i].second[idx[i]];
    try {
      validate_case(c);
      out.push_back(std::move(c));
    } catch (const Error& e) {
      // Grid points outside the admissible region are dropped; malformed ones are not.
      if (e.kind() == ErrorKind::Parse) throw;
    }
    std::size_t i = 0;
    while (i < axes.size() && ++idx[i] == axes[i].second.size()) idx[i++] = 0;
    if (i == axes.size()) break;
  }
  return out;
}

namespace {

struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_invalid_kind(ErrorKind k) { return k != ErrorKind::Accuracy; }

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Invalid("cannot write " + path);
  f << j.dump(2) << "\n";
}

void write_csv(const std::vector<CaseOutcome>& results, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Invalid("cannot write " + path);
  f << "index,theorem,params,residual,pass\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Json& r = results[i].report;
    std::string params = r["params"].dump();
    std::string quoted = "\"";
    for (char ch : params) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    quoted += "\"";
    f << i << "," << r["theorem"].get<std::string>() << "," << quoted << ","
      << r["residual"].get<std::string>() << "," << (results[i].pass ? "true" : "false") << "\n";
  }
}

PrecisionCtx make_ctx(int digits, double tol, std::int64_t max_terms) {
  PrecisionCtx ctx;
  ctx.digits = digits;
  ctx.tol = tol;
  ctx.max_terms = max_terms;
  ctx.validate();
  return ctx;
}

int default_jobs() {
  unsigned h = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(h, 1u, 8u));
}

std::vector<CaseOutcome> run_all(const std::vector<Json>& cases, const PrecisionCtx& ctx, int jobs) {
  std::vector<CaseOutcome> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto t0 = Clock::now();
      try {
        results[i] = run_case(cases[i], ctx);
      } catch (const Error& e) {
        Json rep;
        rep["theorem"] = cases[i]["theorem"];
        rep["params"] = params_of(cases[i]);
        rep["error"] = std::string(error_kind_name(e.kind())) + ": " + e.what();
        rep["residual"] = double_str(INFINITY);
        rep["pass"] = false;
        rep["seconds"] = since(t0);
        results[i] = CaseOutcome{rep, false, INFINITY};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

Json kernel_command(const std::string& fn, int p, const RootOfUnity& x, const std::string& s_text,
                    const std::string& expand, std::int64_t n, int trunc, const PrecisionCtx& ctx) {
  use_precision(ctx);
  const int digits = ctx.digits;
  Json j;
  j["fn"] = fn;
  j["p"] = p;
  j["x"] = x.str();
  if (!expand.empty()) {
    KernelFn which;
    if (fn == "phi") which = KernelFn::PhiP;
    else if (fn == "phi_half") which = KernelFn::PhiHalfP;
    else if (fn == "Phi") which = KernelFn::Phi;
    else fail(ErrorKind::Parse, "expansions exist for phi, phi_half and Phi");
    ExpansionPoint pt;
    if (expand == "neg_int") pt = ExpansionPoint::neg_int(n);
    else if (expand == "pos_int") pt = ExpansionPoint::pos_int(n);
    else if (expand == "int") pt = ExpansionPoint::integer(n);
    else if (expand == "neg_half") pt = ExpansionPoint::neg_half(n);
    else if (expand == "pos_half") pt = ExpansionPoint::pos_half();
    else fail(ErrorKind::Parse, "unknown expansion point '" + expand + "'");
    LaurentSeries L = laurent(pt, which, p, x, trunc, ctx);
    j["center"] = complex_json(L.center, digits);
    Json pr = Json::array();
    for (const auto& [order, c] : L.principal) {
      Json e = cval_json(c, digits);
      e["order"] = order;
      pr.push_back(e);
    }
    j["principal"] = pr;
    Json ta = Json::array();
    for (const auto& c : L.taylor) ta.push_back(cval_json(c, digits));
    j["taylor"] = ta;
    return j;
  }
  CVal v;
  if (fn == "li") {
    v = li(p, x, ctx);
  } else if (fn == "ti") {
    v = ti(p, x, ctx);
  } else if (fn == "bracket") {
    v = phi_bracket(p, x, ctx);
  } else if (fn == "tbracket") {
    v = ti_bracket(p, x, ctx);
  } else {
    if (s_text.empty()) fail(ErrorKind::Parse, "--s is required for " + fn);
    Complex s = to_complex(GaussianRational::parse(s_text));
    j["s"] = s_text;
    if (fn == "phi") v = phi_deriv(p, s, x, ctx);
    else if (fn == "phi_half") v = phi_deriv(p, s + Complex(Real(1) / 2), x, ctx);
    else if (fn == "Phi") v = Phi(s, x, ctx);
    else fail(ErrorKind::Parse, "unknown kernel function '" + fn + "'");
  }
  j["value"] = cval_json(v, digits);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic Euler sums, parity identities and residue checks", "cyclo"};
  app.require_subcommand(1);
  int digits = 40;
  double tol = 1e-25;
  std::int64_t max_terms = 200000;
  int jobs = 0;
  std::string out_path, csv_path;
  auto* o_digits = app.add_option("--digits", digits, "Decimal digits of the result");
  auto* o_tol = app.add_option("--tol", tol, "Residual tolerance");
  auto* o_terms = app.add_option("--max-terms", max_terms, "Term budget for literal summation");
  auto* o_jobs = app.add_option("--jobs", jobs, "Parallel suite cases");
  auto* o_out = app.add_option("--out", out_path, "Write the JSON report here");
  auto* o_csv = app.add_option("--csv", csv_path, "Write a CSV summary here");

  auto* eval = app.add_subcommand("eval", "Evaluate a sum");
  eval->fallthrough();
  std::string kind, exps, roots, x_text = "1";
  int q = 2;
  eval->add_option("--kind", kind, "S, T, R, Stilde, CMZV, CMtV, CMSV, CMTV, CMRV")->required();
  eval->add_option("--exps", exps, "Comma-separated exponents");
  eval->add_option("--roots", roots, "Comma-separated roots k/N");
  eval->add_option("--q", q, "Outer exponent (Euler sums)");
  eval->add_option("--x", x_text, "Outer root (Euler sums)");

  auto* check = app.add_subcommand("check", "Check one identity");
  check->fallthrough();
  std::map<std::string, std::string> cv;
  for (const char* key : {"theorem", "p", "q", "p1", "p2", "x", "y", "x1", "x2", "exps", "roots",
                          "kernel", "rational", "nmax", "closure-tol"})
    check->add_option(std::string("--") + key, cv[key]);
  bool printed = false, other_branch = false, relaxed = false;
  check->add_flag("--printed", printed, "Use the worked example's expanded right side");
  check->add_flag("--other-branch", other_branch, "Other square-root branch in splittings");
  check->add_flag("--relaxed", relaxed, "Accept o(1/s) rational parts");

  auto* suite = app.add_subcommand("suite", "Run a suite configuration");
  suite->fallthrough();
  std::string config_path;
  suite->add_option("config", config_path, "Suite JSON")->required();

  auto* kernel = app.add_subcommand("kernel", "Evaluate or expand a kernel function");
  kernel->fallthrough();
  std::string fn = "phi", s_text, expand;
  int kp = 1, trunc = 8;
  std::int64_t kn = 0;
  std::string kx = "1";
  kernel->add_option("--fn", fn, "phi, phi_half, Phi, li, ti, bracket, tbracket");
  kernel->add_option("--p", kp, "Derivative order, or the bracket index");
  kernel->add_option("--x", kx, "Root k/N");
  kernel->add_option("--s", s_text, "Point a/b+c/di");
  kernel->add_option("--expand", expand, "neg_int, pos_int, int, neg_half, pos_half");
  kernel->add_option("--n", kn, "Expansion point parameter");
  kernel->add_option("--trunc", trunc, "Taylor terms");

  std::vector<std::string> argv_store;
  argv_store.push_back("cyclo");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      PrecisionCtx ctx = make_ctx(digits, tol, max_terms);
      SumSpec spec;
      spec.kind = parse_sum_kind(kind);
      spec.exps = parse_int_list(exps);
      spec.roots = parse_root_list(roots);
      spec.q = q;
      spec.x = RootOfUnity::parse(x_text);
      spec.validate();
      auto t0 = Clock::now();
      SeriesValue v = evaluate_sum(spec, ctx);
      Json j;
      j["spec"] = spec.str();
      j["value"] = complex_json(v.value.value, ctx.digits);
      j["err"] = double_str(v.value.err);
      j["certified"] = v.value.certified;
      j["terms_used"] = v.terms;
      j["seconds"] = since(t0);
      emit(j, out_path, out);
      return 0;
    }
    if (*check) {
      PrecisionCtx ctx = make_ctx(digits, tol, max_terms);
      Json c;
      for (const auto& [key, value] : cv) {
        if (value.empty()) continue;
        std::string k = key == "closure-tol" ? "closure_tol" : key;
        if (k == "nmax") c[k] = int_param(Json{{"v", value}}, "v");
        else if (k == "closure_tol") c[k] = std::stod(value);
        else c[k] = value;
      }
      if (printed) c["printed"] = true;
      if (other_branch) c["other_branch"] = true;
      if (relaxed) c["relaxed"] = true;
      validate_case(c);
      CaseOutcome r = run_case(c, ctx);
      emit(r.report, out_path, out);
      if (!csv_path.empty()) write_csv({r}, csv_path);
      return r.pass ? 0 : 1;
    }
    if (*suite) {
      std::ifstream f(config_path);
      if (!f) throw Invalid("cannot read " + config_path);
      Json cfg = Json::parse(f, nullptr, false);
      if (cfg.is_discarded() || !cfg.is_object()) throw Invalid(config_path + " is not a JSON object");
      auto setting = [&](const char* key, auto& var, CLI::Option* opt) {
        using T = std::decay_t<decltype(var)>;
        if (opt->count() == 0 && cfg.contains(key)) {
          try {
            var = cfg[key].get<T>();
          } catch (const std::exception&) {
            throw Invalid(std::string("bad setting '") + key + "'");
          }
        }
      };
      setting("digits", digits, o_digits);
      setting("tol", tol, o_tol);
      setting("max_terms", max_terms, o_terms);
      setting("jobs", jobs, o_jobs);
      setting("out", out_path, o_out);
      setting("csv", csv_path, o_csv);
      PrecisionCtx ctx = make_ctx(digits, tol, max_terms);
      if (!cfg.contains("cases") || !cfg["cases"].is_array()) throw Invalid("suite needs a \"cases\" array");
      std::vector<Json> cases;
      std::size_t index = 0;
      for (const auto& d : cfg["cases"]) {
        try {
          auto expanded = expand_descriptor(d);
          if (!d.contains("grid")) validate_case(d);
          cases.insert(cases.end(), expanded.begin(), expanded.end());
        } catch (const Error& e) {
          throw Invalid("case " + std::to_string(index) + ": " + e.what());
        }
        ++index;
      }
      if (cases.empty()) throw Invalid("suite has no cases");
      auto t0 = Clock::now();
      auto results = run_all(cases, ctx, jobs > 0 ? jobs : default_jobs());
      Json rep;
      rep["settings"] = {{"digits", ctx.digits}, {"tol", double_str(ctx.tol)}, {"max_terms", ctx.max_terms}};
      Json list = Json::array();
      std::size_t passed = 0;
      double worst = 0;
      for (const auto& r : results) {
        list.push_back(r.report);
        passed += r.pass;
        worst = std::max(worst, r.residual);
      }
      rep["cases"] = list;
      rep["summary"] = {{"total", results.size()},
                        {"passed", passed},
                        {"failed", results.size() - passed},
                        {"max_residual", double_str(worst)},
                        {"wall_seconds", since(t0)}};
      emit(rep, out_path, out);
      if (!csv_path.empty()) write_csv(results, csv_path);
      return passed == results.size() ? 0 : 1;
    }
    if (*kernel) {
      PrecisionCtx ctx = make_ctx(digits, tol, max_terms);
      emit(kernel_command(fn, kp, RootOfUnity::parse(kx), s_text, expand, kn, trunc, ctx), out_path, out);
      return 0;
    }
  } catch (const Invalid& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return is_invalid_kind(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cyclo
