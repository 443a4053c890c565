// One line per acceptance criterion; exit status 0 only if all pass.
// Usage: acceptance [criterion numbers...]

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cyclo/cli.hpp"
#include "support.hpp"

using namespace cyclo;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<CaseOutcome> run_parallel(const std::vector<Json>& cases, const PrecisionCtx& ctx) {
  std::vector<CaseOutcome> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        out[i] = run_case(cases[i], ctx);
      } catch (const Error& e) {
        out[i].report = {{"case", cases[i]}, {"error", e.what()}};
        out[i].pass = false;
        out[i].residual = INFINITY;
      }
    }
  };
  unsigned jobs = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

// Fails on the first outcome that breaks the rule; summarizes the rest.
Verdict summarize(const std::vector<Json>& cases, const std::vector<CaseOutcome>& outs,
                  const std::function<bool(const CaseOutcome&)>& ok) {
  Verdict v;
  double worst = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    worst = std::max(worst, outs[i].residual);
    if (!ok(outs[i])) {
      if (bad++ == 0) v.detail = "first failure " + cases[i].dump() + "; ";
      v.pass = false;
    }
  }
  v.detail += std::to_string(outs.size() - bad) + "/" + std::to_string(outs.size()) +
              " cases, max residual " + sci(worst);
  return v;
}

std::vector<Json> expand_all(const Json& descriptors) {
  std::vector<Json> cases;
  for (const auto& d : descriptors) {
    auto e = expand_descriptor(d);
    cases.insert(cases.end(), e.begin(), e.end());
  }
  return cases;
}

PrecisionCtx base_ctx(double tol) {
  PrecisionCtx ctx;
  ctx.digits = 40;
  ctx.tol = tol;
  return ctx;
}

// 1. Worked examples over roots of order <= 4.
Verdict criterion1() {
  std::ifstream f(std::string(CYCLO_SUITES_DIR) + "/paper_examples.json");
  Json cfg = Json::parse(f);
  auto cases = expand_all(cfg["cases"]);
  auto ctx = base_ctx(1e-20);
  auto t0 = Clock::now();
  auto outs = run_parallel(cases, ctx);
  double secs = seconds_since(t0);
  std::set<std::string> shapes;
  for (const auto& c : cases) {
    std::ostringstream s;
    s << c["theorem"].get<std::string>();
    for (const char* k : {"p", "q", "p1", "p2"})
      if (c.contains(k)) s << "," << c[k];
    shapes.insert(s.str());
  }
  Verdict v = summarize(cases, outs, [](const CaseOutcome& o) { return o.pass && o.residual <= 1e-20; });
  if (shapes.size() != 8) v.pass = false;
  if (secs >= 600) v.pass = false;
  v.detail += ", " + std::to_string(shapes.size()) + " example shapes, " + sci(secs) + " s";
  return v;
}

// 2. T31 and T41 on (p,q) in {1,2,3}^2 with every admissible root pair of order <= 6.
Verdict criterion2() {
  Json grid = {{"p", {1, 2, 3}}, {"q", {1, 2, 3}}, {"x", {{"max_order", 6}}}, {"y", {{"max_order", 6}}}};
  Json ds = Json::array({{{"theorem", "T31"}, {"grid", grid}}, {{"theorem", "T41"}, {"grid", grid}}});
  auto cases = expand_all(ds);
  auto ctx = base_ctx(1e-20);
  auto outs = run_parallel(cases, ctx);
  std::size_t q1 = 0, x1 = 0;
  for (const auto& c : cases) {
    q1 += c["q"] == 1;
    x1 += c["x"] == "0/1";
  }
  Verdict v = summarize(cases, outs, [](const CaseOutcome& o) { return o.pass; });
  v.detail += ", " + std::to_string(q1) + " with q=1, " + std::to_string(x1) + " with x=1";
  if (q1 == 0 || x1 == 0) v.pass = false;
  return v;
}

// 3. Twenty random admissible T32/T42 instances.
Verdict criterion3() {
  std::mt19937 rng(2024);
  std::vector<Json> cases;
  while (cases.size() < 20) {
    auto root_text = [&] { return random_root(rng, 4).str(); };
    Json c = {{"theorem", cases.size() % 2 ? "T42" : "T32"},
              {"p1", 1 + static_cast<int>(rng() % 2)},
              {"p2", 1 + static_cast<int>(rng() % 2)},
              {"q", 1 + static_cast<int>(rng() % 2)},
              {"x", root_text()},
              {"x1", root_text()},
              {"x2", root_text()}};
    try {
      validate_case(c);
    } catch (const Error&) {
      continue;
    }
    cases.push_back(c);
  }
  auto outs = run_parallel(cases, base_ctx(1e-15));
  return summarize(cases, outs, [](const CaseOutcome& o) { return o.residual <= 1e-15; });
}

// 4. Laurent expansions: order-8 truncation at d = 0.1, and d/2 must gain 2^7.
Verdict criterion4() {
  auto ctx = base_ctx(1e-25);
  use_precision(ctx);
  std::mt19937 rng(4);
  struct Case {
    ExpansionPoint pt;
    KernelFn fn;
    int p;
    RootOfUnity x;
  };
  auto pick_root = [&](int p) {
    for (;;) {
      auto x = random_root(rng, 6);
      if (!(p == 1 && x.is_one())) return x;
    }
  };
  auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  std::vector<std::pair<std::string, std::function<Case(int)>>> lemmas = {
      {"2.2", [&](int i) {
         int p = rnd(1, 3);
         auto pt = i % 2 ? ExpansionPoint::neg_int(rnd(0, 4)) : ExpansionPoint::pos_int(rnd(1, 4));
         return Case{pt, KernelFn::PhiP, p, pick_root(p)};
       }},
      {"2.3", [&](int) { return Case{ExpansionPoint::integer(rnd(-4, 4)), KernelFn::Phi, 1, random_root(rng, 6)}; }},
      {"2.4", [&](int i) {
         int p = rnd(1, 3);
         auto pt = i % 2 ? ExpansionPoint::neg_int(rnd(0, 4)) : ExpansionPoint::pos_int(rnd(1, 4));
         return Case{pt, KernelFn::PhiHalfP, p, pick_root(p)};
       }},
      {"2.5", [&](int i) {
         auto pt = i % 3 == 0 ? ExpansionPoint::pos_half() : ExpansionPoint::neg_half(rnd(0, 4));
         return Case{pt, KernelFn::Phi, 1, random_root(rng, 6)};
       }},
      {"2.6", [&](int) {
         int p = rnd(1, 3);
         return Case{ExpansionPoint::pos_half(), KernelFn::PhiP, p, pick_root(p)};
       }},
  };
  auto direct = [&](const Case& c, const Complex& s) {
    switch (c.fn) {
      case KernelFn::PhiP: return phi_deriv(c.p, s, c.x, ctx).value;
      case KernelFn::PhiHalfP: return phi_deriv(c.p, s + Complex(Real(1) / 2), c.x, ctx).value;
      case KernelFn::Phi: return Phi(s, c.x, ctx).value;
    }
    return Complex();
  };
  Verdict v;
  double worst_ratio = INFINITY, worst_err = 0;
  int total = 0;
  std::uniform_real_distribution<double> angle(0, 6.283185307179586);
  for (auto& [name, make] : lemmas) {
    for (int i = 0; i < 10; ++i) {
      Case c = make(i);
      auto L = laurent(c.pt, c.fn, c.p, c.x, 8, ctx);
      double a = angle(rng);
      Complex dir(Real(std::cos(a)), Real(std::sin(a)));
      Complex s1 = L.center + Complex(Real("0.1")) * dir;
      Complex s2 = L.center + Complex(Real("0.05")) * dir;
      double e1 = dist(L.evaluate(s1), direct(c, s1));
      double e2 = dist(L.evaluate(s2), direct(c, s2));
      double ratio = e1 / e2;
      // The truncation error must be the omitted tail, estimated from a longer expansion.
      auto longer = laurent(c.pt, c.fn, c.p, c.x, 12, ctx);
      double tail = 0;
      for (int k = 8; k < 12; ++k) tail += abs_d(longer.taylor[k].value) * std::pow(0.1, k);
      ++total;
      worst_ratio = std::min(worst_ratio, ratio);
      worst_err = std::max(worst_err, e1 / tail);
      if (!(ratio >= 128.0) || !(e1 <= 2 * tail + 1e-35)) {
        if (v.pass) v.detail = "first failure lemma " + name + " ratio " + sci(ratio) + "; ";
        v.pass = false;
      }
    }
  }
  v.detail += std::to_string(total) + " expansions, min error ratio " + sci(worst_ratio) +
              ", max error/tail estimate at d=0.1 " + sci(worst_err);
  return v;
}

// 5. phi recurrence and Phi antisymmetry at 100 points each; Phi(s;1) = pi cot at 50.
Verdict criterion5() {
  auto ctx = base_ctx(1e-25);
  use_precision(ctx);
  std::mt19937 rng(5);
  double rec = 0, anti = 0, cot_err = 0;
  for (int t = 0; t < 100; ++t) {
    Complex s = random_point(rng, -5, 5);
    RootOfUnity x;
    do x = random_root(rng, 6);
    while (x.is_one());
    Complex lhs = phi_deriv(1, s, x, ctx).value;
    Complex rhs = inv(s) + root_embed(x, ctx) * phi_deriv(1, s + Complex(1), x, ctx).value;
    rec = std::max(rec, dist(lhs, rhs) / std::max(1.0, abs_d(lhs)));
    Complex t1 = random_point(rng, -5, 5);
    auto y = random_root(rng, 6);
    Complex a = Phi(t1, y, ctx).value;
    anti = std::max(anti, abs_d(a + Phi(-t1, y.inverse(), ctx).value) / std::max(1.0, abs_d(a)));
  }
  for (int t = 0; t < 50; ++t) {
    Complex s = random_point(rng, -5, 5);
    Complex want = pi() * cot(pi() * s);
    cot_err = std::max(cot_err, dist(Phi(s, root(0, 1), ctx), want) / std::max(1.0, abs_d(want)));
  }
  Verdict v;
  v.pass = rec <= 1e-35 && anti <= 1e-35 && cot_err <= 1e-35;
  v.detail = "recurrence " + sci(rec) + ", antisymmetry " + sci(anti) + ", pi cot " + sci(cot_err) +
             " (relative to max(1,|value|))";
  return v;
}

// 6. Closure of the residue sum for H and G kernels with 1, 2 and 3 factors.
Verdict criterion6() {
  auto ctx = base_ctx(1e-25);
  struct Item {
    KernelKind kind;
    std::vector<int> p;
    std::vector<RootOfUnity> roots;
    const char* r;
  };
  std::vector<Item> items = {
      {KernelKind::H, {1}, {minus_one()}, "poles=[(1/2,2)]"},
      {KernelKind::H, {2, 1}, {root(1, 3), minus_one()}, "poles=[(1/3+1/4i,2)]"},
      {KernelKind::H, {1, 1, 1}, {minus_one(), root(1, 4), root(1, 3)}, "poles=[(1/2,2)]"},
      {KernelKind::G, {1}, {minus_one()}, "poles=[(0,2)]"},
      {KernelKind::G, {1, 2}, {root(1, 4), root(0, 1)}, "zeros=[(i,1)];poles=[(-1/2,2),(1/5,1)]"},
      {KernelKind::G, {1, 2, 1}, {root(1, 3), minus_one(), root(3, 4)}, "poles=[(1/3+1/2i,1),(1/3-1/2i,1)]"},
  };
  Verdict v;
  for (auto& it : items) {
    IntegrandSpec is;
    is.kind = it.kind;
    is.p = it.p;
    is.roots = it.roots;
    is.x = root(1, 6);
    is.rational = FactoredRational::parse(it.r);
    double a = abs_d(closure_check(is, 200, ctx).value);
    double b = abs_d(closure_check(is, 400, ctx).value);
    bool ok = a <= 1e-3 && b < a;
    v.pass = v.pass && ok;
    v.detail += std::string(kernel_kind_name(it.kind)) + "/" + std::to_string(it.p.size()) + ": " + sci(a) +
                " -> " + sci(b) + (ok ? "" : " (bad)") + "; ";
  }
  return v;
}

GaussianRational random_off_lattice(std::mt19937& rng) {
  // Real part k/5 or k/7, nonzero imaginary part: never an integer or half-integer.
  int den = rng() % 2 ? 5 : 7;
  int k = static_cast<int>(rng() % 11) - 5;
  int im = static_cast<int>(rng() % 6) + 1;
  return {Rational(k, den), Rational(rng() % 2 ? im : -im, 3)};
}

// 7. General residue formulas.
Verdict criterion7() {
  auto ctx = base_ctx(1e-25);
  std::mt19937 rng(7);
  Verdict v;
  double zero_worst = 0;
  for (int q : {2, 3, 4}) {
    for (auto x : {root(1, 4), minus_one(), root(1, 3)}) {
      for (auto x1 : {minus_one(), root(1, 6)}) {
        FactoredRational r;
        r.poles = {{GaussianRational{Rational(0), Rational(0)}, q}};
        zero_worst = std::max(zero_worst, abs_d(thm6_rhs(Thm6::T61, {q - 1}, {x1}, x, r, ctx).value));
      }
    }
  }
  if (zero_worst > 1e-12) v.pass = false;
  v.detail = "T61 with 1/s^q: " + sci(zero_worst) + "; ";
  for (Thm6 which : {Thm6::T61, Thm6::T62, Thm6::T63a, Thm6::T63b}) {
    double worst = 0;
    int made = 0;
    while (made < 5) {
      std::size_t depth = which == Thm6::T61 ? 1 : 2;
      std::vector<int> p;
      std::vector<RootOfUnity> roots;
      for (std::size_t i = 0; i < depth; ++i) {
        p.push_back(1 + static_cast<int>(rng() % 2));
        roots.push_back(random_root(rng, 4));
      }
      FactoredRational r;
      r.scale = {Rational(static_cast<int>(rng() % 5) + 1, 3), Rational(static_cast<int>(rng() % 3) - 1, 2)};
      r.poles.push_back({GaussianRational{Rational(1, 4), Rational(0)}, 2});
      int dist_order = static_cast<int>(rng() % 3);
      if (dist_order > 0) {
        Rational c = which == Thm6::T63a ? Rational(-1, 2) : Rational(0);
        r.poles.push_back({GaussianRational{c, Rational(0)}, dist_order});
      }
      int extra = static_cast<int>(rng() % 2);
      for (int e = 0; e < extra; ++e) r.poles.push_back({random_off_lattice(rng), 1});
      int zeros = static_cast<int>(rng() % (dist_order + extra + 1));
      for (int z = 0; z < zeros; ++z) r.zeros.push_back({random_off_lattice(rng), 1});
      RootOfUnity x = random_root(rng, 4);
      CVal lhs, rhs;
      try {
        lhs = thm6_lhs(which, p, roots, x, r, ctx);
        rhs = thm6_rhs(which, p, roots, x, r, ctx);
      } catch (const Error&) {
        continue;  // inadmissible draw
      }
      ++made;
      double d = dist(lhs, rhs);
      worst = std::max(worst, d);
      if (!(d <= 1e-10)) v.pass = false;
    }
    v.detail += std::string(thm6_name(which)) + " " + sci(worst) + "; ";
  }
  return v;
}

// 8. Depth-2 and depth-3 reductions against literal nested summation.
Verdict criterion8() {
  auto ctx = base_ctx(1e-25);
  std::mt19937 rng(8);
  Verdict v;
  auto draw = [&](int depth, std::vector<int>& k, std::vector<RootOfUnity>& x) {
    for (;;) {
      k.clear();
      x.clear();
      for (int i = 0; i < depth; ++i) {
        k.push_back(1 + static_cast<int>(rng() % 2));
        x.push_back(random_root(rng, 4));
      }
      if (k.back() == 1 && x.back().is_one()) continue;
      // Alternating log tails defeat a 1e5-term Aitken estimate; keep inner letters log-free.
      bool log_inner = false;
      for (int i = 0; i + 1 < depth; ++i) log_inner = log_inner || (k[i] == 1 && x[i].is_one());
      if (!log_inner) return;
    }
  };
  struct Path {
    const char* name;
    SumKind kind;
    int depth;
  };
  for (Path path : {Path{"CMSV2", SumKind::CMSV, 2}, Path{"CMSV3", SumKind::CMSV, 3},
                    Path{"CMTV2", SumKind::CMTV, 2}, Path{"CMTV3", SumKind::CMTV, 3}}) {
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      std::vector<int> k;
      std::vector<RootOfUnity> x;
      CVal via;
      for (;;) {
        draw(path.depth, k, x);
        try {
          if (path.kind == SumKind::CMSV)
            via = path.depth == 2 ? msv_from_R(k[0], k[1], x[0], x[1], ctx)
                                  : msv3_from_R(k[0], k[1], k[2], x[0], x[1], x[2], ctx);
          else
            via = path.depth == 2 ? mtv_from_Stilde(k[0], k[1], x[0], x[1], ctx)
                                  : mtv3_from_Stilde(k[0], k[1], k[2], x[0], x[1], x[2], ctx);
          break;
        } catch (const Error&) {
          continue;
        }
      }
      auto oracle = nested_oracle(multiple_spec(path.kind, k, x), 100000, ctx);
      double d = dist(via, oracle.value);
      worst = std::max(worst, d);
      if (!(d <= 1e-8)) v.pass = false;
    }
    v.detail += std::string(path.name) + " " + sci(worst) + "; ";
  }
  return v;
}

// 9. Square-root splitting identities at depth 2, roots of order <= 2, both branches.
Verdict criterion9() {
  auto ctx = base_ctx(1e-25);
  Verdict v;
  double worst = 0;
  int count = 0;
  for (bool other : {false, true})
    for (int k1 = 1; k1 <= 2; ++k1)
      for (int k2 = 1; k2 <= 2; ++k2)
        for (auto x1 : roots_up_to_order(2))
          for (auto x2 : roots_up_to_order(2)) {
            if (k2 == 1 && x2.is_one()) continue;
            std::vector<RootOfUnity> xs = {x1, x2};
            for (auto fn : {&split_msv, &split_mrv}) {
              auto [l, r] = fn({k1, k2}, xs, other, ctx, -1);
              double d = dist(l, r);
              worst = std::max(worst, d);
              ++count;
              if (!(d <= 1e-10)) v.pass = false;
            }
          }
  v.detail = std::to_string(count) + " identities, max difference " + sci(worst);
  return v;
}

// 10. Known constants to 10^{2-digits}.
Verdict criterion10() {
  auto ctx = base_ctx(1e-25);
  use_precision(ctx);
  Real p = pi();
  double tol = std::pow(10.0, 2 - ctx.digits);
  double e[4] = {dist(li(2, root(0, 1), ctx), Complex(p * p / 6)), dist(li(2, minus_one(), ctx), Complex(-p * p / 12)),
                 dist(ti(2, root(0, 1), ctx), Complex(p * p / 2)), dist(even_zeta(2, ctx), Complex(pow(p, 4) / 90))};
  Verdict v;
  v.detail = "Li2(1) " + sci(e[0]) + ", Li2(-1) " + sci(e[1]) + ", ti2(1) " + sci(e[2]) + ", zeta(4) " + sci(e[3]);
  for (double x : e) v.pass = v.pass && x <= tol;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > 10) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[n - 1]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all = all && v.pass;
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << "  ["
              << sci(seconds_since(t0)) << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
