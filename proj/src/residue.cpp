#include "cyclo/residue.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

namespace cyclo {

namespace {

double eps_of(const PrecisionCtx& ctx) { return std::pow(10.0, -ctx.working_digits() + 3); }

CVal rounded(const Complex& v, const PrecisionCtx& ctx) {
  return CVal(v, abs_d(v) * eps_of(ctx), true);
}

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

// Coefficients of c * prod (s0 + h - z)^m / prod (s0 + h - a)^m in h, skipping
// the pole factor at `skip` when given.
std::vector<Complex> factored_series(const FactoredRational& r, const Complex& s0, int count,
                                     const GaussianRational* skip) {
  std::vector<Complex> acc(count);
  acc[0] = to_complex(r.scale);
  auto multiply = [&](const std::vector<Complex>& f) {
    std::vector<Complex> out(count);
    for (int i = 0; i < count; ++i) {
      if (is_zero(acc[i])) continue;
      for (int j = 0; i + j < count && j < static_cast<int>(f.size()); ++j) out[i + j] += acc[i] * f[j];
    }
    acc = std::move(out);
  };
  for (const auto& z : r.zeros) {
    Complex a = s0 - to_complex(z.point);
    std::vector<Complex> f;
    for (int k = 0; k <= z.mult && k < count; ++k)
      f.push_back(powi(a, z.mult - k) * Real(binomial(z.mult, k)));
    multiply(f);
  }
  for (const auto& p : r.poles) {
    if (skip && p.point == *skip) continue;
    Complex a = s0 - to_complex(p.point);
    if (is_zero(a)) fail(ErrorKind::Pole, "rational function has a pole at " + p.point.str());
    Complex ia = inv(a);
    Complex pw = powi(ia, p.mult);
    std::vector<Complex> f;
    for (int k = 0; k < count; ++k) {
      Real b = binomial(p.mult + k - 1, k);
      if (k % 2) b = -b;
      f.push_back(pw * b);
      pw *= ia;
    }
    multiply(f);
  }
  return acc;
}

std::vector<CVal> to_cvals(const std::vector<Complex>& v, const PrecisionCtx& ctx) {
  std::vector<CVal> out;
  for (const auto& c : v) out.push_back(rounded(c, ctx));
  return out;
}

GaussianRational half_integer(std::int64_t twice) {
  return {Rational(twice, 2), Rational(0)};
}

// Twice the point when it is a real integer or half-integer.
std::optional<std::int64_t> twice_if_half_integer(const GaussianRational& g) {
  if (g.im != 0) return std::nullopt;
  Rational t = g.re * 2;
  if (boost::multiprecision::denominator(t) != 1) return std::nullopt;
  Integer n = boost::multiprecision::numerator(t);
  if (abs(n) > Integer(1) << 60) fail(ErrorKind::Domain, "pole location too large");
  return n.convert_to<std::int64_t>();
}

bool allowed_overlap(KernelKind kind, std::int64_t twice) {
  if (twice == 0) return true;
  return kind == KernelKind::H ? twice == 1 : twice == -1;
}

void expect_list(std::string_view& rest, char c) {
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty() || rest.front() != c)
    fail(ErrorKind::Parse, std::string("expected '") + c + "' in rational function");
  rest.remove_prefix(1);
}

std::vector<RationalFactor> parse_factor_list(std::string_view text) {
  std::vector<RationalFactor> out;
  std::string_view rest = text;
  expect_list(rest, '[');
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (!rest.empty() && rest.front() == ']') return out;
  for (;;) {
    expect_list(rest, '(');
    auto close = rest.find(')');
    if (close == std::string_view::npos) fail(ErrorKind::Parse, "unterminated factor");
    std::string_view inner = rest.substr(0, close);
    auto comma = inner.rfind(',');
    RationalFactor f;
    if (comma == std::string_view::npos) {
      f.point = GaussianRational::parse(inner);
    } else {
      f.point = GaussianRational::parse(inner.substr(0, comma));
      std::string m(inner.substr(comma + 1));
      try {
        f.mult = std::stoi(m);
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad multiplicity '" + m + "'");
      }
    }
    out.push_back(f);
    rest.remove_prefix(close + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (!rest.empty() && rest.front() == ',') {
      rest.remove_prefix(1);
      continue;
    }
    expect_list(rest, ']');
    break;
  }
  return out;
}

std::string factor_list_str(const std::vector<RationalFactor>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += "(" + v[i].point.str() + "," + std::to_string(v[i].mult) + ")";
  }
  return s + "]";
}

}  // namespace

void FactoredRational::validate() const {
  std::vector<GaussianRational> seen;
  for (const auto* list : {&zeros, &poles}) {
    for (const auto& f : *list) {
      if (f.mult < 1) fail(ErrorKind::Domain, "multiplicities must be positive");
      if (std::find(seen.begin(), seen.end(), f.point) != seen.end())
        fail(ErrorKind::Domain, "zero and pole points must be distinct: " + f.point.str());
      seen.push_back(f.point);
    }
  }
}

int FactoredRational::decay() const {
  int d = 0;
  for (const auto& f : poles) d += f.mult;
  for (const auto& f : zeros) d -= f.mult;
  return d;
}

int FactoredRational::pole_order_at(const GaussianRational& c) const {
  for (const auto& f : poles)
    if (f.point == c) return f.mult;
  return 0;
}

std::string FactoredRational::str() const {
  return "scale=" + scale.str() + ";zeros=" + factor_list_str(zeros) +
         ";poles=" + factor_list_str(poles);
}

FactoredRational FactoredRational::parse(std::string_view text) {
  FactoredRational r;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) {
      auto eq = part.find('=');
      if (eq == std::string_view::npos) fail(ErrorKind::Parse, "expected key=value in rational function");
      std::string_view key = part.substr(0, eq);
      std::string_view value = part.substr(eq + 1);
      if (key == "scale") {
        r.scale = GaussianRational::parse(value);
      } else if (key == "zeros") {
        r.zeros = parse_factor_list(value);
      } else if (key == "poles") {
        r.poles = parse_factor_list(value);
      } else {
        fail(ErrorKind::Parse, "unknown rational function key '" + std::string(key) + "'");
      }
    }
    pos = end + 1;
  }
  r.validate();
  return r;
}

CVal rf_eval(const FactoredRational& r, const Complex& s, const PrecisionCtx& ctx) {
  use_precision(ctx);
  return rounded(factored_series(r, s, 1, nullptr)[0], ctx);
}

CVal rf_deriv(const FactoredRational& r, int k, const Complex& s, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (k < 0) fail(ErrorKind::Domain, "derivative order must be nonnegative");
  Complex c = factored_series(r, s, k + 1, nullptr)[k];
  Real f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return rounded(c * f, ctx);
}

std::vector<CVal> rf_taylor(const FactoredRational& r, const Complex& s, int count,
                            const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (count < 1) fail(ErrorKind::Domain, "count must be positive");
  return to_cvals(factored_series(r, s, count, nullptr), ctx);
}

std::vector<CVal> rf_shifted_taylor(const FactoredRational& r, const GaussianRational& center,
                                    int count, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (count < 1) fail(ErrorKind::Domain, "count must be positive");
  if (r.pole_order_at(center) == 0) fail(ErrorKind::Domain, center.str() + " is not a pole");
  return to_cvals(factored_series(r, to_complex(center), count, &center), ctx);
}

const char* kernel_kind_name(KernelKind k) { return k == KernelKind::H ? "H" : "G"; }

KernelKind parse_kernel_kind(std::string_view text) {
  if (text == "H" || text == "h") return KernelKind::H;
  if (text == "G" || text == "g") return KernelKind::G;
  fail(ErrorKind::Parse, "kernel must be H or G");
}

void IntegrandSpec::validate() const {
  if (p.empty()) fail(ErrorKind::Domain, "p-vector must be nonempty");
  if (p.size() != roots.size()) fail(ErrorKind::Domain, "p-vector and roots differ in length");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) fail(ErrorKind::Domain, "kernel exponents must be positive");
    if (p[i] == 1 && roots[i].is_one())
      fail(ErrorKind::Divergence, "(p,x)=(1,1) diverges in phi(s;x)");
  }
  rational.validate();
  const int need = relaxed_decay ? 1 : 2;
  if (rational.decay() < need)
    fail(ErrorKind::Domain, relaxed_decay ? "rational part must be o(1/s) at infinity"
                                          : "rational part must be O(1/s^2) at infinity");
  for (const auto& f : rational.poles) {
    auto t = twice_if_half_integer(f.point);
    if (t && !allowed_overlap(kind, *t))
      fail(ErrorKind::PoleCollision, "rational pole " + f.point.str() + " collides with the " +
                                         kernel_kind_name(kind) + " kernel lattice");
  }
}

std::string IntegrandSpec::str() const {
  std::ostringstream os;
  os << kernel_kind_name(kind) << "(p=[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "];roots=[";
  for (std::size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << roots[i].str();
  os << "];x=" << x.str() << ";r=" << rational.str() << ")";
  return os.str();
}

CVal integrand_value(const IntegrandSpec& ispec, const Complex& s, const PrecisionCtx& ctx) {
  use_precision(ctx);
  CVal v = Phi(s, ispec.x, ctx);
  Complex arg = ispec.kind == KernelKind::H ? s : s + Complex(Real(1) / 2);
  for (std::size_t i = 0; i < ispec.p.size(); ++i) v *= phi_deriv(ispec.p[i], arg, ispec.roots[i], ctx);
  return v * rf_eval(ispec.rational, s, ctx);
}

namespace {

Real nearest_other_singularity(const IntegrandSpec& ispec, const Complex& c) {
  Real best = -1;
  auto consider = [&](const Complex& z) {
    Real d = abs(z - c);
    if (d > Real(1e-30) && (best < 0 || d < best)) best = d;
  };
  Real fl = boost::multiprecision::floor(c.re);
  for (int j = -1; j <= 2; ++j) {
    Real k = fl + j;
    consider(Complex(k));
    Real h = k - Real(1) / 2;
    if (ispec.kind == KernelKind::G && h < 0) consider(Complex(h));
  }
  for (const auto& f : ispec.rational.poles) consider(to_complex(f.point));
  return best;
}

}  // namespace

CVal numeric_residue(const IntegrandSpec& ispec, const Complex& pole, int order_hint,
                     const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (order_hint < 1) fail(ErrorKind::Domain, "order_hint must be positive");
  Real radius = nearest_other_singularity(ispec, pole) / 2;
  AnalyticFn g = [&](const Complex& s) {
    return integrand_value(ispec, s, ctx).value * powi(s - pole, order_hint);
  };
  auto c = cauchy_taylor(g, pole, radius, order_hint, ctx);
  return c[order_hint - 1];
}

namespace {

struct Laurent {
  int low = 0;  // exponent of the first coefficient
  std::vector<CVal> c;
};

Laurent dense(const LaurentSeries& L) {
  Laurent d;
  d.low = -L.pole_order();
  for (int e = d.low; e < 0; ++e) {
    auto it = L.principal.find(e);
    d.c.push_back(it == L.principal.end() ? CVal() : it->second);
  }
  for (const auto& t : L.taylor) d.c.push_back(t);
  return d;
}

Laurent product(const Laurent& a, const Laurent& b, int max_exp) {
  Laurent out;
  out.low = a.low + b.low;
  int len = max_exp - out.low + 1;
  if (len <= 0) return out;
  out.c.assign(len, CVal());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (static_cast<int>(i + j) < len) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

ExpansionPoint Phi_point(std::int64_t tc) {
  if (tc % 2 == 0) return ExpansionPoint::integer(tc / 2);
  if (tc == 1) return ExpansionPoint::pos_half();
  if (tc < 0) return ExpansionPoint::neg_half((-tc - 1) / 2);
  fail(ErrorKind::Domain, "no kernel expansion at this half-integer");
}

ExpansionPoint phi_point(std::int64_t tc) {
  if (tc % 2 == 0) return tc <= 0 ? ExpansionPoint::neg_int(-tc / 2) : ExpansionPoint::pos_int(tc / 2);
  return Phi_point(tc);
}

}  // namespace

CVal kernel_point_residue(const IntegrandSpec& ispec, std::int64_t tc, const PrecisionCtx& ctx) {
  use_precision(ctx);
  const bool half = tc % 2 != 0;
  const GaussianRational center = half_integer(tc);
  int a_Phi = half ? 0 : 1;
  std::vector<int> a_phi;
  for (int p : ispec.p) {
    bool pole = ispec.kind == KernelKind::H ? (!half && tc <= 0) : (half && tc < 0);
    a_phi.push_back(pole ? p : 0);
  }
  int m = ispec.rational.pole_order_at(center);
  int P = a_Phi + m;
  for (int a : a_phi) P += a;
  if (P == 0) return CVal();

  auto trunc_for = [&](int a) { return std::max(1, P - a); };
  Laurent acc = dense(laurent(Phi_point(tc), KernelFn::Phi, 0, ispec.x, trunc_for(a_Phi), ctx));
  const KernelFn fn = ispec.kind == KernelKind::H ? KernelFn::PhiP : KernelFn::PhiHalfP;
  for (std::size_t i = 0; i < ispec.p.size(); ++i) {
    auto L = laurent(phi_point(tc), fn, ispec.p[i], ispec.roots[i], trunc_for(a_phi[i]), ctx);
    acc = product(acc, dense(L), P);
  }
  Laurent rl;
  rl.low = -m;
  rl.c = m > 0 ? rf_shifted_taylor(ispec.rational, center, P, ctx)
               : rf_taylor(ispec.rational, to_complex(center), P, ctx);
  acc = product(acc, rl, P);
  int idx = -1 - acc.low;
  if (idx < 0 || idx >= static_cast<int>(acc.c.size())) return CVal();
  return acc.c[idx];
}

namespace {

CVal parallel_sum(const std::vector<std::function<CVal()>>& jobs) {
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<CVal> results(jobs.size());
  std::vector<std::future<void>> futs;
  for (unsigned w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < jobs.size(); i += workers) results[i] = jobs[i]();
    }));
  }
  for (auto& f : futs) f.get();
  CVal total;
  for (const auto& r : results) total += r;
  return total;
}

}  // namespace

CVal closure_check(const IntegrandSpec& ispec, std::int64_t n_max, const PrecisionCtx& ctx) {
  use_precision(ctx);
  ispec.validate();
  if (n_max < 1) fail(ErrorKind::Domain, "n_max must be positive");
  std::vector<std::int64_t> points;
  for (std::int64_t n = -n_max; n <= n_max; ++n) points.push_back(2 * n);
  if (ispec.kind == KernelKind::G) {
    for (std::int64_t n = 0; n < n_max; ++n) points.push_back(-2 * n - 1);
  } else if (ispec.rational.pole_order_at(half_integer(1)) > 0) {
    points.push_back(1);
  }
  std::vector<std::function<CVal()>> jobs;
  for (std::int64_t tc : points)
    jobs.push_back([&, tc] { return kernel_point_residue(ispec, tc, ctx); });
  for (const auto& f : ispec.rational.poles) {
    if (twice_if_half_integer(f.point)) continue;
    Complex z = to_complex(f.point);
    if (abs(z) > n_max) continue;
    jobs.push_back([&, z, m = f.mult] { return numeric_residue(ispec, z, m, ctx); });
  }
  return parallel_sum(jobs);
}

const char* thm6_name(Thm6 t) {
  switch (t) {
    case Thm6::T61: return "T61";
    case Thm6::T62: return "T62";
    case Thm6::T63a: return "T63a";
    case Thm6::T63b: return "T63b";
  }
  return "?";
}

Thm6 parse_thm6(std::string_view text) {
  for (Thm6 t : {Thm6::T61, Thm6::T62, Thm6::T63a, Thm6::T63b})
    if (text == thm6_name(t)) return t;
  fail(ErrorKind::Parse, "unknown general residue formula '" + std::string(text) + "'");
}

IntegrandSpec thm6_integrand(Thm6 which, const std::vector<int>& p,
                             const std::vector<RootOfUnity>& roots, const RootOfUnity& x,
                             const FactoredRational& r, bool relaxed) {
  const std::size_t want = which == Thm6::T61 ? 1 : 2;
  if (p.size() != want || roots.size() != want)
    fail(ErrorKind::Domain, std::string(thm6_name(which)) + " needs " + std::to_string(want) +
                                " kernel exponent(s) and root(s)");
  IntegrandSpec is;
  is.kind = which == Thm6::T61 || which == Thm6::T62 ? KernelKind::H : KernelKind::G;
  is.p = p;
  is.roots = roots;
  is.x = x;
  is.rational = r;
  is.relaxed_decay = relaxed;
  is.validate();
  // The other distinguished point of the G kernel must stay regular.
  if (which == Thm6::T63a && r.pole_order_at(half_integer(0)) > 0)
    fail(ErrorKind::PoleCollision, "T63a needs r regular at 0");
  if (which == Thm6::T63b && r.pole_order_at(half_integer(-1)) > 0)
    fail(ErrorKind::PoleCollision, "T63b needs r regular at -1/2");
  return is;
}

CVal thm6_lhs(Thm6 which, const std::vector<int>& p, const std::vector<RootOfUnity>& roots,
              const RootOfUnity& x, const FactoredRational& r, const PrecisionCtx& ctx,
              bool relaxed) {
  use_precision(ctx);
  IntegrandSpec is = thm6_integrand(which, p, roots, x, r, relaxed);
  const GaussianRational dist = half_integer(which == Thm6::T63a ? -1 : 0);
  CVal total;
  for (const auto& f : r.poles) {
    if (f.point == dist) continue;
    total -= numeric_residue(is, to_complex(f.point), f.mult, ctx);
  }
  return total;
}

namespace {

// Running sum_{j<=n} z^j/(j - shift)^k, advanced one index at a time.
class RunningSum {
 public:
  RunningSum(int k, const RootOfUnity& z, bool half, const PrecisionCtx& ctx)
      : k_(k), half_(half) {
    for (std::int64_t j = 0; j < z.order(); ++j) powers_.push_back(root_embed(z.pow(j), ctx));
  }
  const Complex& at(std::int64_t n) {
    if (n < upto_) fail(ErrorKind::Domain, "running sums only move forward");
    while (upto_ < n) {
      ++upto_;
      Real d = half_ ? Real(upto_) - Real(1) / 2 : Real(upto_);
      val_ += powers_[upto_ % powers_.size()] / boost::multiprecision::pow(d, k_);
    }
    return val_;
  }

 private:
  int k_;
  bool half_;
  std::vector<Complex> powers_;
  std::int64_t upto_ = 0;
  Complex val_;
};

class Thm6Engine {
 public:
  Thm6Engine(Thm6 which, const std::vector<int>& p, const std::vector<RootOfUnity>& roots,
             const RootOfUnity& x, const FactoredRational& r, const PrecisionCtx& ctx)
      : which_(which), p_(p), roots_(roots), x_(x), r_(r), ctx_(ctx) {
    X_ = x;
    for (const auto& z : roots) X_ = X_ * z;
    std::vector<RootOfUnity> all = roots;
    all.push_back(x);
    period_ = lcm_of_orders(all);
  }

  CVal rhs() {
    CVal total = block();
    total += head();
    SeriesValue s = accelerated_sum([this](std::int64_t n) { return term(n); }, 1, period_, ctx_);
    total += s.value;
    return total;
  }

 private:
  Thm6 which_;
  std::vector<int> p_;
  std::vector<RootOfUnity> roots_;
  RootOfUnity x_;
  FactoredRational r_;
  const PrecisionCtx& ctx_;
  RootOfUnity X_;
  std::int64_t period_ = 1;
  std::map<std::tuple<int, int, RootOfUnity>, CVal> memo_;
  std::map<std::tuple<int, bool, RootOfUnity>, RunningSum> running_;

  const CVal& cached(int kind, int k, const RootOfUnity& z) {
    auto key = std::make_tuple(kind, k, z);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    CVal v;
    switch (kind) {
      case 0: v = li(k, z, ctx_); break;
      case 1: v = ti(k, z, ctx_); break;
      case 2: v = phi_bracket(k, z, ctx_); break;
      default: v = ti_bracket(k, z, ctx_); break;
    }
    return memo_.emplace(key, v).first->second;
  }
  const CVal& Li(int k, const RootOfUnity& z) { return cached(0, k, z); }
  const CVal& Ti(int k, const RootOfUnity& z) { return cached(1, k, z); }
  const CVal& brL(int k) { return cached(2, k, x_); }
  const CVal& brT(int k) { return cached(3, k, x_); }

  Complex partial(std::int64_t n, int k, const RootOfUnity& z, bool half) {
    auto key = std::make_tuple(k, half, z);
    auto it = running_.find(key);
    if (it == running_.end()) it = running_.emplace(key, RunningSum(k, z, half, ctx_)).first;
    return it->second.at(n);
  }
  Complex zeta_n(std::int64_t n, int k, const RootOfUnity& z) { return partial(n, k, z, false); }
  Complex t_n(std::int64_t n, int k, const RootOfUnity& z) { return partial(n, k, z, true); }

  Complex Xpow(std::int64_t e) { return root_embed(X_.pow(e), ctx_); }
  static Real C(int a, int b) { return Real(binomial(a, b)); }

  // Coefficient of u^k in the regular part of phi_p(s;z) at s = -n (n >= 0), without z^n.
  Complex L_neg(std::int64_t n, int k, int p, const RootOfUnity& z) {
    Complex c = Li(k + p, z).value;
    if (k % 2) c = -c;
    if (n > 0) {
      Complex zs = zeta_n(n, k + p, z.inverse());
      c += p % 2 ? -zs : zs;
    }
    return c * C(k + p - 1, p - 1);
  }

  // T63b block at 0: coefficient of s^k of phi_p(s+1/2;z).
  Complex T_zero(int k, int p, const RootOfUnity& z) {
    Complex c = Ti(k + p, z).value * root_embed(z.inverse(), ctx_);
    if (k % 2) c = -c;
    return c * C(k + p - 1, p - 1);
  }

  std::vector<Complex> rtaylor(const Complex& s, int count) {
    std::vector<Complex> out;
    for (const auto& c : rf_taylor(r_, s, count, ctx_)) out.push_back(c.value);
    return out;
  }

  // Taylor data of (s - c)^m r(s) at the distinguished point c.
  std::vector<Complex> Rtaylor(const GaussianRational& c, int count) {
    std::vector<CVal> v = r_.pole_order_at(c) > 0 ? rf_shifted_taylor(r_, c, count, ctx_)
                                                  : rf_taylor(r_, to_complex(c), count, ctx_);
    std::vector<Complex> out;
    for (const auto& e : v) out.push_back(e.value);
    return out;
  }

  CVal block();
  CVal head();
  Complex term(std::int64_t n);
};

CVal Thm6Engine::block() {
  Complex b;
  if (which_ == Thm6::T61) {
    const int p = p_[0];
    const RootOfUnity& y = roots_[0];
    const int q = r_.pole_order_at(half_integer(0));
    auto R = Rtaylor(half_integer(0), p + q + 1);
    b = R[p + q];
    for (int k = 0; k <= q; ++k) b += L_neg(0, k, p, y) * R[q - k];
    for (int k = 0; k <= p + q - 1; ++k) b += brL(k).value * R[p + q - 1 - k];
    for (int k1 = 0; k1 <= q - 1; ++k1)
      for (int k2 = 0; k1 + k2 <= q - 1; ++k2)
        b += brL(k1).value * L_neg(0, k2, p, y) * R[q - 1 - k1 - k2];
    return CVal(b, 0, false);
  }
  if (which_ == Thm6::T62 || which_ == Thm6::T63a) {
    // T62 at 0 with brL; T63a at -1/2 where Phi is regular and carries brT.
    const bool h = which_ == Thm6::T62;
    const GaussianRational c = half_integer(h ? 0 : -1);
    const int q = r_.pole_order_at(c);
    const int p1 = p_[0], p2 = p_[1];
    auto R = Rtaylor(c, p1 + p2 + q + 1);
    auto br = [&](int k) { return h ? brL(k).value : brT(k).value; };
    auto L = [&](int i, int k) { return L_neg(0, k, p_[i], roots_[i]); };
    if (h) {
      b = R[p1 + p2 + q];
      for (int s = 0; s < 2; ++s) {
        const int a = p_[s], o = 1 - s;
        for (int k = 0; k <= a + q; ++k) b += L(o, k) * R[a + q - k];
      }
      for (int k1 = 0; k1 <= q; ++k1)
        for (int k2 = 0; k1 + k2 <= q; ++k2) b += L(0, k1) * L(1, k2) * R[q - k1 - k2];
    }
    for (int k = 0; k <= p1 + p2 + q - 1; ++k) b += br(k) * R[p1 + p2 + q - 1 - k];
    for (int s = 0; s < 2; ++s) {
      const int a = p_[s], o = 1 - s;
      for (int k1 = 0; k1 <= a + q - 1; ++k1)
        for (int k2 = 0; k1 + k2 <= a + q - 1; ++k2)
          b += br(k1) * L(o, k2) * R[a + q - 1 - k1 - k2];
    }
    for (int k1 = 0; k1 <= q - 1; ++k1)
      for (int k2 = 0; k1 + k2 <= q - 1; ++k2)
        for (int k3 = 0; k1 + k2 + k3 <= q - 1; ++k3)
          b += br(k1) * L(0, k2) * L(1, k3) * R[q - 1 - k1 - k2 - k3];
    return CVal(b, 0, false);
  }
  // T63b at 0: Phi has a simple pole, phi(s+1/2;x_i) are regular.
  const int q = r_.pole_order_at(half_integer(0));
  const int p1 = p_[0], p2 = p_[1];
  auto R = Rtaylor(half_integer(0), q + 1);
  for (int k1 = 0; k1 <= q; ++k1)
    for (int k2 = 0; k1 + k2 <= q; ++k2)
      b += T_zero(k1, p1, roots_[0]) * T_zero(k2, p2, roots_[1]) * R[q - k1 - k2];
  for (int k1 = 0; k1 <= q - 1; ++k1)
    for (int k2 = 0; k1 + k2 <= q - 1; ++k2)
      for (int k3 = 0; k1 + k2 + k3 <= q - 1; ++k3)
        b += brL(k1).value * T_zero(k2, p1, roots_[0]) * T_zero(k3, p2, roots_[1]) *
             R[q - 1 - k1 - k2 - k3];
  return CVal(b, 0, false);
}

// n = 0 members of the sums that start at 0.
CVal Thm6Engine::head() {
  if (which_ == Thm6::T63a) {
    Complex v = rtaylor(Complex(0), 1)[0];
    for (int i = 0; i < 2; ++i)
      v *= Ti(p_[i], roots_[i]).value * root_embed(roots_[i].inverse(), ctx_);
    return CVal(v, 0, false);
  }
  if (which_ == Thm6::T63b) {
    const int p1 = p_[0], p2 = p_[1];
    auto r = rtaylor(Complex(Real(-1) / 2), p1 + p2);
    Complex v;
    for (int k = 0; k <= p1 + p2 - 1; ++k) v += brT(k).value * r[p1 + p2 - 1 - k];
    for (int s = 0; s < 2; ++s) {
      const int a = p_[s], o = 1 - s;
      for (int k1 = 0; k1 <= a - 1; ++k1)
        for (int k2 = 0; k1 + k2 <= a - 1; ++k2)
          v += brT(k1).value * L_neg(0, k2, p_[o], roots_[o]) * r[a - 1 - k1 - k2];
    }
    return CVal(v, 0, false);
  }
  return CVal();
}

Complex Thm6Engine::term(std::int64_t n) {
  const Real nr(n);
  Complex v;
  if (which_ == Thm6::T61) {
    const int p = p_[0];
    const RootOfUnity& y = roots_[0];
    auto a = rtaylor(Complex(-nr), p + 1);
    Complex rn = rtaylor(Complex(nr), 1)[0];
    v = Xpow(-n) * (Li(p, y).value - zeta_n(n - 1, p, y)) * rn;
    Complex w = a[p];
    for (int k = 0; k <= p - 1; ++k) w += brL(k).value * a[p - 1 - k];
    w += L_neg(n, 0, p, y) * a[0];
    return v + Xpow(n) * w;
  }
  const int p1 = p_[0], p2 = p_[1];
  if (which_ == Thm6::T62) {
    auto a = rtaylor(Complex(-nr), p1 + p2 + 1);
    Complex rn = rtaylor(Complex(nr), 1)[0];
    v = rn * Xpow(-n);
    for (int i = 0; i < 2; ++i) v *= Li(p_[i], roots_[i]).value - zeta_n(n - 1, p_[i], roots_[i]);
    Complex w = a[p1 + p2];
    for (int s = 0; s < 2; ++s) {
      const int b = p_[s], o = 1 - s;
      for (int k = 0; k <= b; ++k) w += L_neg(n, k, p_[o], roots_[o]) * a[b - k];
    }
    w += L_neg(n, 0, p1, roots_[0]) * L_neg(n, 0, p2, roots_[1]) * a[0];
    for (int s = 0; s < 2; ++s) {
      const int b = p_[s], o = 1 - s;
      for (int k1 = 0; k1 <= b - 1; ++k1)
        for (int k2 = 0; k1 + k2 <= b - 1; ++k2)
          w += brL(k1).value * L_neg(n, k2, p_[o], roots_[o]) * a[b - 1 - k1 - k2];
    }
    for (int k = 0; k <= p1 + p2 - 1; ++k) w += brL(k).value * a[p1 + p2 - 1 - k];
    return v + Xpow(n) * w;
  }
  // T63a and T63b share the summands for n >= 1.
  Complex rn = rtaylor(Complex(nr), 1)[0];
  Complex rm = rtaylor(Complex(-nr), 1)[0];
  auto a = rtaylor(Complex(-nr - Real(1) / 2), p1 + p2);
  v = rn * Xpow(-n) * root_embed((roots_[0] * roots_[1]).inverse(), ctx_);
  for (int i = 0; i < 2; ++i) v *= Ti(p_[i], roots_[i]).value - t_n(n, p_[i], roots_[i]);
  Complex u = rm;
  for (int i = 0; i < 2; ++i) {
    Complex tn = t_n(n, p_[i], roots_[i].inverse());
    u *= Ti(p_[i], roots_[i]).value * root_embed(roots_[i].inverse(), ctx_) + (p_[i] % 2 ? -tn : tn);
  }
  Complex w;
  for (int k = 0; k <= p1 + p2 - 1; ++k) w += brT(k).value * a[p1 + p2 - 1 - k];
  for (int s = 0; s < 2; ++s) {
    const int b = p_[s], o = 1 - s;
    for (int k1 = 0; k1 <= b - 1; ++k1)
      for (int k2 = 0; k1 + k2 <= b - 1; ++k2)
        w += brT(k1).value * L_neg(n, k2, p_[o], roots_[o]) * a[b - 1 - k1 - k2];
  }
  return v + Xpow(n) * (u + w);
}

}  // namespace

CVal thm6_rhs(Thm6 which, const std::vector<int>& p, const std::vector<RootOfUnity>& roots,
              const RootOfUnity& x, const FactoredRational& r, const PrecisionCtx& ctx,
              bool relaxed) {
  use_precision(ctx);
  thm6_integrand(which, p, roots, x, r, relaxed);
  Thm6Engine engine(which, p, roots, x, r, ctx);
  return engine.rhs();
}

}  // namespace cyclo
