#include "cyclo/sums.hpp"

#include <algorithm>
#include <sstream>

#include "cyclo/polylog.hpp"

namespace cyclo {

const char* sum_kind_name(SumKind kind) {
  switch (kind) {
    case SumKind::S: return "S";
    case SumKind::T: return "T";
    case SumKind::R: return "R";
    case SumKind::Stilde: return "Stilde";
    case SumKind::CMZV: return "CMZV";
    case SumKind::CMtV: return "CMtV";
    case SumKind::CMSV: return "CMSV";
    case SumKind::CMTV: return "CMTV";
    case SumKind::CMRV: return "CMRV";
  }
  return "?";
}

SumKind parse_sum_kind(const std::string& name) {
  for (SumKind k : {SumKind::S, SumKind::T, SumKind::R, SumKind::Stilde, SumKind::CMZV,
                    SumKind::CMtV, SumKind::CMSV, SumKind::CMTV, SumKind::CMRV})
    if (name == sum_kind_name(k)) return k;
  if (name == "S~" || name == "St") return SumKind::Stilde;
  fail(ErrorKind::Parse, "unknown sum kind '" + name + "'");
}

bool is_euler_kind(SumKind kind) {
  return kind == SumKind::S || kind == SumKind::T || kind == SumKind::R || kind == SumKind::Stilde;
}

void SumSpec::validate() const {
  if (exps.size() != roots.size())
    fail(ErrorKind::Domain, "exponent and root vectors differ in length");
  for (int e : exps)
    if (e < 1) fail(ErrorKind::Domain, "exponents must be positive");
  if (is_euler_kind(kind)) {
    if (q < 1) fail(ErrorKind::Domain, "outer exponent q must be positive");
    if (q == 1 && x.is_one()) fail(ErrorKind::Divergence, "(q,x)=(1,1) diverges");
    return;
  }
  if (exps.empty()) fail(ErrorKind::Domain, "multiple values need depth >= 1");
  if (exps.size() > 3) fail(ErrorKind::UnsupportedDepth, "multiple values are limited to depth 3");
  if (exps.back() == 1 && roots.back().is_one())
    fail(ErrorKind::Divergence, "(k_r,x_r)=(1,1) diverges");
}

std::string SumSpec::str() const {
  std::ostringstream os;
  os << sum_kind_name(kind) << "(";
  for (std::size_t i = 0; i < exps.size(); ++i) os << (i ? "," : "") << exps[i];
  os << ";";
  for (std::size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << roots[i].str();
  os << ")";
  if (is_euler_kind(kind)) os << " q=" << q << " x=" << x.str();
  return os.str();
}

SumSpec euler_spec(SumKind kind, std::vector<int> exps, std::vector<RootOfUnity> roots, int q,
                   RootOfUnity x) {
  SumSpec s;
  s.kind = kind;
  s.exps = std::move(exps);
  s.roots = std::move(roots);
  s.q = q;
  s.x = x;
  return s;
}

SumSpec multiple_spec(SumKind kind, std::vector<int> exps, std::vector<RootOfUnity> roots) {
  SumSpec s;
  s.kind = kind;
  s.exps = std::move(exps);
  s.roots = std::move(roots);
  return s;
}

namespace {

struct EulerShape {
  int inner_twice_shift;
  int outer_twice_shift;
  std::int64_t first;
};

EulerShape shape_of(SumKind kind) {
  switch (kind) {
    case SumKind::S: return {0, 0, 1};
    case SumKind::T: return {-1, -1, 1};
    case SumKind::R: return {0, 1, 0};
    case SumKind::Stilde: return {-1, 0, 1};
    default: fail(ErrorKind::Domain, "not an Euler-sum kind");
  }
}

std::vector<Complex> phase_table(const RootOfUnity& z, const PrecisionCtx& ctx) {
  std::vector<Complex> t(z.order());
  for (std::int64_t j = 0; j < z.order(); ++j) t[j] = root_embed(z.pow(j), ctx);
  return t;
}

// Coefficient of x^n in an Euler sum: prod of running partial sums / (n + c)^q.
class EulerCoefficients {
 public:
  EulerCoefficients(const SumSpec& spec, const PrecisionCtx& ctx)
      : spec_(spec), shape_(shape_of(spec.kind)), acc_(spec.exps.size()) {
    for (const auto& r : spec.roots) tables_.push_back(phase_table(r, ctx));
    inner_shift_ = Real(shape_.inner_twice_shift) / 2;
    outer_shift_ = Real(shape_.outer_twice_shift) / 2;
  }

  Complex operator()(std::int64_t n) {
    if (n >= 1) {
      for (std::size_t i = 0; i < acc_.size(); ++i) {
        Real d = boost::multiprecision::pow(1 / (inner_shift_ + n), spec_.exps[i]);
        acc_[i] += tables_[i][n % spec_.roots[i].order()] * d;
      }
    }
    Complex prod(1);
    for (const auto& a : acc_) prod *= a;
    return prod * boost::multiprecision::pow(1 / (outer_shift_ + n), spec_.q);
  }

 private:
  const SumSpec& spec_;
  EulerShape shape_;
  std::vector<Complex> acc_;
  std::vector<std::vector<Complex>> tables_;
  Real inner_shift_;
  Real outer_shift_;
};

std::int64_t euler_period(const SumSpec& spec) {
  std::vector<RootOfUnity> all = spec.roots;
  all.push_back(spec.x);
  return lcm_of_orders(all);
}

bool has_log_factor(const SumSpec& spec) {
  for (std::size_t i = 0; i < spec.exps.size(); ++i)
    if (spec.exps[i] == 1 && spec.roots[i].is_one()) return true;
  return false;
}

}  // namespace

SeriesValue euler_sum_detailed(const SumSpec& spec, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (!is_euler_kind(spec.kind)) fail(ErrorKind::Domain, "euler_sum needs kind S, T, R or Stilde");
  spec.validate();
  if (has_log_factor(spec)) return euler_sum_nested(spec, ctx);

  const EulerShape shape = shape_of(spec.kind);
  const std::int64_t period = euler_period(spec);
  EulerCoefficients coeff(spec, ctx);
  if (spec.q >= 2) {
    const auto xt = phase_table(spec.x, ctx);
    const std::int64_t N = spec.x.order();
    return accelerated_sum([&](std::int64_t n) { return coeff(n) * xt[n % N]; }, shape.first,
                           period, ctx);
  }
  Complex head;
  if (shape.first == 0) head = coeff(0);
  SeriesValue out = oscillatory_sum([&](std::int64_t n) { return coeff(n); }, spec.x, period, ctx);
  out.value.value += head;
  out.terms += shape.first == 0 ? 1 : 0;
  return out;
}

CVal euler_sum(const SumSpec& spec, const PrecisionCtx& ctx) {
  return euler_sum_detailed(spec, ctx).value;
}

SeriesValue euler_sum_nested(const SumSpec& spec, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (!is_euler_kind(spec.kind)) fail(ErrorKind::Domain, "euler_sum needs kind S, T, R or Stilde");
  spec.validate();
  const EulerShape shape = shape_of(spec.kind);
  std::vector<Letter> inner;
  for (std::size_t i = 0; i < spec.exps.size(); ++i)
    inner.push_back(Letter{spec.roots[i], {{shape.inner_twice_shift, spec.exps[i]}}});
  Letter outer{spec.x, {{shape.outer_twice_shift, spec.q}}};
  SeriesValue out;
  for (const auto& chain : quasi_shuffle_expand(inner, outer)) {
    SeriesValue v = nested_sum(chain, ctx);
    out.value += v.value;
    out.terms += v.terms;
  }
  if (shape.first == 0 && spec.exps.empty())
    out.value.value += boost::multiprecision::pow(Real(2), spec.q);
  return out;
}

std::vector<Letter> multiple_value_letters(const SumSpec& spec, Real& scale) {
  const int r = static_cast<int>(spec.exps.size());
  std::vector<Letter> letters;
  int weight = 0;
  for (int j = 1; j <= r; ++j) {
    int k = spec.exps[j - 1];
    weight += k;
    int twice_shift = 0;
    switch (spec.kind) {
      case SumKind::CMZV: twice_shift = 0; break;
      case SumKind::CMtV: twice_shift = -1; break;
      // (2n - j + 1)^k = 2^k (n - (j-1)/2)^k
      case SumKind::CMSV: twice_shift = -(j - 1); break;
      // (2n - j)^k = 2^k (n - j/2)^k
      case SumKind::CMTV: twice_shift = -j; break;
      // (2n)^k before the last index, (2n - 1)^k on it
      case SumKind::CMRV: twice_shift = j == r ? -1 : 0; break;
      default: fail(ErrorKind::Domain, "not a multiple-value kind");
    }
    letters.push_back(Letter{spec.roots[j - 1], {{twice_shift, k}}});
  }
  if (spec.kind == SumKind::CMZV || spec.kind == SumKind::CMtV) {
    scale = 1;
  } else {
    scale = boost::multiprecision::pow(Real(2), r - weight);
  }
  return letters;
}

SeriesValue multiple_value_detailed(const SumSpec& spec, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (is_euler_kind(spec.kind)) fail(ErrorKind::Domain, "multiple_value needs a multiple-value kind");
  spec.validate();
  Real scale;
  std::vector<Letter> letters = multiple_value_letters(spec, scale);
  SeriesValue out;
  if (letters.size() == 1) {
    const int k = spec.exps[0];
    const RootOfUnity& x = spec.roots[0];
    switch (spec.kind) {
      case SumKind::CMZV:
      case SumKind::CMSV: out.value = li(k, x, ctx); break;
      default: out.value = ti(k, x, ctx); break;
    }
  } else {
    out = nested_sum(letters, ctx);
  }
  out.value *= scale;
  return out;
}

CVal multiple_value(const SumSpec& spec, const PrecisionCtx& ctx) {
  return multiple_value_detailed(spec, ctx).value;
}

SeriesValue evaluate_sum(const SumSpec& spec, const PrecisionCtx& ctx) {
  return is_euler_kind(spec.kind) ? euler_sum_detailed(spec, ctx) : multiple_value_detailed(spec, ctx);
}

namespace {

// Iterated Aitken delta-squared on partial sums taken at geometrically spaced lengths.
CVal aitken_limit(std::vector<Complex> s) {
  if (s.empty()) return CVal(Complex(0), 0, false);
  if (s.size() < 3) {
    double err = s.size() == 2 ? abs_d(s[1] - s[0]) : 0;
    return CVal(s.back(), err, false);
  }
  Complex prev_best = s.back();
  while (s.size() >= 3) {
    std::vector<Complex> next;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      Complex d1 = s[i + 1] - s[i];
      Complex d2 = s[i + 2] - s[i + 1];
      Complex den = d2 - d1;
      if (abs_d(den) == 0) {
        next.push_back(s[i + 2]);
      } else {
        next.push_back(s[i + 2] - d2 * d2 / den);
      }
    }
    prev_best = s.back();
    s = std::move(next);
  }
  return CVal(s.back(), abs_d(s.back() - prev_best), false);
}

// Polynomial extrapolation in 1/N to N = infinity (Neville), for tails that are power series in 1/N.
// The diagonal of the tableau is then passed through the Aitken step.
CVal richardson_limit(const std::vector<Complex>& s, const std::vector<std::int64_t>& n) {
  if (s.size() < 3) return aitken_limit(s);
  std::vector<Real> h;
  for (auto v : n) h.push_back(Real(1) / Real(v));
  std::vector<Complex> t = s, diag = {s[0]};
  for (std::size_t m = 1; m < s.size(); ++m) {
    for (std::size_t i = s.size() - 1; i >= m; --i)
      t[i] = t[i] + (t[i] - t[i - 1]) * Complex(h[i] / (h[i - m] - h[i]));
    diag.push_back(t[s.size() - 1]);
  }
  CVal a = aitken_limit(diag);
  const Complex& best = diag.back();
  a.err = std::max(abs_d(best - diag[diag.size() - 2]), abs_d(a.value - best));
  a.value = best;
  return a;
}

std::vector<std::int64_t> checkpoints(std::int64_t terms, std::int64_t period) {
  std::vector<std::int64_t> pts;
  for (int i = 0; i < 7; ++i) {
    std::int64_t n = (terms >> i) / period * period;
    if (n < 10 || n < 2 * period) break;
    if (!pts.empty() && pts.back() == n) continue;
    pts.push_back(n);
  }
  std::reverse(pts.begin(), pts.end());
  return pts;
}

}  // namespace

SeriesValue nested_oracle(const SumSpec& spec, std::int64_t terms, const PrecisionCtx& ctx) {
  use_precision(ctx);
  spec.validate();
  if (terms < 10) fail(ErrorKind::Domain, "nested_oracle needs at least 10 terms");
  std::vector<Complex> partials;
  SeriesValue out;
  if (is_euler_kind(spec.kind)) {
    const std::int64_t period = euler_period(spec);
    auto pts = checkpoints(terms, period);
    const EulerShape shape = shape_of(spec.kind);
    EulerCoefficients coeff(spec, ctx);
    const auto xt = phase_table(spec.x, ctx);
    Complex acc;
    std::size_t next = 0;
    // The checkpoint counts outer indices from the first one.
    for (std::int64_t i = 0; next < pts.size(); ++i) {
      std::int64_t n = shape.first + i;
      acc += coeff(n) * xt[n % spec.x.order()];
      if (i + 1 == pts[next]) {
        partials.push_back(acc);
        ++next;
      }
    }
    out.terms = pts.empty() ? 0 : pts.back();
    out.value = aitken_limit(partials);
    if (pts.size() < 3) out.value.value = acc;
    return out;
  }

  Real scale;
  std::vector<Letter> letters = multiple_value_letters(spec, scale);
  const std::size_t r = letters.size();
  std::vector<RootOfUnity> phases = spec.roots;
  for (const auto& l : letters) phases.push_back(l.phase);
  const std::int64_t period = lcm_of_orders(phases);
  auto pts = checkpoints(terms, period);
  std::vector<std::vector<Complex>> tables;
  std::vector<std::vector<std::pair<Real, int>>> dens;
  for (const auto& l : letters) {
    tables.push_back(phase_table(l.phase, ctx));
    std::vector<std::pair<Real, int>> d;
    for (const auto& [ts, e] : l.factors) d.emplace_back(Real(ts) / 2, e);
    dens.push_back(std::move(d));
  }
  // q[j] = sum over n_1 < ... < n_j <= n.
  std::vector<Complex> q(r + 1);
  q[0] = Complex(1);
  std::size_t next = 0;
  for (std::int64_t n = 1; next < pts.size(); ++n) {
    for (std::size_t j = r; j >= 1; --j) {
      if (n < static_cast<std::int64_t>(j)) continue;
      Real den = 1;
      for (const auto& [shift, e] : dens[j - 1]) den *= boost::multiprecision::pow(shift + n, e);
      q[j] += tables[j - 1][n % letters[j - 1].phase.order()] * q[j - 1] / den;
    }
    if (n == pts[next]) {
      partials.push_back(q[r] * scale);
      ++next;
    }
  }
  out.terms = pts.empty() ? 0 : pts.back();
  out.value = richardson_limit(partials, pts);
  return out;
}

CVal msv_from_R(int p, int q, const RootOfUnity& x, const RootOfUnity& y, const PrecisionCtx& ctx) {
  use_precision(ctx);
  CVal r = euler_sum(euler_spec(SumKind::R, {p}, {x}, q, y), ctx);
  return r * (root_embed(y, ctx) * boost::multiprecision::pow(Real(2), 2 - p - q));
}

CVal msv3_from_R(int p, int q, int r, const RootOfUnity& x, const RootOfUnity& y,
                 const RootOfUnity& z, const PrecisionCtx& ctx) {
  use_precision(ctx);
  CVal lin = euler_sum(euler_spec(SumKind::R, {p}, {x}, q, y), ctx);
  CVal quad = euler_sum(euler_spec(SumKind::R, {p, r}, {x, z}, q, y), ctx);
  CVal v = li(r, z, ctx) * lin - quad;
  return v * (root_embed(y * z, ctx) * boost::multiprecision::pow(Real(2), 3 - p - q - r));
}

CVal mtv_from_Stilde(int p, int q, const RootOfUnity& x, const RootOfUnity& y,
                     const PrecisionCtx& ctx) {
  use_precision(ctx);
  CVal s = euler_sum(euler_spec(SumKind::Stilde, {p}, {x}, q, y), ctx);
  return s * (root_embed(y, ctx) * boost::multiprecision::pow(Real(2), 2 - p - q));
}

CVal mtv3_from_Stilde(int p, int q, int r, const RootOfUnity& x, const RootOfUnity& y,
                      const RootOfUnity& z, const PrecisionCtx& ctx) {
  use_precision(ctx);
  CVal lin = euler_sum(euler_spec(SumKind::Stilde, {p}, {x}, q, y), ctx);
  CVal quad = euler_sum(euler_spec(SumKind::Stilde, {p, r}, {x, z}, q, y), ctx);
  CVal v = ti(r, z, ctx) * lin - quad;
  return v * (root_embed(y * z, ctx) * boost::multiprecision::pow(Real(2), 3 - p - q - r));
}

}  // namespace cyclo
