#include "cyclo/kernels.hpp"

namespace cyclo {

namespace {

void check_not_divergent(int p, const RootOfUnity& x) {
  if (p < 1) fail(ErrorKind::Domain, "kernel derivative order must be positive");
  if (p == 1 && x.is_one()) fail(ErrorKind::Divergence, "phi(s;1) diverges; need p >= 2 when x = 1");
}

bool is_integer(const Complex& s) {
  return s.im == 0 && boost::multiprecision::floor(s.re) == s.re;
}

double eps_of(const PrecisionCtx& ctx) { return std::pow(10.0, -ctx.working_digits() + 3); }

}  // namespace

CVal phi_deriv(int p, const Complex& s, const RootOfUnity& x, const PrecisionCtx& ctx) {
  use_precision(ctx);
  check_not_divergent(p, x);
  if (is_integer(s) && s.re <= 0) fail(ErrorKind::Pole, "phi has poles at nonpositive integers");
  const std::int64_t N = x.order();
  CVal acc;
  for (std::int64_t j = 0; j < N; ++j) {
    Complex a = (s + Complex(Real(j))) / Real(N);
    CVal term = p == 1 ? digamma(a, ctx) : hurwitz_zeta(p, a, ctx);
    acc += term * root_embed(x.pow(j), ctx);
  }
  if (p == 1) {
    acc *= -1 / Real(N);
  } else {
    acc *= boost::multiprecision::pow(Real(N), -p);
  }
  return acc;
}

CVal Phi(const Complex& s, const RootOfUnity& x, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (is_integer(s)) fail(ErrorKind::Pole, "Phi has poles at the integers");
  if (x.is_one()) {
    const Real& pi = pi_const();
    Complex v = cot(s * pi) * pi;
    return CVal(v, abs_d(v) * eps_of(ctx), true);
  }
  CVal a = phi_deriv(1, s, x, ctx);
  CVal b = phi_deriv(1, -s, x.inverse(), ctx);
  return a - b - CVal(inv(s));
}

CVal phi_bracket(int m, const RootOfUnity& x, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (m < 0) fail(ErrorKind::Domain, "bracket index must be nonnegative");
  if (x.is_one()) {
    if (m % 2 == 0) return CVal(Complex(0));
    return li(m + 1, x, ctx) * std::int64_t(-2);
  }
  CVal a = li(m + 1, x, ctx);
  if (m % 2) a = -a;
  return a - li(m + 1, x.inverse(), ctx);
}

CVal ti_bracket(int m, const RootOfUnity& x, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (m < 0) fail(ErrorKind::Domain, "bracket index must be nonnegative");
  if (x.is_one()) {
    if (m % 2 == 0) return CVal(Complex(0));
    // -2 (2^{m+1} - 1) zeta(m+1) = -2 ti_{m+1}(1)
    return ti(m + 1, x, ctx) * std::int64_t(-2);
  }
  CVal a = ti(m + 1, x, ctx);
  if (m % 2) a = -a;
  return a - ti(m + 1, x.inverse(), ctx) * root_embed(x, ctx);
}

std::int64_t ExpansionPoint::twice_center() const {
  switch (kind) {
    case PointKind::NegInt: return -2 * n;
    case PointKind::PosInt: return 2 * n;
    case PointKind::Int: return 2 * n;
    case PointKind::NegHalf: return -2 * n - 1;
    case PointKind::PosHalf: return 1;
  }
  return 0;
}

Complex ExpansionPoint::center() const { return Complex(Real(twice_center()) / 2); }

CVal LaurentSeries::evaluate(const Complex& s) const {
  Complex d = s - center;
  CVal acc;
  for (const auto& [order, c] : principal) acc += c * powi(d, order);
  Complex pw(1);
  for (const auto& c : taylor) {
    acc += c * pw;
    pw *= d;
  }
  return acc;
}

namespace {

// sum_{j=1}^n z^j / (j + shift)^e for e = first, ..., first + count - 1.
std::vector<Complex> power_sums(std::int64_t n, int first, int count, const RootOfUnity& z,
                                const Real& shift, const PrecisionCtx& ctx) {
  std::vector<Complex> out(count);
  const std::int64_t N = z.order();
  std::vector<Complex> powers(N);
  for (std::int64_t j = 0; j < N; ++j) powers[j] = root_embed(z.pow(j), ctx);
  for (std::int64_t j = 1; j <= n; ++j) {
    Real iv = 1 / (Real(j) + shift);
    Real pw = boost::multiprecision::pow(iv, first);
    for (int e = 0; e < count; ++e) {
      out[e] += powers[j % N] * pw;
      pw *= iv;
    }
  }
  return out;
}

Complex root_power(const RootOfUnity& x, std::int64_t e, const PrecisionCtx& ctx) {
  return root_embed(x.pow(e), ctx);
}

LaurentSeries phi_at_neg_int(std::int64_t n, int p, const RootOfUnity& x, int trunc,
                             const PrecisionCtx& ctx) {
  LaurentSeries L;
  Complex xn = root_power(x, n, ctx);
  L.principal[-p] = CVal(xn);
  auto zs = power_sums(n, p, trunc, x.inverse(), Real(0), ctx);
  for (int k = 0; k < trunc; ++k) {
    CVal c = li(k + p, x, ctx);
    if (k % 2) c = -c;
    Complex z = zs[k];
    if (p % 2) z = -z;
    c += CVal(z);
    L.taylor.push_back(c * (xn * Real(binomial(k + p - 1, p - 1))));
  }
  return L;
}

LaurentSeries phi_at_pos_int(std::int64_t n, int p, const RootOfUnity& x, int trunc,
                             const PrecisionCtx& ctx) {
  LaurentSeries L;
  Complex pre = root_power(x, -n, ctx);
  auto zs = power_sums(n - 1, p, trunc, x, Real(0), ctx);
  for (int k = 0; k < trunc; ++k) {
    CVal c = li(k + p, x, ctx) - CVal(zs[k]);
    Real b = binomial(k + p - 1, p - 1);
    if (k % 2) b = -b;
    L.taylor.push_back(c * (pre * b));
  }
  return L;
}

LaurentSeries phi_half_at_neg_int(std::int64_t n, int p, const RootOfUnity& x, int trunc,
                                  const PrecisionCtx& ctx) {
  LaurentSeries L;
  Complex xn = root_power(x, n, ctx);
  Complex xinv = root_power(x, -1, ctx);
  auto ts = power_sums(n, p, trunc, x.inverse(), Real(-1) / 2, ctx);
  for (int k = 0; k < trunc; ++k) {
    CVal c = ti(k + p, x, ctx) * xinv;
    if (k % 2) c = -c;
    Complex t = ts[k];
    if (p % 2) t = -t;
    c += CVal(t);
    L.taylor.push_back(c * (xn * Real(binomial(k + p - 1, p - 1))));
  }
  return L;
}

LaurentSeries phi_half_at_pos_int(std::int64_t n, int p, const RootOfUnity& x, int trunc,
                                  const PrecisionCtx& ctx) {
  LaurentSeries L;
  Complex pre = root_power(x, -n - 1, ctx);
  auto ts = power_sums(n, p, trunc, x, Real(-1) / 2, ctx);
  for (int k = 0; k < trunc; ++k) {
    CVal c = ti(k + p, x, ctx) - CVal(ts[k]);
    Real b = binomial(k + p - 1, p - 1);
    if (k % 2) b = -b;
    L.taylor.push_back(c * (pre * b));
  }
  return L;
}

LaurentSeries Phi_at_int(std::int64_t n, const RootOfUnity& x, int trunc, const PrecisionCtx& ctx) {
  LaurentSeries L;
  Complex pre = root_power(x, -n, ctx);
  L.principal[-1] = CVal(pre);
  for (int m = 0; m < trunc; ++m) L.taylor.push_back(phi_bracket(m, x, ctx) * pre);
  return L;
}

LaurentSeries Phi_at_half(std::int64_t twice_center, const RootOfUnity& x, int trunc,
                          const PrecisionCtx& ctx) {
  // Center -n-1/2 carries x^n; the center 1/2 carries x^{-1}.
  std::int64_t n = (-twice_center - 1) / 2;
  Complex pre = root_power(x, n, ctx);
  LaurentSeries L;
  for (int m = 0; m < trunc; ++m) L.taylor.push_back(ti_bracket(m, x, ctx) * pre);
  return L;
}

LaurentSeries phi_at_half(int p, const RootOfUnity& x, int trunc, const PrecisionCtx& ctx) {
  LaurentSeries L;
  Complex xinv = root_power(x, -1, ctx);
  for (int k = 0; k < trunc; ++k) {
    Real b = binomial(k + p - 1, p - 1);
    if (k % 2) b = -b;
    L.taylor.push_back(ti(k + p, x, ctx) * (xinv * b));
  }
  return L;
}

[[noreturn]] void unsupported(const char* what) {
  fail(ErrorKind::Domain, std::string("no closed-form expansion for ") + what);
}

}  // namespace

LaurentSeries laurent(const ExpansionPoint& point, KernelFn which, int p, const RootOfUnity& x,
                      int trunc, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (trunc < 1) fail(ErrorKind::Domain, "trunc must be positive");
  if (point.n < 0 && point.kind != PointKind::Int)
    fail(ErrorKind::Domain, "expansion point parameter out of range");
  if (which != KernelFn::Phi) check_not_divergent(p, x);
  LaurentSeries L;
  const std::int64_t tc = point.twice_center();
  switch (which) {
    case KernelFn::Phi:
      if (tc % 2 == 0) {
        L = Phi_at_int(tc / 2, x, trunc, ctx);
      } else if (point.kind == PointKind::NegHalf || point.kind == PointKind::PosHalf) {
        L = Phi_at_half(tc, x, trunc, ctx);
      } else {
        unsupported("Phi at this point");
      }
      break;
    case KernelFn::PhiP:
      if (point.kind == PointKind::PosHalf) {
        L = phi_at_half(p, x, trunc, ctx);
      } else if (tc % 2 == 0 && tc <= 0 && point.kind != PointKind::PosInt) {
        L = phi_at_neg_int(-tc / 2, p, x, trunc, ctx);
      } else if (tc % 2 == 0 && tc > 0) {
        L = phi_at_pos_int(tc / 2, p, x, trunc, ctx);
      } else {
        unsupported("phi at this point");
      }
      break;
    case KernelFn::PhiHalfP:
      // phi(s+1/2) near s = c is phi near c + 1/2.
      if (point.kind == PointKind::NegHalf) {
        L = phi_at_neg_int(point.n, p, x, trunc, ctx);
      } else if (point.kind == PointKind::PosHalf) {
        L = phi_at_pos_int(1, p, x, trunc, ctx);
      } else if (tc % 2 == 0 && tc <= 0 && point.kind != PointKind::PosInt) {
        L = phi_half_at_neg_int(-tc / 2, p, x, trunc, ctx);
      } else if (tc % 2 == 0 && tc > 0) {
        L = phi_half_at_pos_int(tc / 2, p, x, trunc, ctx);
      } else {
        unsupported("phi(s+1/2) at this point");
      }
      break;
  }
  L.center = point.center();
  L.trunc_order = trunc;
  return L;
}

}  // namespace cyclo
