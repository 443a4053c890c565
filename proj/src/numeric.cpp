#include "cyclo/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace cyclo {

void PrecisionCtx::validate() const {
  if (digits < 10) fail(ErrorKind::Domain, "digits must be >= 10");
  if (max_terms < 100) fail(ErrorKind::Domain, "max_terms must be >= 100");
  if (!(tol > 0)) fail(ErrorKind::Domain, "tol must be positive");
}

void use_precision(const PrecisionCtx& ctx) {
  unsigned want = static_cast<unsigned>(ctx.working_digits());
  if (Real::default_precision() != want) Real::default_precision(want);
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::string decimal_string(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

Complex& Complex::operator/=(const Complex& b) {
  Real d = b.norm();
  Real r = (re * b.re + im * b.im) / d;
  im = (im * b.re - re * b.im) / d;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
double abs_d(const Complex& z) { return std::hypot(to_double(z.re), to_double(z.im)); }

Complex inv(const Complex& z) {
  Real d = z.norm();
  return {z.re / d, -z.im / d};
}

Complex powi(const Complex& z, std::int64_t e) {
  if (e < 0) return powi(inv(z), -e);
  Complex result(1);
  Complex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(const Complex& z) {
  return {boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re)};
}

Complex sin(const Complex& z) {
  return {boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
          boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im)};
}

Complex cos(const Complex& z) {
  return {boost::multiprecision::cos(z.re) * boost::multiprecision::cosh(z.im),
          -boost::multiprecision::sin(z.re) * boost::multiprecision::sinh(z.im)};
}

Complex cot(const Complex& z) { return cos(z) / sin(z); }

CVal& CVal::operator*=(const CVal& b) {
  double ea = err, eb = b.err;
  err = abs_d(value) * eb + abs_d(b.value) * ea + ea * eb;
  value *= b.value;
  certified = certified && b.certified;
  return *this;
}

namespace {

template <class Make>
const Real& cached_constant(std::map<unsigned, Real>& cache, std::mutex& mu, Make make) {
  std::lock_guard<std::mutex> lock(mu);
  unsigned prec = Real::default_precision();
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, make()).first;
  return it->second;
}

}  // namespace

const Real& pi_const() {
  static std::map<unsigned, Real> cache;
  static std::mutex mu;
  return cached_constant(cache, mu, [] { return boost::math::constants::pi<Real>(); });
}

const Real& euler_gamma_const() {
  static std::map<unsigned, Real> cache;
  static std::mutex mu;
  return cached_constant(cache, mu, [] { return boost::math::constants::euler<Real>(); });
}

const Real& log2_const() {
  static std::map<unsigned, Real> cache;
  static std::mutex mu;
  return cached_constant(cache, mu, [] { return boost::multiprecision::log(Real(2)); });
}

Complex root_embed(const RootOfUnity& a, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (a.is_one()) return Complex(1);
  if (a.order() == 2) return Complex(-1);
  if (a.order() == 4) return a.k() == 1 ? Complex(Real(0), Real(1)) : Complex(Real(0), Real(-1));
  Real t = 2 * pi_const() * a.k() / a.order();
  return {boost::multiprecision::cos(t), boost::multiprecision::sin(t)};
}

Complex to_complex(const GaussianRational& g) { return {Real(g.re), Real(g.im)}; }

namespace {

double working_eps(const PrecisionCtx& ctx) { return std::pow(10.0, -ctx.working_digits() + 3); }

// B_{2k}/(2k)! for k = 0.., at the current precision.
constexpr std::size_t kMaxEulerMaclaurin = 200;

// Filled once per precision and never resized afterwards.
const std::vector<Real>& bernoulli_over_factorial() {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Real>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[Real::default_precision()];
  for (std::size_t k = v.size(); k < kMaxEulerMaclaurin + 2; ++k) {
    Integer fact = 1;
    for (std::size_t j = 2; j <= 2 * k; ++j) fact *= j;
    v.push_back(Real(bernoulli(static_cast<unsigned>(2 * k)) / Rational(fact)));
  }
  return v;
}

bool is_nonpositive_integer(const Complex& a) {
  return a.im == 0 && a.re <= 0 && boost::multiprecision::floor(a.re) == a.re;
}

double shift_target(int p, const PrecisionCtx& ctx) {
  return std::max(0.4 * p * ctx.working_digits(), 0.6 * ctx.working_digits());
}

}  // namespace

CVal hurwitz_zeta(int p, const Complex& a, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (p < 2) fail(ErrorKind::Domain, "hurwitz_zeta needs p >= 2");
  if (is_nonpositive_integer(a)) fail(ErrorKind::Pole, "hurwitz_zeta pole at nonpositive integer");
  const double target = shift_target(p, ctx);
  double are = to_double(a.re);
  std::int64_t shift = are >= target ? 0 : static_cast<std::int64_t>(std::ceil(target - are));
  const double eps = std::pow(10.0, -ctx.working_digits());

  if (a.im == 0) {
    Real direct = 0;
    for (std::int64_t m = 0; m < shift; ++m) {
      Real t = 1 / (a.re + m);
      direct += boost::multiprecision::pow(t, p);
    }
    Real b = a.re + shift;
    Real binv = 1 / b;
    Real bp = boost::multiprecision::pow(binv, p);
    Real sum = bp * b / (p - 1) + bp / 2;
    Real pw = bp * binv;  // b^{-p-1}
    Real binv2 = binv * binv;
    Real rising = p;
    double bound = 0;
    double scale = std::abs(to_double(sum));
    const auto& c = bernoulli_over_factorial();
  for (std::size_t k = 1;; ++k) {
      
      Real term = c[k] * rising * pw;
      double t = std::abs(to_double(term));
      if (t < eps * scale || k >= kMaxEulerMaclaurin) {
        bound = 2 * t;
        break;
      }
      sum += term;
      rising *= (p + 2 * k - 1);
      rising *= (p + 2 * k);
      pw *= binv2;
    }
    Real total = direct + sum;
    return CVal(Complex(total), bound + std::abs(to_double(total)) * working_eps(ctx), true);
  }

  Complex direct;
  for (std::int64_t m = 0; m < shift; ++m) direct += powi(inv(a + Complex(Real(m))), p);
  Complex b = a + Complex(Real(shift));
  Complex binv = inv(b);
  Complex bp = powi(binv, p);
  Complex sum = bp * b / Real(p - 1) + bp / Real(2);
  Complex pw = bp * binv;
  Complex binv2 = binv * binv;
  Real rising = p;
  double ratio = abs_d(b) / to_double(b.re);
  double scale = abs_d(sum);
  double bound = 0;
  const auto& c = bernoulli_over_factorial();
  for (std::size_t k = 1;; ++k) {
    
    Complex term = pw * (c[k] * rising);
    double t = abs_d(term);
    if (t < eps * scale || k >= kMaxEulerMaclaurin) {
      bound = 2 * t * std::pow(ratio, p + 2.0 * k + 1);
      break;
    }
    sum += term;
    rising *= (p + 2 * k - 1);
    rising *= (p + 2 * k);
    pw *= binv2;
  }
  Complex total = direct + sum;
  return CVal(total, bound + abs_d(total) * working_eps(ctx), true);
}

CVal digamma(const Complex& a, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (is_nonpositive_integer(a)) fail(ErrorKind::Pole, "digamma pole at nonpositive integer");
  const double target = shift_target(1, ctx);
  double are = to_double(a.re);
  std::int64_t shift = are >= target ? 0 : static_cast<std::int64_t>(std::ceil(target - are));
  const double eps = std::pow(10.0, -ctx.working_digits());

  if (a.im == 0) {
    Real direct = 0;
    for (std::int64_t m = 0; m < shift; ++m) direct += 1 / (a.re + m);
    Real b = a.re + shift;
    Real binv = 1 / b;
    Real binv2 = binv * binv;
    Real sum = boost::multiprecision::log(b) - binv / 2;
    Real pw = binv2;
    double bound = 0;
    double scale = std::abs(to_double(sum));
    const auto& c = bernoulli_over_factorial();
  for (std::size_t k = 1;; ++k) {
      
      // B_{2k}/(2k) = c_k (2k-1)!
      Real coef = c[k];
      for (std::size_t j = 2; j < 2 * k; ++j) coef *= j;
      Real term = coef * pw;
      double t = std::abs(to_double(term));
      if (t < eps * scale || k >= kMaxEulerMaclaurin) {
        bound = 2 * t;
        break;
      }
      sum -= term;
      pw *= binv2;
    }
    Real total = sum - direct;
    return CVal(Complex(total), bound + std::abs(to_double(total)) * working_eps(ctx), true);
  }

  Complex direct;
  for (std::int64_t m = 0; m < shift; ++m) direct += inv(a + Complex(Real(m)));
  Complex b = a + Complex(Real(shift));
  Complex binv = inv(b);
  Complex binv2 = binv * binv;
  Complex sum = log(b) - binv / Real(2);
  Complex pw = binv2;
  double ratio = abs_d(b) / to_double(b.re);
  double scale = abs_d(sum);
  double bound = 0;
  const auto& c = bernoulli_over_factorial();
  for (std::size_t k = 1;; ++k) {
    
    Real coef = c[k];
    for (std::size_t j = 2; j < 2 * k; ++j) coef *= j;
    Complex term = pw * coef;
    double t = abs_d(term);
    if (t < eps * scale || k >= kMaxEulerMaclaurin) {
      bound = 2 * t * std::pow(ratio, 2.0 * k + 2);
      break;
    }
    sum -= term;
    pw *= binv2;
  }
  Complex total = sum - direct;
  return CVal(total, bound + abs_d(total) * working_eps(ctx), true);
}

CVal even_zeta(int k, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (k < 1) fail(ErrorKind::Domain, "even_zeta needs k >= 1");
  Integer fact = 1;
  for (int j = 2; j <= 2 * k; ++j) fact *= j;
  Rational c = bernoulli(2 * k) / Rational(2 * fact);
  if (k % 2 == 0) c = -c;
  Real v = Real(c) * boost::multiprecision::pow(2 * pi_const(), 2 * k);
  return CVal(Complex(v), std::abs(to_double(v)) * working_eps(ctx), true);
}

namespace {

struct SalzerWeights {
  std::vector<Real> w;
  double abs_sum = 0;
};

// Lagrange weights extrapolating f(1/(s k)), k = 1..K, to 1/M = 0.
const SalzerWeights& salzer_weights(int K) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, int>, SalzerWeights> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(Real::default_precision(), K);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SalzerWeights sw;
  Integer kfact = 1;
  for (int k = 1; k <= K; ++k) {
    kfact *= k;
    Integer rest = 1;
    for (int j = 2; j <= K - k; ++j) rest *= j;
    Integer num = boost::multiprecision::pow(Integer(k), static_cast<unsigned>(K));
    Real w = Real(Rational(num, kfact * rest));
    if ((K - k) % 2) w = -w;
    sw.abs_sum += std::abs(to_double(w));
    sw.w.push_back(w);
  }
  return cache.emplace(key, std::move(sw)).first->second;
}

struct Schedule {
  std::int64_t step;
  int nodes;
};

Schedule schedule_for(std::int64_t period, const PrecisionCtx& ctx) {
  const double target = ctx.digits + ctx.guard();
  for (std::int64_t step = 8; step >= 1; step /= 2) {
    int nodes = static_cast<int>(std::ceil(target / std::log10(2 * M_PI * step))) + 4;
    if (step * nodes * period <= ctx.max_terms) return {step, nodes};
  }
  fail(ErrorKind::Accuracy, "max_terms too small for period " + std::to_string(period));
}

}  // namespace

SeriesValue accelerated_sum(const TermFn& term, std::int64_t first, std::int64_t period,
                            const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (period < 1) fail(ErrorKind::Domain, "period must be positive");
  Schedule sch = schedule_for(period, ctx);
  const int K = sch.nodes;
  std::vector<Complex> partial(K);
  Complex acc;
  std::int64_t n = first;
  double max_partial = 0;
  for (int k = 1; k <= K; ++k) {
    std::int64_t end = first + sch.step * k * period;
    for (; n < end; ++n) acc += term(n);
    partial[k - 1] = acc;
    max_partial = std::max(max_partial, abs_d(acc));
  }
  const auto& full = salzer_weights(K);
  const auto& coarse = salzer_weights(K - 4);
  Complex e_full, e_coarse;
  for (int k = 0; k < K; ++k) e_full += partial[k] * full.w[k];
  for (int k = 0; k < K - 4; ++k) e_coarse += partial[k] * coarse.w[k];
  double err = abs_d(e_full - e_coarse) + full.abs_sum * max_partial * working_eps(ctx);
  SeriesValue out;
  out.value = CVal(e_full, err, false);
  out.terms = n - first;
  return out;
}

SeriesValue oscillatory_sum(const TermFn& coeff, const RootOfUnity& x, std::int64_t period,
                            const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (x.is_one()) fail(ErrorKind::Divergence, "oscillatory_sum needs x != 1");
  if (period % x.order() != 0) fail(ErrorKind::Domain, "period must be a multiple of the order of x");
  const std::int64_t N = x.order();
  std::vector<Complex> powers(N);
  for (std::int64_t j = 0; j < N; ++j) powers[j] = root_embed(x.pow(j), ctx);
  const Complex xv = powers[1 % N];
  const Complex scale = xv / (Complex(1) - xv);
  Complex a_cur, a_next;
  std::int64_t last = 0;
  // sum a_n x^n = sum (a_n - a_{n+1}) G_n with G_n = x (1 - x^n)/(1 - x).
  TermFn by_parts = [&](std::int64_t n) {
    if (last == 0) {
      a_cur = coeff(n);
    } else {
      a_cur = a_next;
    }
    a_next = coeff(n + 1);
    last = n;
    Complex g = scale * (Complex(1) - powers[n % N]);
    return (a_cur - a_next) * g;
  };
  SeriesValue out = accelerated_sum(by_parts, 1, period, ctx);
  out.value.err *= 10;
  out.value.certified = false;
  out.terms += 1;
  return out;
}

CVal oscillatory_sum(const TermFn& coeff, const RootOfUnity& x, const PrecisionCtx& ctx) {
  return oscillatory_sum(coeff, x, x.order(), ctx).value;
}

std::vector<CVal> cauchy_taylor(const AnalyticFn& f, const Complex& center, const Real& radius,
                                int count, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (count < 1) fail(ErrorKind::Domain, "cauchy_taylor needs count >= 1");
  if (!(radius > 0)) fail(ErrorKind::Domain, "cauchy_taylor needs positive radius");
  const Real two_pi = 2 * pi_const();
  std::int64_t M = 32;
  while (M < 2 * count) M *= 2;
  std::vector<Complex> values;
  auto node = [&](std::int64_t j, std::int64_t m) {
    Real t = two_pi * j / m;
    return Complex(boost::multiprecision::cos(t), boost::multiprecision::sin(t));
  };
  for (std::int64_t j = 0; j < M; ++j) values.push_back(f(center + node(j, M) * radius));

  auto coefficients = [&](const std::vector<Complex>& vals, std::int64_t m) {
    std::vector<Complex> omega(m);
    for (std::int64_t j = 0; j < m; ++j) omega[j] = node(j, m);
    std::vector<Complex> c(count);
    Real rk = 1;
    for (int k = 0; k < count; ++k) {
      Complex acc;
      for (std::int64_t j = 0; j < m; ++j) acc += vals[j] * omega[(m - (j * k) % m) % m];
      c[k] = acc / (Real(m) * rk);
      rk *= radius;
    }
    return c;
  };

  std::vector<Complex> prev = coefficients(values, M);
  double rad = to_double(radius);
  for (int doubling = 0; doubling < 9; ++doubling) {
    std::vector<Complex> next_vals(2 * M);
    for (std::int64_t j = 0; j < M; ++j) {
      next_vals[2 * j] = values[j];
      next_vals[2 * j + 1] = f(center + node(2 * j + 1, 2 * M) * radius);
    }
    values = std::move(next_vals);
    M *= 2;
    std::vector<Complex> cur = coefficients(values, M);
    double fscale = 1;
    for (const auto& v : values) fscale = std::max(fscale, abs_d(v));
    double worst = 0;
    std::vector<double> diffs(count);
    for (int k = 0; k < count; ++k) {
      diffs[k] = abs_d(cur[k] - prev[k]);
      worst = std::max(worst, diffs[k] * std::pow(rad, k));
    }
    prev = std::move(cur);
    if (worst <= ctx.tol * fscale) {
      std::vector<CVal> out;
      for (int k = 0; k < count; ++k) out.emplace_back(prev[k], diffs[k] + working_eps(ctx), false);
      return out;
    }
  }
  fail(ErrorKind::Accuracy, "cauchy_taylor did not converge");
}

}  // namespace cyclo

namespace cyclo {

std::int64_t accelerated_span(std::int64_t period, const PrecisionCtx& ctx) {
  Schedule sch = schedule_for(period, ctx);
  return sch.step * sch.nodes * period;
}

}  // namespace cyclo
