#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "cyclo/exact.hpp"

namespace cyclo {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionCtx {
  int digits = 40;
  std::int64_t max_terms = 200000;
  double tol = 1e-25;
  int guard_digits = 0;  // 0 selects max(10, digits/5)

  int guard() const { return guard_digits > 0 ? guard_digits : std::max(10, digits / 5); }
  // Extra room on top of the guard digits absorbs the extrapolation weights.
  int working_digits() const { return digits + guard() + 20; }
  void validate() const;
};

// Working precision is process-wide; every public entry point calls this.
void use_precision(const PrecisionCtx& ctx);

double to_double(const Real& x);
std::string decimal_string(const Real& x, int digits);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT
  Complex(int r) : re(r), im(0) {}          // NOLINT
  Complex(const Real& r, const Real& i) : re(r), im(i) {}

  Complex& operator+=(const Complex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Complex& operator-=(const Complex& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  Complex& operator*=(const Complex& b) {
    Real r = re * b.re - im * b.im;
    im = re * b.im + im * b.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& b) {
    re *= b;
    im *= b;
    return *this;
  }
  Complex& operator/=(const Complex& b);
  Complex& operator/=(const Real& b) {
    re /= b;
    im /= b;
    return *this;
  }
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& b) { return a *= b; }
inline Complex operator*(const Real& b, Complex a) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator/(Complex a, const Real& b) { return a /= b; }

Real abs(const Complex& z);
Complex inv(const Complex& z);
Complex powi(const Complex& z, std::int64_t e);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex cot(const Complex& z);
double abs_d(const Complex& z);

const Real& pi_const();
const Real& euler_gamma_const();
const Real& log2_const();

// e^{2 pi i k/N} from cos/sin at working precision.
Complex root_embed(const RootOfUnity& a, const PrecisionCtx& ctx);
Complex to_complex(const GaussianRational& g);

// Value with an absolute error bound; certified means the bound is rigorous.
struct CVal {
  Complex value;
  double err = 0.0;
  bool certified = true;

  CVal() = default;
  CVal(Complex v, double e = 0.0, bool c = true) : value(std::move(v)), err(e), certified(c) {}  // NOLINT

  CVal& operator+=(const CVal& b) {
    value += b.value;
    err += b.err;
    certified = certified && b.certified;
    return *this;
  }
  CVal& operator-=(const CVal& b) {
    value -= b.value;
    err += b.err;
    certified = certified && b.certified;
    return *this;
  }
  CVal& operator*=(const CVal& b);
  CVal& operator*=(const Complex& b) {
    err *= abs_d(b);
    value *= b;
    return *this;
  }
  CVal& operator*=(const Real& b) {
    err *= std::abs(to_double(b));
    value *= b;
    return *this;
  }
  CVal operator-() const { return {-value, err, certified}; }
};

inline CVal operator+(CVal a, const CVal& b) { return a += b; }
inline CVal operator-(CVal a, const CVal& b) { return a -= b; }
inline CVal operator*(CVal a, const CVal& b) { return a *= b; }
inline CVal operator*(CVal a, const Complex& b) { return a *= b; }
inline CVal operator*(const Complex& b, CVal a) { return a *= b; }
inline CVal operator*(CVal a, const Real& b) { return a *= b; }
inline CVal operator*(const Real& b, CVal a) { return a *= b; }
inline CVal operator*(CVal a, std::int64_t b) { return a *= Real(b); }
inline CVal operator*(std::int64_t b, CVal a) { return a *= Real(b); }

CVal even_zeta(int k, const PrecisionCtx& ctx);
CVal hurwitz_zeta(int p, const Complex& a, const PrecisionCtx& ctx);
CVal digamma(const Complex& a, const PrecisionCtx& ctx);

// Terms are requested in increasing n, one call per index, so generators may keep state.
using TermFn = std::function<Complex(std::int64_t n)>;

struct SeriesValue {
  CVal value;
  std::int64_t terms = 0;
};

// sum_{n >= first} term(n). Partial sums over whole periods are extrapolated to
// infinite length by Lagrange (Salzer) interpolation in 1/M. Needs a tail with a
// pure power expansion per residue class mod period. Bound is heuristic.
SeriesValue accelerated_sum(const TermFn& term, std::int64_t first, std::int64_t period,
                            const PrecisionCtx& ctx);

// sum_{n >= 1} a_n x^n after one summation-by-parts pass.
SeriesValue oscillatory_sum(const TermFn& coeff, const RootOfUnity& x, std::int64_t period,
                            const PrecisionCtx& ctx);
CVal oscillatory_sum(const TermFn& coeff, const RootOfUnity& x, const PrecisionCtx& ctx);

using AnalyticFn = std::function<Complex(const Complex& s)>;

std::vector<CVal> cauchy_taylor(const AnalyticFn& f, const Complex& center, const Real& radius,
                                int count, const PrecisionCtx& ctx);

}  // namespace cyclo

namespace cyclo {

// Number of terms accelerated_sum consumes for a given period.
std::int64_t accelerated_span(std::int64_t period, const PrecisionCtx& ctx);

}  // namespace cyclo
