#pragma once

#include <cmath>
#include <random>
#include <string>

#include "cyclo/numeric.hpp"

namespace testing_support {

using namespace cyclo;

inline PrecisionCtx ctx_digits(int digits = 40) {
  PrecisionCtx ctx;
  ctx.digits = digits;
  use_precision(ctx);
  return ctx;
}

inline Real real_of(const char* text) {
  std::string t(text);
  if (t.find('/') != std::string::npos) {
    Rational q = parse_rational(t);
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
  }
  return Real(t);
}

inline Complex complex_of(const char* re, const char* im) { return {real_of(re), real_of(im)}; }

inline double dist(const Complex& a, const Complex& b) { return abs_d(a - b); }
inline double dist(const CVal& a, const Complex& b) { return abs_d(a.value - b); }
inline double dist(const CVal& a, const CVal& b) { return abs_d(a.value - b.value); }

inline Real pi() { return pi_const(); }
inline Real zeta_val(int k, const PrecisionCtx& ctx) { return hurwitz_zeta(k, Complex(1), ctx).value.re; }

inline RootOfUnity root(std::int64_t k, std::int64_t n) { return root_normalize(k, n); }

// Uniform random root of order <= max_order.
inline RootOfUnity random_root(std::mt19937& rng, int max_order) {
  std::uniform_int_distribution<int> order(1, max_order);
  int n = order(rng);
  std::uniform_int_distribution<int> k(0, n - 1);
  return root_normalize(k(rng), n);
}

inline Complex random_point(std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {Real(u(rng)), Real(u(rng))};
}

}  // namespace testing_support
