#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "cyclo/errors.hpp"

namespace cyclo {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// e^{2 pi i k/N} held as the reduced fraction k/N with 0 <= k < N.
class RootOfUnity {
 public:
  RootOfUnity() = default;

  std::int64_t k() const { return k_; }
  std::int64_t order() const { return n_; }
  bool is_one() const { return k_ == 0; }

  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t e) const;
  // Square roots: k/N -> k/(2N) (canonical) or (k+N)/(2N) (other).
  RootOfUnity sqrt(bool other_branch = false) const;

  std::string str() const;
  static RootOfUnity parse(std::string_view text);

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.k_ <=> b.k_;
  }

 private:
  friend RootOfUnity root_normalize(std::int64_t k, std::int64_t n);
  std::int64_t k_ = 0;
  std::int64_t n_ = 1;
};

RootOfUnity root_normalize(std::int64_t k, std::int64_t n);
inline RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) { return a * b; }
inline RootOfUnity root_inv(const RootOfUnity& a) { return a.inverse(); }
inline RootOfUnity minus_one() { return root_normalize(1, 2); }

// All roots of order dividing some N <= max_order, each listed once.
std::vector<RootOfUnity> roots_up_to_order(std::int64_t max_order);
std::int64_t lcm_of_orders(const std::vector<RootOfUnity>& roots);

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_real() const { return im == 0; }
  std::string str() const;
  // Accepts "a/b+c/di", "a/b-c/di", "a/b", "c/di", "i", integers.
  static GaussianRational parse(std::string_view text);

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
};

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

// Exact binomial coefficient; zero outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

inline int neg_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace cyclo
