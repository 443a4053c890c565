#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/kernels.hpp"

namespace cyclo {

struct RationalFactor {
  GaussianRational point;
  int mult = 1;
};

// scale * prod (s - z)^m / prod (s - a)^m, with exact Gaussian-rational points.
struct FactoredRational {
  GaussianRational scale{Rational(1), Rational(0)};
  std::vector<RationalFactor> zeros;
  std::vector<RationalFactor> poles;

  void validate() const;
  // deg(denominator) - deg(numerator).
  int decay() const;
  int pole_order_at(const GaussianRational& c) const;
  std::string str() const;
  // Mini syntax: "scale=2;zeros=[(1,1)];poles=[(1/2,2),(i,1)]"; every part optional.
  static FactoredRational parse(std::string_view text);
};

CVal rf_eval(const FactoredRational& r, const Complex& s, const PrecisionCtx& ctx);
CVal rf_deriv(const FactoredRational& r, int k, const Complex& s, const PrecisionCtx& ctx);
// r^{(j)}(s)/j! for j < count.
std::vector<CVal> rf_taylor(const FactoredRational& r, const Complex& s, int count,
                            const PrecisionCtx& ctx);
// Taylor coefficients of (s - center)^m r(s) at a pole of order m.
std::vector<CVal> rf_shifted_taylor(const FactoredRational& r, const GaussianRational& center,
                                    int count, const PrecisionCtx& ctx);

enum class KernelKind { H, G };  // Phi prod phi(s;x_i) or Phi prod phi(s+1/2;x_i)

const char* kernel_kind_name(KernelKind k);
KernelKind parse_kernel_kind(std::string_view text);

struct IntegrandSpec {
  KernelKind kind = KernelKind::H;
  std::vector<int> p;
  std::vector<RootOfUnity> roots;
  RootOfUnity x;
  FactoredRational rational;
  bool relaxed_decay = false;  // accept o(1/s) rational parts

  void validate() const;
  std::string str() const;
};

CVal integrand_value(const IntegrandSpec& ispec, const Complex& s, const PrecisionCtx& ctx);

// Coefficient of (s - pole)^{-1} from trapezoidal Cauchy integrals on a circle of
// half the distance to the nearest other singularity; order_hint bounds the pole order.
CVal numeric_residue(const IntegrandSpec& ispec, const Complex& pole, int order_hint,
                     const PrecisionCtx& ctx);

// Residue at an integer or half-integer from the kernels' Laurent data.
CVal kernel_point_residue(const IntegrandSpec& ispec, std::int64_t twice_center,
                          const PrecisionCtx& ctx);

// Sum of all residues with |pole| <= n_max; tends to 0.
CVal closure_check(const IntegrandSpec& ispec, std::int64_t n_max, const PrecisionCtx& ctx);

enum class Thm6 { T61, T62, T63a, T63b };

const char* thm6_name(Thm6 t);
Thm6 parse_thm6(std::string_view text);

IntegrandSpec thm6_integrand(Thm6 which, const std::vector<int>& p,
                             const std::vector<RootOfUnity>& roots, const RootOfUnity& x,
                             const FactoredRational& r, bool relaxed = false);

// Right side of the general residue formula: the residue sums over n plus the
// block at the distinguished pole (0, or -1/2 for T63a).
CVal thm6_rhs(Thm6 which, const std::vector<int>& p, const std::vector<RootOfUnity>& roots,
              const RootOfUnity& x, const FactoredRational& r, const PrecisionCtx& ctx,
              bool relaxed = false);

// Left side: minus the residues at the rational poles other than the distinguished one.
CVal thm6_lhs(Thm6 which, const std::vector<int>& p, const std::vector<RootOfUnity>& roots,
              const RootOfUnity& x, const FactoredRational& r, const PrecisionCtx& ctx,
              bool relaxed = false);

}  // namespace cyclo
