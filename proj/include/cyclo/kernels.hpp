#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyclo/polylog.hpp"

namespace cyclo {

// phi^{(p-1)}(s;x) (-1)^{p-1}/(p-1)! = sum_{k>=0} x^k/(k+s)^p.
CVal phi_deriv(int p, const Complex& s, const RootOfUnity& x, const PrecisionCtx& ctx);

// Phi(s;x) = phi(s;x) - phi(-s;x^{-1}) - 1/s, and pi cot(pi s) at x = 1.
CVal Phi(const Complex& s, const RootOfUnity& x, const PrecisionCtx& ctx);

// (-1)^m Li_{m+1}(x) - Li_{m+1}(x^{-1}), with its limit at x = 1.
CVal phi_bracket(int m, const RootOfUnity& x, const PrecisionCtx& ctx);
// (-1)^m ti_{m+1}(x) - x ti_{m+1}(x^{-1}), with its limit at x = 1.
CVal ti_bracket(int m, const RootOfUnity& x, const PrecisionCtx& ctx);

enum class PointKind { NegInt, PosInt, Int, NegHalf, PosHalf };

struct ExpansionPoint {
  PointKind kind = PointKind::Int;
  std::int64_t n = 0;

  static ExpansionPoint neg_int(std::int64_t n) { return {PointKind::NegInt, n}; }
  static ExpansionPoint pos_int(std::int64_t n) { return {PointKind::PosInt, n}; }
  static ExpansionPoint integer(std::int64_t n) { return {PointKind::Int, n}; }
  static ExpansionPoint neg_half(std::int64_t n) { return {PointKind::NegHalf, n}; }
  static ExpansionPoint pos_half() { return {PointKind::PosHalf, 0}; }

  // Center in units of 1/2: -2n, 2n, 2n, -2n-1, 1.
  std::int64_t twice_center() const;
  Complex center() const;
};

enum class KernelFn { PhiP, PhiHalfP, Phi };

struct LaurentSeries {
  Complex center;
  std::map<int, CVal> principal;  // order (negative) -> coefficient
  std::vector<CVal> taylor;
  int trunc_order = 0;

  int pole_order() const { return principal.empty() ? 0 : -principal.begin()->first; }
  CVal evaluate(const Complex& s) const;
};

// Laurent data at the expansion centers where closed forms are known. PhiP and
// PhiHalfP are the normalized derivatives phi^{(p-1)}(s;x) and phi^{(p-1)}(s+1/2;x).
LaurentSeries laurent(const ExpansionPoint& point, KernelFn which, int p, const RootOfUnity& x,
                      int trunc, const PrecisionCtx& ctx);

}  // namespace cyclo
