#pragma once

#include "cyclo/parity.hpp"

namespace cyclo::detail {

// Shorthand for the right-hand-side primitives. Linear sums on the right go through
// the nested expansion so they never share code with the left-hand sides.
struct RhsTerms {
  const PrecisionCtx& ctx;

  CVal Li(int p, const RootOfUnity& z) const { return li(p, z, ctx); }
  CVal Ti(int p, const RootOfUnity& z) const { return ti(p, z, ctx); }
  CVal brL(int m, const RootOfUnity& z) const { return phi_bracket(m, z, ctx); }
  CVal brT(int m, const RootOfUnity& z) const { return ti_bracket(m, z, ctx); }
  Complex E(const RootOfUnity& z) const { return root_embed(z, ctx); }
  CVal R(int p, int q, const RootOfUnity& inner, const RootOfUnity& outer) const {
    return euler_sum_nested(euler_spec(SumKind::R, {p}, {inner}, q, outer), ctx).value;
  }
  CVal St(int p, int q, const RootOfUnity& inner, const RootOfUnity& outer) const {
    return euler_sum_nested(euler_spec(SumKind::Stilde, {p}, {inner}, q, outer), ctx).value;
  }
};

inline CVal scaled(std::int64_t c, const CVal& v) { return v * Real(c); }

}  // namespace cyclo::detail
