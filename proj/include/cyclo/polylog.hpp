#pragma once

#include <cstdint>

#include "cyclo/numeric.hpp"

namespace cyclo {

// Li_p(x) = sum_{n>=1} x^n / n^p.
CVal li(int p, const RootOfUnity& x, const PrecisionCtx& ctx);

// ti_p(x) = sum_{n>=1} x^n / (n - 1/2)^p, through a square root y of x.
CVal ti(int p, const RootOfUnity& x, const PrecisionCtx& ctx);
CVal ti_via_root(int p, const RootOfUnity& x, bool other_branch, const PrecisionCtx& ctx);

// sum_{k=1}^n x^k / k^p and sum_{k=1}^n x^k / (k - 1/2)^p.
CVal zeta_partial(std::int64_t n, int p, const RootOfUnity& x, const PrecisionCtx& ctx);
CVal t_partial(std::int64_t n, int p, const RootOfUnity& x, const PrecisionCtx& ctx);

}  // namespace cyclo
