#include "cyclo/polylog.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cyclo {

namespace {

using MemoKey = std::tuple<unsigned, int, std::int64_t, std::int64_t>;

CVal li_uncached(int p, const RootOfUnity& x, const PrecisionCtx& ctx) {
  if (p == 1) {
    Complex v = -log(Complex(1) - root_embed(x, ctx));
    return CVal(v, abs_d(v) * std::pow(10.0, -ctx.working_digits() + 3), true);
  }
  if (x.is_one()) return hurwitz_zeta(p, Complex(1), ctx);
  const std::int64_t N = x.order();
  CVal acc;
  for (std::int64_t j = 1; j <= N; ++j) {
    CVal z = hurwitz_zeta(p, Complex(Real(j) / N), ctx);
    acc += z * root_embed(x.pow(j), ctx);
  }
  acc *= boost::multiprecision::pow(Real(N), -p);
  return acc;
}

}  // namespace

CVal li(int p, const RootOfUnity& x, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (p < 1) fail(ErrorKind::Domain, "polylog weight must be positive");
  if (p == 1 && x.is_one()) fail(ErrorKind::Divergence, "(p,x)=(1,1) diverges for Li");
  static std::mutex mu;
  static std::map<MemoKey, CVal> memo;
  MemoKey key{Real::default_precision(), p, x.k(), x.order()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  CVal v = li_uncached(p, x, ctx);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, v).first->second;
}

CVal ti_via_root(int p, const RootOfUnity& x, bool other_branch, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (p < 1) fail(ErrorKind::Domain, "polylog weight must be positive");
  if (p == 1 && x.is_one()) fail(ErrorKind::Divergence, "(p,x)=(1,1) diverges for ti");
  RootOfUnity y = x.sqrt(other_branch);
  Complex yv = root_embed(y, ctx);
  CVal a = li(p, y, ctx) * (yv * boost::multiprecision::pow(Real(2), p));
  CVal b = li(p, x, ctx) * yv;
  return a - b;
}

CVal ti(int p, const RootOfUnity& x, const PrecisionCtx& ctx) {
  use_precision(ctx);
  static std::mutex mu;
  static std::map<MemoKey, CVal> memo;
  MemoKey key{Real::default_precision(), p, x.k(), x.order()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  CVal v = ti_via_root(p, x, false, ctx);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, v).first->second;
}

namespace {

template <class Denominator>
CVal partial_sum(std::int64_t n, int p, const RootOfUnity& x, const PrecisionCtx& ctx,
                 Denominator denom) {
  use_precision(ctx);
  if (n < 0) fail(ErrorKind::Domain, "partial sum length must be nonnegative");
  if (p < 1) fail(ErrorKind::Domain, "partial sum weight must be positive");
  const std::int64_t N = x.order();
  std::vector<Complex> powers(N);
  for (std::int64_t j = 0; j < N; ++j) powers[j] = root_embed(x.pow(j), ctx);
  Complex acc;
  for (std::int64_t k = 1; k <= n; ++k) {
    Real t = boost::multiprecision::pow(1 / denom(k), p);
    acc += powers[k % N] * t;
  }
  return CVal(acc, (abs_d(acc) + 1) * n * std::pow(10.0, -ctx.working_digits() + 2), true);
}

}  // namespace

CVal zeta_partial(std::int64_t n, int p, const RootOfUnity& x, const PrecisionCtx& ctx) {
  return partial_sum(n, p, x, ctx, [](std::int64_t k) { return Real(k); });
}

CVal t_partial(std::int64_t n, int p, const RootOfUnity& x, const PrecisionCtx& ctx) {
  return partial_sum(n, p, x, ctx, [](std::int64_t k) { return Real(k) - Real(1) / 2; });
}

}  // namespace cyclo
