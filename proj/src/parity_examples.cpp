#include "cyclo/parity.hpp"
#include "parity_detail.hpp"

namespace cyclo {

using detail::RhsTerms;

bool has_printed_example(Theorem t, const std::vector<int>& e) {
  switch (t) {
    case Theorem::T31:
    case Theorem::T41:
      return e == std::vector<int>{1, 2} || e == std::vector<int>{2, 1};
    case Theorem::T32:
      return e == std::vector<int>{1, 1, 2} || e == std::vector<int>{2, 2, 2};
    case Theorem::T42:
      return e == std::vector<int>{1, 1, 2} || e == std::vector<int>{1, 2, 2};
    default:
      return false;
  }
}

namespace {

CVal example_T31(const std::vector<int>& e, const RootOfUnity& x, const RootOfUnity& y,
                 const RhsTerms& t) {
  const RootOfUnity X = x * y, Xinv = X.inverse(), xi = x.inverse();
  const Complex Xi = t.E(Xinv), yi = t.E(y.inverse());
  if (e == std::vector<int>{1, 2}) {
    CVal v = t.Li(1, y) * t.Ti(2, Xinv);
    v += t.Li(1, y) * t.Ti(2, X) * Xi;
    v += t.Ti(3, X) * Xi * Real(2);
    v += t.brL(0, x) * t.Ti(2, X) * Xi;
    v += t.Ti(2, y) * t.brT(0, xi) * yi;
    // -(ti_2(x^{-1}) + x^{-1} ti_2(x)) is the m = 1 bracket at x^{-1}
    v += t.Ti(1, y) * t.brT(1, xi) * yi;
    return v;
  }
  CVal v = t.Li(2, y) * t.Ti(1, Xinv);
  v -= t.Li(2, y) * t.Ti(1, X) * Xi;
  v -= t.Ti(3, X) * Xi;
  v -= t.brL(0, x) * t.Ti(2, X) * Xi;
  v -= t.brL(1, x) * t.Ti(1, X) * Xi;
  v -= t.Ti(2, y) * t.brT(0, xi) * yi;
  return v;
}

CVal example_T41(const std::vector<int>& e, const RootOfUnity& x, const RootOfUnity& y,
                 const RhsTerms& t) {
  const RootOfUnity X = x * y, Xinv = X.inverse(), xi = x.inverse();
  const Complex Xi = t.E(Xinv), yi = t.E(y.inverse());
  if (e == std::vector<int>{1, 2}) {
    CVal v = t.Li(2, Xinv) * t.Ti(1, y) * yi;
    v += t.Li(2, X) * t.Ti(1, y) * yi;
    v += t.Ti(3, y) * yi;
    v += t.Ti(2, X) * t.brT(0, x) * Xi;
    v += t.Ti(2, y) * t.brL(0, xi) * yi;
    v += t.Ti(1, y) * t.brL(1, xi) * yi;
    return v;
  }
  CVal v = t.Li(1, Xinv) * t.Ti(2, y) * yi;
  v -= t.Li(1, X) * t.Ti(2, y) * yi;
  v -= t.Ti(3, y) * yi * Real(2);
  v -= t.Ti(2, X) * t.brT(0, x) * Xi;
  v -= t.Ti(1, X) * t.brT(1, x) * Xi;
  v -= t.Ti(2, y) * t.brL(0, xi) * yi;
  return v;
}

CVal example_T32(const std::vector<int>& e, const RootOfUnity& x, const RootOfUnity& x1,
                 const RootOfUnity& x2, const RhsTerms& t) {
  const RootOfUnity X = x * x1 * x2, Xinv = X.inverse();
  const RootOfUnity y1 = x1.inverse(), y2 = x2.inverse();
  const Complex Xi = t.E(Xinv);
  const CVal b0 = t.brL(0, x), b1 = t.brL(1, x);
  if (e == std::vector<int>{1, 1, 2}) {
    const CVal l1 = t.Li(1, x1), l2 = t.Li(1, x2);
    CVal v = -(l1 * l2 * t.Ti(2, Xinv));
    v += l1 * t.R(1, 2, x2, Xinv) * Xi;
    v += l2 * t.R(1, 2, x1, Xinv) * Xi;
    v -= t.Ti(4, X) * Xi * Real(3);
    v -= l2 * t.Ti(3, X) * Xi * Real(2);
    v += t.R(1, 3, y2, X) * Real(2);
    v += t.Li(2, x2) * t.Ti(2, X) * Xi;
    v += t.R(2, 2, y2, X);
    v -= l1 * t.Ti(3, X) * Xi * Real(2);
    v += t.R(1, 3, y1, X) * Real(2);
    v += t.Li(2, x1) * t.Ti(2, X) * Xi;
    v += t.R(2, 2, y1, X);
    v -= b0 * t.Ti(3, X) * Xi * Real(2);
    v -= b1 * t.Ti(2, X) * Xi;
    v -= l1 * l2 * t.Ti(2, X) * Xi;
    v += l1 * t.R(1, 2, y2, X);
    v += l2 * t.R(1, 2, y1, X);
    v -= b0 * l2 * t.Ti(2, X) * Xi;
    v += b0 * t.R(1, 2, y2, X);
    v -= b0 * l1 * t.Ti(2, X) * Xi;
    v += b0 * t.R(1, 2, y1, X);
    v -= t.brT(1, x) * t.Ti(1, x1) * t.Ti(1, x2) * Xi;
    v += t.brT(0, x) * (t.Ti(2, x1) * t.Ti(1, x2) + t.Ti(1, x1) * t.Ti(2, x2)) * Xi;
    return v;
  }
  const CVal l21 = t.Li(2, x1), l22 = t.Li(2, x2);
  CVal v = -(l21 * l22 * t.Ti(2, Xinv));
  v += l21 * t.R(2, 2, x2, Xinv) * Xi;
  v += l22 * t.R(2, 2, x1, Xinv) * Xi;
  v -= t.Ti(6, X) * Xi * Real(5);
  v -= l22 * t.Ti(4, X) * Xi * Real(3);
  v -= t.R(2, 4, y2, X) * Real(3);
  v += t.Li(3, x2) * t.Ti(3, X) * Xi * Real(4);
  v -= t.R(3, 3, y2, X) * Real(4);
  v -= t.Li(4, x2) * t.Ti(2, X) * Xi * Real(3);
  v -= t.R(4, 2, y2, X) * Real(3);
  v -= l21 * t.Ti(4, X) * Xi * Real(3);
  v -= t.R(2, 4, y1, X) * Real(3);
  v += t.Li(3, x1) * t.Ti(3, X) * Xi * Real(4);
  v -= t.R(3, 3, y1, X) * Real(4);
  v -= t.Li(4, x1) * t.Ti(2, X) * Xi * Real(3);
  v -= t.R(4, 2, y1, X) * Real(3);
  v -= b0 * t.Ti(5, X) * Xi * Real(4);
  v -= b1 * t.Ti(4, X) * Xi * Real(3);
  v -= t.brL(2, x) * t.Ti(3, X) * Xi * Real(2);
  v -= t.brL(3, x) * t.Ti(2, X) * Xi;
  v -= l21 * l22 * t.Ti(2, X) * Xi;
  v -= l21 * t.R(2, 2, y2, X);
  v -= l22 * t.R(2, 2, y1, X);
  v -= b0 * (t.Li(2, x2) * t.Ti(3, X) * Xi + t.R(2, 3, y2, X)) * Real(2);
  v += b0 * (t.Li(3, x2) * t.Ti(2, X) * Xi - t.R(3, 2, y2, X)) * Real(2);
  v -= b1 * (t.Li(2, x2) * t.Ti(2, X) * Xi + t.R(2, 2, y2, X));
  v -= b0 * (t.Li(2, x1) * t.Ti(3, X) * Xi + t.R(2, 3, y1, X)) * Real(2);
  v += b0 * (t.Li(3, x1) * t.Ti(2, X) * Xi - t.R(3, 2, y1, X)) * Real(2);
  v -= b1 * (t.Li(2, x1) * t.Ti(2, X) * Xi + t.R(2, 2, y1, X));
  v -= t.brT(1, x) * t.Ti(2, x1) * t.Ti(2, x2) * Xi;
  v += t.brT(0, x) * (t.Ti(3, x1) * t.Ti(2, x2) + t.Ti(2, x1) * t.Ti(3, x2)) * Xi * Real(2);
  return v;
}

CVal example_T42(const std::vector<int>& e, const RootOfUnity& x, const RootOfUnity& x1,
                 const RootOfUnity& x2, const RhsTerms& t) {
  const RootOfUnity X = x * x1 * x2, Xinv = X.inverse();
  const RootOfUnity y1 = x1.inverse(), y2 = x2.inverse();
  const Complex Xi = t.E(Xinv), P = t.E((x1 * x2).inverse());
  const Complex x1i = t.E(y1), x2i = t.E(y2);
  const CVal c0 = t.brT(0, x), c1 = t.brT(1, x);
  const CVal b0 = t.brL(0, x), b1 = t.brL(1, x);
  if (e == std::vector<int>{1, 1, 2}) {
    const CVal tt = t.Ti(1, x1) * t.Ti(1, x2);
    CVal v = -(tt * t.Li(2, Xinv) * P);
    v -= tt * t.Li(2, X) * P;
    v += t.Ti(1, x1) * t.St(1, 2, x2, Xinv) * P;
    v += t.Ti(1, x2) * t.St(1, 2, x1, Xinv) * P;
    v += t.Ti(1, x1) * t.St(1, 2, y2, X) * x1i;
    v += t.Ti(1, x2) * t.St(1, 2, y1, X) * x2i;
    v -= c0 * t.Ti(3, X) * Xi * Real(2);
    v -= c1 * t.Ti(2, X) * Xi;
    v -= c0 * (t.Li(1, x2) * t.Ti(2, X) * Xi - t.R(1, 2, y2, X));
    v -= c0 * (t.Li(1, x1) * t.Ti(2, X) * Xi - t.R(1, 2, y1, X));
    v -= t.Ti(3, x1) * t.Ti(1, x2) * P;
    v -= t.Ti(1, x1) * t.Ti(3, x2) * P;
    v -= t.Ti(2, x1) * t.Ti(2, x2) * P;
    v -= b1 * tt * P;
    v += b0 * t.Ti(1, x1) * t.Ti(2, x2) * P;
    v += b0 * t.Ti(2, x1) * t.Ti(1, x2) * P;
    return v;
  }
  const CVal tt = t.Ti(1, x1) * t.Ti(2, x2);
  CVal v = -(tt * t.Li(2, Xinv) * P);
  v -= tt * t.Li(2, X) * P;
  v += t.Ti(1, x1) * t.St(2, 2, x2, Xinv) * P;
  v += t.Ti(2, x2) * t.St(1, 2, x1, Xinv) * P;
  v -= t.Ti(1, x1) * t.St(2, 2, y2, X) * x1i;
  v += t.Ti(2, x2) * t.St(1, 2, y1, X) * x2i;
  v -= c0 * t.Ti(4, X) * Xi * Real(3);
  v -= c1 * t.Ti(3, X) * Xi * Real(2);
  v -= t.brT(2, x) * t.Ti(2, X) * Xi;
  v -= c0 * (t.Li(2, x2) * t.Ti(2, X) * Xi + t.R(2, 2, y2, X));
  v -= c0 * (t.Li(1, x1) * t.Ti(3, X) * Xi - t.R(1, 3, y1, X)) * Real(2);
  v -= c1 * (t.Li(1, x1) * t.Ti(2, X) * Xi - t.R(1, 2, y1, X));
  v += c0 * (t.Li(2, x1) * t.Ti(2, X) * Xi + t.R(2, 2, y1, X));
  v -= t.Ti(1, x1) * t.Ti(4, x2) * P * Real(3);
  v -= t.Ti(3, x1) * t.Ti(2, x2) * P;
  v -= t.Ti(2, x1) * t.Ti(3, x2) * P * Real(2);
  v -= b1 * tt * P;
  v += b0 * t.Ti(2, x1) * t.Ti(2, x2) * P;
  v += b0 * t.Ti(1, x1) * t.Ti(3, x2) * P * Real(2);
  return v;
}

}  // namespace

CVal printed_example_rhs(Theorem th, const std::vector<int>& e,
                         const std::vector<RootOfUnity>& r, const PrecisionCtx& ctx) {
  use_precision(ctx);
  if (!has_printed_example(th, e))
    fail(ErrorKind::Domain, std::string("no worked example for these exponents of ") +
                                theorem_name(th));
  RhsTerms t{ctx};
  switch (th) {
    case Theorem::T31: return example_T31(e, r.at(0), r.at(1), t);
    case Theorem::T41: return example_T41(e, r.at(0), r.at(1), t);
    case Theorem::T32: return example_T32(e, r.at(0), r.at(1), r.at(2), t);
    case Theorem::T42: return example_T42(e, r.at(0), r.at(1), r.at(2), t);
    default: fail(ErrorKind::Domain, "no worked examples for this theorem");
  }
}

}  // namespace cyclo
