#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclo/kernels.hpp"
#include "cyclo/sums.hpp"

namespace cyclo {

// Cor33 compares the double S-value parity combination computed two ways.
enum class Theorem { T31, T32, T41, T42, SplitS, SplitR, Cor33 };

const char* theorem_name(Theorem t);
Theorem parse_theorem(const std::string& name);

// Parameter layout:
//   T31, T41, Cor33: exps = {p, q},         roots = {x, y}
//   T32, T42:        exps = {p1, p2, q},    roots = {x, x1, x2}
//   SplitS, SplitR:  exps = (k_1..k_r),     roots = (x_1..x_r)
struct ParityCase {
  Theorem theorem = Theorem::T31;
  std::vector<int> exps;
  std::vector<RootOfUnity> roots;
  bool printed_example = false;  // use the worked example's expanded RHS
  bool other_branch = false;     // square-root branch in the split identities
  double rhs_offset = 0.0;       // added to the RHS; detector sanity checks only

  void validate() const;
  std::string str() const;
};

struct CheckReport {
  ParityCase pcase;
  CVal lhs;
  CVal rhs;
  double residual = 0.0;
  bool pass = false;
  std::int64_t terms_used = 0;
  double seconds = 0.0;
};

CVal rhs_T31(int p, int q, const RootOfUnity& x, const RootOfUnity& y, const PrecisionCtx& ctx);
CVal rhs_T32(int p1, int p2, int q, const RootOfUnity& x, const RootOfUnity& x1,
             const RootOfUnity& x2, const PrecisionCtx& ctx);
CVal rhs_T41(int p, int q, const RootOfUnity& x, const RootOfUnity& y, const PrecisionCtx& ctx);
CVal rhs_T42(int p1, int p2, int q, const RootOfUnity& x, const RootOfUnity& x1,
             const RootOfUnity& x2, const PrecisionCtx& ctx);

SeriesValue lhs_T31(int p, int q, const RootOfUnity& x, const RootOfUnity& y,
                    const PrecisionCtx& ctx);
SeriesValue lhs_T32(int p1, int p2, int q, const RootOfUnity& x, const RootOfUnity& x1,
                    const RootOfUnity& x2, const PrecisionCtx& ctx);
SeriesValue lhs_T41(int p, int q, const RootOfUnity& x, const RootOfUnity& y,
                    const PrecisionCtx& ctx);
SeriesValue lhs_T42(int p1, int p2, int q, const RootOfUnity& x, const RootOfUnity& x1,
                    const RootOfUnity& x2, const PrecisionCtx& ctx);

// The worked examples after Theorems 3.1, 3.2, 4.1 and 4.2, transcribed term by term.
bool has_printed_example(Theorem t, const std::vector<int>& exps);
CVal printed_example_rhs(Theorem t, const std::vector<int>& exps,
                         const std::vector<RootOfUnity>& roots, const PrecisionCtx& ctx);

// Both sides of the square-root splitting identities. flip_sigma >= 0 negates the
// sigma term with that bit pattern on the right.
std::pair<CVal, CVal> split_msv(const std::vector<int>& k, const std::vector<RootOfUnity>& x,
                                bool other_branch, const PrecisionCtx& ctx, int flip_sigma = -1);
std::pair<CVal, CVal> split_mrv(const std::vector<int>& k, const std::vector<RootOfUnity>& x,
                                bool other_branch, const PrecisionCtx& ctx, int flip_sigma = -1);

// S_{p,q}(x,y) - (-1)^{p+q} y S_{p,q}(x^{-1},y^{-1}): direct multiple values on the
// left, the reduction through R-sums and Theorem 3.1 on the right.
std::pair<CVal, CVal> cor33_sides(int p, int q, const RootOfUnity& x, const RootOfUnity& y,
                                  const PrecisionCtx& ctx);

CheckReport check_parity(const ParityCase& pcase, const PrecisionCtx& ctx);

}  // namespace cyclo
