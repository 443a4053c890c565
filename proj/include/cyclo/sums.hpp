#pragma once

#include <string>
#include <vector>

#include "cyclo/nested.hpp"

namespace cyclo {

enum class SumKind { S, T, R, Stilde, CMZV, CMtV, CMSV, CMTV, CMRV };

const char* sum_kind_name(SumKind kind);
SumKind parse_sum_kind(const std::string& name);
bool is_euler_kind(SumKind kind);

struct SumSpec {
  SumKind kind = SumKind::S;
  std::vector<int> exps;
  std::vector<RootOfUnity> roots;
  int q = 2;         // Euler kinds only
  RootOfUnity x;     // Euler kinds only

  void validate() const;
  std::string str() const;
};

SumSpec euler_spec(SumKind kind, std::vector<int> exps, std::vector<RootOfUnity> roots, int q,
                   RootOfUnity x);
SumSpec multiple_spec(SumKind kind, std::vector<int> exps, std::vector<RootOfUnity> roots);

// Defining series summed directly: products of running partial sums, block
// extrapolation, and summation by parts when q = 1. Inner factors with
// (p_i, x_i) = (1, 1) grow like log n; those specs are routed through the
// nested expansion instead.
SeriesValue euler_sum_detailed(const SumSpec& spec, const PrecisionCtx& ctx);
CVal euler_sum(const SumSpec& spec, const PrecisionCtx& ctx);

// Same value through the quasi-shuffle expansion into strictly nested sums.
SeriesValue euler_sum_nested(const SumSpec& spec, const PrecisionCtx& ctx);

// Nested-sum letters of a multiple-value spec and the 2^r style normalization.
std::vector<Letter> multiple_value_letters(const SumSpec& spec, Real& scale);

SeriesValue multiple_value_detailed(const SumSpec& spec, const PrecisionCtx& ctx);
CVal multiple_value(const SumSpec& spec, const PrecisionCtx& ctx);

// Either family.
SeriesValue evaluate_sum(const SumSpec& spec, const PrecisionCtx& ctx);

// Literal truncated summation with an Aitken estimate of the tail.
SeriesValue nested_oracle(const SumSpec& spec, std::int64_t terms, const PrecisionCtx& ctx);

CVal msv_from_R(int p, int q, const RootOfUnity& x, const RootOfUnity& y, const PrecisionCtx& ctx);
CVal msv3_from_R(int p, int q, int r, const RootOfUnity& x, const RootOfUnity& y,
                 const RootOfUnity& z, const PrecisionCtx& ctx);
CVal mtv_from_Stilde(int p, int q, const RootOfUnity& x, const RootOfUnity& y,
                     const PrecisionCtx& ctx);
CVal mtv3_from_Stilde(int p, int q, int r, const RootOfUnity& x, const RootOfUnity& y,
                      const RootOfUnity& z, const PrecisionCtx& ctx);

}  // namespace cyclo
