#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"

#include "cyclo/polylog.hpp"
#include "cyclo/sums.hpp"

using namespace cyclo;
using namespace testing_support;

namespace {

SumSpec spec_of(const oracle::SumVal& r) {
  SumKind kind = parse_sum_kind(r.kind);
  std::vector<RootOfUnity> roots;
  for (const char* t : r.roots) roots.push_back(RootOfUnity::parse(t));
  if (is_euler_kind(kind)) return euler_spec(kind, r.exps, roots, r.q, RootOfUnity::parse(r.x));
  return multiple_spec(kind, r.exps, roots);
}

SumSpec conjugated(SumSpec s) {
  for (auto& r : s.roots) r = r.inverse();
  s.x = s.x.inverse();
  return s;
}

}  // namespace

TEST_CASE("sum values against frozen values") {
  auto ctx = ctx_digits(40);
  for (const auto& r : oracle::sums) {
    SumSpec s = spec_of(r);
    CAPTURE(s.str());
    CVal v = evaluate_sum(s, ctx).value;
    CHECK(dist(v, complex_of(r.re, r.im)) < 1e-30);
  }
}

TEST_CASE("empty Euler sums reduce to ti and Li") {
  auto ctx = ctx_digits(40);
  Real p = pi();
  CHECK(dist(euler_sum(euler_spec(SumKind::R, {}, {}, 2, root(0, 1)), ctx), Complex(p * p / 2)) < 1e-36);
  CHECK(dist(euler_sum(euler_spec(SumKind::Stilde, {}, {}, 2, minus_one()), ctx), Complex(-p * p / 12)) <
        1e-36);
  for (auto x : roots_up_to_order(4)) {
    for (int q = 1; q <= 3; ++q) {
      if (q == 1 && x.is_one()) continue;
      Complex xi = inv(root_embed(x, ctx));
      CHECK(dist(euler_sum(euler_spec(SumKind::R, {}, {}, q, x), ctx), xi * ti(q, x, ctx).value) < 1e-36);
      CHECK(dist(euler_sum(euler_spec(SumKind::Stilde, {}, {}, q, x), ctx), li(q, x, ctx)) < 1e-36);
    }
  }
}

TEST_CASE("multiple value examples") {
  auto ctx = ctx_digits(40);
  Real p = pi();
  CHECK(dist(multiple_value(multiple_spec(SumKind::CMSV, {2}, {root(0, 1)}), ctx), Complex(p * p / 12)) < 1e-36);
  CHECK(dist(multiple_value(multiple_spec(SumKind::CMTV, {2}, {root(0, 1)}), ctx), Complex(p * p / 4)) < 1e-36);
  // Euler's zeta(1,2) = zeta(3).
  CHECK(dist(multiple_value(multiple_spec(SumKind::CMZV, {1, 2}, {root(0, 1), root(0, 1)}), ctx),
             Complex(zeta_val(3, ctx))) < 1e-30);
  // zeta(1,1,2) = zeta(4).
  CHECK(dist(multiple_value(multiple_spec(SumKind::CMZV, {1, 1, 2}, {root(0, 1), root(0, 1), root(0, 1)}), ctx),
             Complex(pow(p, 4) / 90)) < 1e-28);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(euler_spec(SumKind::R, {}, {}, 1, root(0, 1)).validate(), Error);
  CHECK_THROWS_AS(euler_spec(SumKind::S, {1, 2}, {root(0, 1)}, 2, root(0, 1)).validate(), Error);
  CHECK_THROWS_AS(euler_spec(SumKind::S, {0}, {root(0, 1)}, 2, root(0, 1)).validate(), Error);
  CHECK_THROWS_AS(multiple_spec(SumKind::CMSV, {2, 1}, {root(0, 1), root(0, 1)}).validate(), Error);
  CHECK_THROWS_AS(multiple_spec(SumKind::CMZV, {1, 1, 1, 2}, std::vector<RootOfUnity>(4)).validate(), Error);
  CHECK_THROWS_AS(parse_sum_kind("Q"), Error);
  try {
    multiple_spec(SumKind::CMZV, {1, 1, 1, 2}, std::vector<RootOfUnity>(4)).validate();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedDepth);
  }
}

TEST_CASE("direct and nested Euler-sum engines agree") {
  auto ctx = ctx_digits(40);
  std::mt19937 rng(41);
  const SumKind kinds[] = {SumKind::S, SumKind::T, SumKind::R, SumKind::Stilde};
  int done = 0;
  while (done < 24) {
    SumKind kind = kinds[done % 4];
    int depth = 1 + static_cast<int>(rng() % 2);
    std::vector<int> exps;
    std::vector<RootOfUnity> roots;
    for (int i = 0; i < depth; ++i) {
      exps.push_back(1 + static_cast<int>(rng() % 2));
      roots.push_back(random_root(rng, 4));
    }
    SumSpec s = euler_spec(kind, exps, roots, 1 + static_cast<int>(rng() % 3), random_root(rng, 4));
    try {
      s.validate();
    } catch (const Error&) {
      continue;
    }
    ++done;
    CAPTURE(s.str());
    auto a = euler_sum_detailed(s, ctx);
    auto b = euler_sum_nested(s, ctx);
    CHECK(dist(a.value, b.value) < 1e-25);
  }
}

TEST_CASE("conjugating every root conjugates the sum") {
  auto ctx = ctx_digits(40);
  for (const auto& r : oracle::sums) {
    SumSpec s = spec_of(r);
    CAPTURE(s.str());
    CHECK(dist(evaluate_sum(conjugated(s), ctx).value, evaluate_sum(s, ctx).value.value.conj()) < 1e-30);
  }
}

TEST_CASE("nested oracle converges toward the accelerated values") {
  auto ctx = ctx_digits(30);
  Real p = pi();
  auto r0 = nested_oracle(euler_spec(SumKind::R, {}, {}, 2, root(0, 1)), 10000, ctx);
  CHECK(dist(r0.value, Complex(p * p / 2)) < 1e-3);
  SumSpec m = multiple_spec(SumKind::CMSV, {1, 2}, {minus_one(), minus_one()});
  CVal exact = multiple_value(m, ctx);
  double e2 = dist(nested_oracle(m, 100, ctx).value, exact);
  double e4 = dist(nested_oracle(m, 10000, ctx).value, exact);
  CHECK(e4 < e2);
  CHECK(e4 < 1e-8);
  SumSpec s = euler_spec(SumKind::S, {2}, {minus_one()}, 2, root(0, 1));
  CHECK(dist(nested_oracle(s, 100000, ctx).value, euler_sum(s, ctx)) < 1e-9);
}

TEST_CASE("depth-2 reductions agree with direct multiple values") {
  auto ctx = ctx_digits(40);
  auto one = root(0, 1);
  CHECK(dist(msv_from_R(2, 2, one, one, ctx), multiple_value(multiple_spec(SumKind::CMSV, {2, 2}, {one, one}), ctx)) <
        1e-15);
  CHECK(dist(msv_from_R(1, 2, minus_one(), one, ctx),
             multiple_value(multiple_spec(SumKind::CMSV, {1, 2}, {minus_one(), one}), ctx)) < 1e-15);
  CHECK(dist(mtv_from_Stilde(2, 2, one, one, ctx),
             multiple_value(multiple_spec(SumKind::CMTV, {2, 2}, {one, one}), ctx)) < 1e-15);
  CHECK(dist(mtv_from_Stilde(1, 2, one, minus_one(), ctx),
             multiple_value(multiple_spec(SumKind::CMTV, {1, 2}, {one, minus_one()}), ctx)) < 1e-15);
  int count = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (auto x : roots_up_to_order(4))
        for (auto y : roots_up_to_order(4)) {
          if (q == 1 && y.is_one()) continue;
          if ((x.k() + y.k()) % 3 != 0) continue;  // thin the grid
          ++count;
          CVal a = msv_from_R(p, q, x, y, ctx);
          CVal b = multiple_value(multiple_spec(SumKind::CMSV, {p, q}, {x, y}), ctx);
          CHECK(dist(a, b) <= std::max(1e-25, 10 * (a.err + b.err)));
          CVal c = mtv_from_Stilde(p, q, x, y, ctx);
          CVal d = multiple_value(multiple_spec(SumKind::CMTV, {p, q}, {x, y}), ctx);
          CHECK(dist(c, d) <= std::max(1e-25, 10 * (c.err + d.err)));
        }
  CHECK(count > 20);
}
