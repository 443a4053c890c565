#include "cyclo/nested.hpp"

#include <algorithm>
#include <functional>

namespace cyclo {

int Letter::weight() const {
  int w = 0;
  for (const auto& f : factors) w += f.second;
  return w;
}

Letter merge_letters(const Letter& a, const Letter& b) {
  Letter out{a.phase * b.phase, a.factors};
  for (const auto& f : b.factors) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const auto& g) { return g.first == f.first; });
    if (it == out.factors.end()) {
      out.factors.push_back(f);
    } else {
      it->second += f.second;
    }
  }
  return out;
}

namespace {

class LetterEval {
 public:
  LetterEval(const Letter& letter, const PrecisionCtx& ctx) : n_(letter.phase.order()) {
    for (std::int64_t j = 0; j < n_; ++j) powers_.push_back(root_embed(letter.phase.pow(j), ctx));
    for (const auto& [twice_shift, e] : letter.factors) factors_.emplace_back(Real(twice_shift) / 2, e);
  }

  Complex operator()(std::int64_t n) const {
    Real den = 1;
    for (const auto& [shift, e] : factors_) {
      Real b = shift + n;
      if (b == 0) fail(ErrorKind::Domain, "nested sum denominator vanishes");
      den *= boost::multiprecision::pow(b, e);
    }
    return powers_[n % n_] / den;
  }

 private:
  std::int64_t n_;
  std::vector<Complex> powers_;
  std::vector<std::pair<Real, int>> factors_;
};

}  // namespace

SeriesValue nested_sum(const std::vector<Letter>& letters, const PrecisionCtx& ctx) {
  use_precision(ctx);
  SeriesValue out;
  const std::int64_t d = static_cast<std::int64_t>(letters.size());
  if (d == 0) {
    out.value = CVal(Complex(1));
    return out;
  }
  const Letter& last = letters.back();
  if (last.weight() < 1 || (last.phase.is_one() && last.weight() == 1))
    fail(ErrorKind::Divergence, "outermost index of a nested sum must converge");

  std::vector<RootOfUnity> phases;
  for (const auto& l : letters) phases.push_back(l.phase);
  const std::int64_t period = lcm_of_orders(phases);
  const std::int64_t span = accelerated_span(period, ctx);
  const std::int64_t top = d + span + 1;

  std::vector<Complex> U(top + 1, Complex(1));  // U_{d+1} = 1
  std::vector<Complex> g(top + 1);
  double carried_err = 0;
  for (std::int64_t j = d; j >= 1; --j) {
    LetterEval f(letters[j - 1], ctx);
    double fsum = 0;
    for (std::int64_t m = j; m <= top; ++m) {
      Complex fm = f(m);
      fsum += abs_d(fm);
      g[m] = fm * U[m];
    }
    SeriesValue T = accelerated_sum([&](std::int64_t m) { return g[m]; }, j, period, ctx);
    out.terms += T.terms;
    T.value.err += carried_err * fsum;
    carried_err = T.value.err;
    out.value = T.value;
    if (j > 1) {
      U[j - 1] = T.value.value;
      for (std::int64_t m = j; m <= top; ++m) U[m] = U[m - 1] - g[m];
    }
  }
  return out;
}

std::vector<std::vector<Letter>> quasi_shuffle_expand(const std::vector<Letter>& inner,
                                                      const Letter& outer) {
  const int k = static_cast<int>(inner.size());
  std::vector<std::vector<Letter>> out;
  if (k == 0) {
    out.push_back({outer});
    return out;
  }
  // Ordered set partitions as surjections {0..k-1} -> {0..m-1}.
  std::vector<int> block(k, 0);
  std::function<void(int, int)> assign = [&](int i, int m) {
    if (i == k) {
      std::vector<bool> used(m, false);
      for (int b : block) used[b] = true;
      if (std::find(used.begin(), used.end(), false) != used.end()) return;
      std::vector<Letter> chain(m);
      std::vector<bool> started(m, false);
      for (int e = 0; e < k; ++e) {
        int b = block[e];
        chain[b] = started[b] ? merge_letters(chain[b], inner[e]) : inner[e];
        started[b] = true;
      }
      std::vector<Letter> strict = chain;
      strict.push_back(outer);
      out.push_back(std::move(strict));
      std::vector<Letter> tied = chain;
      tied.back() = merge_letters(tied.back(), outer);
      out.push_back(std::move(tied));
      return;
    }
    for (int b = 0; b < m; ++b) {
      block[i] = b;
      assign(i + 1, m);
    }
  };
  for (int m = 1; m <= k; ++m) assign(0, m);
  return out;
}

}  // namespace cyclo
