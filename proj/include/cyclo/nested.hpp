#pragma once

#include <utility>
#include <vector>

#include "cyclo/numeric.hpp"

namespace cyclo {

// One summation index: z^n / prod (n + shift/2)^exponent.
struct Letter {
  RootOfUnity phase;
  std::vector<std::pair<int, int>> factors;  // (twice the shift, exponent)

  int weight() const;
};

Letter merge_letters(const Letter& a, const Letter& b);

// sum over 1 <= n_1 < n_2 < ... < n_d of prod_j letter_j(n_j).
//
// Evaluated from the outermost index inwards: U_j(m) = sum_{n > m} f_j(n) U_{j+1}(n)
// is obtained as the extrapolated total minus a running partial sum, so every
// series handed to the accelerator has a log-free power tail.
SeriesValue nested_sum(const std::vector<Letter>& letters, const PrecisionCtx& ctx);

// Expands prod_i (sum_{a <= n} inner_i(a)) * outer(n), summed over n >= 1, into
// strictly nested sums (quasi-shuffle). Every coefficient is +1.
std::vector<std::vector<Letter>> quasi_shuffle_expand(const std::vector<Letter>& inner,
                                                      const Letter& outer);

}  // namespace cyclo
