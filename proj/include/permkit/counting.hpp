#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/errors.hpp"
#include "permkit/exact_matrix.hpp"
#include "permkit/linalg.hpp"

namespace permkit {

inline constexpr int kCountingMaxN = 24;

struct CountReport {
  int n = 0;
  std::string kind;
  Int total;
  std::optional<Int> even;
  std::optional<Int> odd;
};

// Number of permutations hitting only allowed cells, i.e. the permanent of
// the 0/1 matrix. Transfer DP over rows with a bitmask of used columns,
// keyed sparsely: a layer maps each reachable column set to the exact number
// of ways to reach it. Sparse keying matters because the constraint matrices
// here often have only a couple of allowed columns per row, in which case
// the reachable state space is tiny even at n = 24 (a dense table would be
// 2^24 big-int entries).
inline Int count_constrained(const ExactMatrix& allowed, int max_n = kCountingMaxN) {
  const int n = allowed.size();
  if (!allowed.is_zero_one()) fail(errc::not_zero_one, "constraint matrix must be 0/1");
  if (n > max_n || n > 30)
    fail(errc::dimension_too_large,
         "counting limited to n <= " + std::to_string(std::min(max_n, 30)));

  std::vector<std::uint32_t> row_mask(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (allowed.at(i, j) == 1) row_mask[i - 1] |= std::uint32_t{1} << (j - 1);

  std::unordered_map<std::uint32_t, Int> layer;
  layer.emplace(0, 1);
  for (int i = 0; i < n; ++i) {
    std::unordered_map<std::uint32_t, Int> next;
    next.reserve(layer.size() * 2);
    for (const auto& [mask, ways] : layer) {
      std::uint32_t options = row_mask[i] & ~mask;
      while (options) {
        const std::uint32_t bit = options & (~options + 1);
        next[mask | bit] += ways;
        options ^= bit;
      }
    }
    layer = std::move(next);
    if (layer.empty()) return 0;
  }
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  auto it = layer.find(full);
  return it == layer.end() ? Int(0) : it->second;
}

// Even/odd split of the constrained count. The permanent counts all
// qualifying permutations and the determinant counts them with signs, so
// even = (per + det) / 2 and odd = (per - det) / 2; both differences are
// always even for integer matrices.
inline std::pair<Int, Int> count_even_odd(const ExactMatrix& allowed,
                                          int max_n = kCountingMaxN) {
  const Int per = count_constrained(allowed, max_n);
  const Int det = determinant(allowed);
  return {(per + det) / 2, (per - det) / 2};
}

enum class CountKind { fibonacci, power_two, prime_sum, chen_even };

inline std::string count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::fibonacci: return "fib";
    case CountKind::power_two: return "pow2";
    case CountKind::prime_sum: return "prime-sum";
    case CountKind::chen_even: return "chen-even";
  }
  return "?";
}

// The named count sequences, n = 1..n_max:
//   fib        permutations whose position sums are all Fibonacci numbers
//   pow2       ... powers of two (always exactly 1)
//   prime-sum  ... primes
//   chen-even  even permutations with p_k * p_pi(k) - 2 always prime
inline std::vector<CountReport> sequence_counts(CountKind kind, int n_max,
                                                int max_n = kCountingMaxN) {
  if (n_max < 1) fail(errc::out_of_range, "n_max must be >= 1");
  if (n_max > max_n) fail(errc::dimension_too_large, "n_max exceeds counting cap");
  std::vector<CountReport> out;
  for (int n = 1; n <= n_max; ++n) {
    CountReport r;
    r.n = n;
    r.kind = count_kind_name(kind);
    switch (kind) {
      case CountKind::fibonacci:
        r.total = count_constrained(indicator_matrix(n, DoublingSequence::fibonacci_tail()), max_n);
        break;
      case CountKind::power_two:
        r.total = count_constrained(indicator_matrix(n, CellCondition::sum_power_of_two), max_n);
        break;
      case CountKind::prime_sum:
        r.total = count_constrained(indicator_matrix(n, CellCondition::sum_prime), max_n);
        break;
      case CountKind::chen_even: {
        const ExactMatrix m = indicator_matrix(n, CellCondition::prime_product_minus_two_prime);
        auto [even, odd] = count_even_odd(m, max_n);
        r.total = even + odd;
        r.even = even;
        r.odd = odd;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace permkit
