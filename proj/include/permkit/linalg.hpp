#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/errors.hpp"
#include "permkit/exact_matrix.hpp"

namespace permkit {

inline constexpr int kPermanentMaxN = 24;
inline constexpr int kPermanentModMaxN = 20;

namespace detail {

// Ryser's inclusion-exclusion over column subsets, walked in Gray-code order
// so each step updates every row sum by one column:
//
//   per(A) = sum over nonempty S of (-1)^(n-|S|) * prod_i sum_{j in S} a_ij
//
// Subset counters k in [k_begin, k_end) index the Gray codes k ^ (k >> 1);
// the bit flipped between consecutive codes is the lowest set bit of k.
// Blocks can therefore start anywhere: the row sums for the initial subset
// are built directly, and disjoint blocks accumulate independent exact
// partial sums whose total is order-independent.
inline Int ryser_block(const ExactMatrix& a, std::uint64_t k_begin, std::uint64_t k_end) {
  const int n = a.size();
  std::uint64_t gray = k_begin ^ (k_begin >> 1);
  std::vector<Int> row_sums(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (gray & (std::uint64_t{1} << (j - 1))) row_sums[i - 1] += a.at(i, j);

  Int acc = 0;
  Int prod;
  for (std::uint64_t k = k_begin;;) {
    const int bits = std::popcount(gray);
    if (bits > 0) {
      prod = row_sums[0];
      for (int i = 1; i < n && prod != 0; ++i) prod *= row_sums[i];
      if ((n - bits) % 2 == 0)
        acc += prod;
      else
        acc -= prod;
    }
    if (++k >= k_end) break;
    const int j = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    if (gray & bit)
      for (int i = 1; i <= n; ++i) row_sums[i - 1] += a.at(i, j + 1);
    else
      for (int i = 1; i <= n; ++i) row_sums[i - 1] -= a.at(i, j + 1);
  }
  return acc;
}

}  // namespace detail

// Exact permanent. Exponential-time (Ryser), so the dimension is capped;
// the cap encodes desk-scale runtime, not an algorithmic limit. With
// threads > 1 the subset range is split into contiguous blocks merged in
// block order, which keeps the result bit-identical to a sequential run.
inline Int permanent(const ExactMatrix& a, int max_n = kPermanentMaxN, int threads = 1) {
  const int n = a.size();
  if (n > max_n || n > 30)
    fail(errc::dimension_too_large,
         "permanent limited to n <= " + std::to_string(std::min(max_n, 30)) + ", got " +
             std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << n;
  if (threads <= 1 || total < 1024) return detail::ryser_block(a, 0, total);

  const int workers = threads;
  std::vector<Int> partial(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  const std::uint64_t chunk = total / workers + 1;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
    pool.emplace_back([&a, lo, hi, w, &partial] {
      if (lo < hi) partial[w] = detail::ryser_block(a, lo, hi);
    });
  }
  for (auto& t : pool) t.join();
  Int acc = 0;
  for (const Int& p : partial) acc += p;
  return acc;
}

// Permanent reduced modulo m, computed entirely in machine-word residues.
// Cheaper per subset than the exact version, hence the larger default cap.
inline std::uint64_t permanent_mod(const ExactMatrix& a, std::uint64_t modulus,
                                   int max_n = kPermanentModMaxN) {
  const int n = a.size();
  if (modulus < 2) fail(errc::bad_modulus, "modulus must be >= 2");
  if (modulus > (std::uint64_t{1} << 31)) fail(errc::bad_modulus, "modulus must fit 31 bits");
  if (n > max_n || n > 30)
    fail(errc::dimension_too_large,
         "modular permanent limited to n <= " + std::to_string(std::min(max_n, 30)));

  std::vector<std::uint64_t> reduced(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Int r = a.at(i, j) % static_cast<std::int64_t>(modulus);
      if (r < 0) r += static_cast<std::int64_t>(modulus);
      reduced[(i - 1) * n + (j - 1)] = static_cast<std::uint64_t>(r);
    }

  // Row sums stay below n * modulus < 2^36, well inside uint64.
  std::vector<std::uint64_t> row_sums(static_cast<std::size_t>(n), 0);
  std::uint64_t gray = 0;
  std::uint64_t acc = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0;;) {
    const int bits = std::popcount(gray);
    if (bits > 0) {
      std::uint64_t prod = 1;
      for (int i = 0; i < n && prod != 0; ++i) prod = (prod * (row_sums[i] % modulus)) % modulus;
      if ((n - bits) % 2 == 0)
        acc = (acc + prod) % modulus;
      else
        acc = (acc + modulus - prod) % modulus;
    }
    if (++k >= total) break;
    const int j = std::countr_zero(k);
    gray ^= std::uint64_t{1} << j;
    if (gray & (std::uint64_t{1} << j))
      for (int i = 0; i < n; ++i) row_sums[i] += reduced[i * n + j];
    else
      for (int i = 0; i < n; ++i) row_sums[i] -= reduced[i * n + j];
  }
  return acc;
}

// Exact determinant by Bareiss fraction-free elimination: every division is
// exact, intermediate entries stay minors of the input, O(n^3) big-int ops.
inline Int determinant(const ExactMatrix& a) {
  const int n = a.size();
  std::vector<Int> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = a.at(i + 1, j + 1);

  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r * n + k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap_row * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  return sign > 0 ? m[(n - 1) * n + (n - 1)] : -m[(n - 1) * n + (n - 1)];
}

// 1! * 2! * ... * n!
inline Int superfactorial(int n) {
  Int result = 1, factorial = 1;
  for (int i = 1; i <= n; ++i) {
    factorial *= i;
    result *= factorial;
  }
  return result;
}

}  // namespace permkit
