#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "permkit/doubling_sequence.hpp"
#include "permkit/errors.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

// Builds an involution pi of {1..n} whose position sums k + pi(k) all lie in
// the given doubling sequence. The construction works on a shrinking prefix:
// locate consecutive terms a <= hi < b, write m = b - hi, pair j <-> b - j
// for j = m..hi (sums equal b), and continue on the prefix 1..m-1. When
// m == hi the doubling bound forces a = hi and b = 2*hi, and the prefix is
// finished by pairing j <-> hi - j (sums equal a) with hi fixed. Iterative,
// so large n cannot exhaust the stack.
inline Permutation build_involution(int n, const DoublingSequence& seq) {
  if (n < 1) fail(errc::out_of_range, "degree must be >= 1");
  // Every term consulted is at most 2*hi <= 2n; a custom prefix must cover
  // that range or terms_up_to refuses.
  const std::vector<std::int64_t> terms = seq.terms_up_to(2 * static_cast<std::int64_t>(n));

  std::vector<int> img(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) img[k] = k + 1;

  int hi = n;
  while (hi >= 2) {
    // Largest term <= hi; its successor exists since the next term is
    // at most 2*hi and the sequence reaches past hi.
    auto it = std::upper_bound(terms.begin(), terms.end(), static_cast<std::int64_t>(hi));
    if (it == terms.begin() || it == terms.end())
      fail(errc::invalid_sequence, "sequence does not bracket " + std::to_string(hi));
    const int below = static_cast<int>(*(it - 1));
    const int above = static_cast<int>(*it);
    const int m = above - hi;
    if (m < 1 || m > hi)
      fail(errc::invalid_sequence, "doubling bound violated around " + std::to_string(hi));
    if (m == hi) {
      // Here above == 2*hi and below == hi.
      (void)below;
      img[hi - 1] = hi;
      for (int j = 1; j < hi; ++j) img[j - 1] = hi - j;
      break;
    }
    for (int j = m; j <= hi; ++j) img[j - 1] = above - j;
    hi = m - 1;
  }
  return Permutation::from_one_line(std::move(img));
}

// The unique permutation of {1..n} with every position sum a power of two.
inline Permutation power_of_two_perm(int n) {
  return build_involution(n, DoublingSequence::powers_of_two());
}

// The unique permutation of {1..2n} with every position sum of the form
// 2^a - 1, obtained by interleaving two copies of the power-of-two
// permutation on {1..n}: even positions take odd values 2s(k)-1, odd
// positions take even values 2s(k).
inline Permutation mersenne_perm(int m) {
  if (m < 1) fail(errc::out_of_range, "degree must be >= 1");
  if (m % 2 != 0) fail(errc::odd_degree, "degree must be even, got " + std::to_string(m));
  const int n = m / 2;
  const Permutation s = power_of_two_perm(n);
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int k = 1; k <= n; ++k) {
    img[2 * k - 2] = 2 * s(k);      // position 2k-1
    img[2 * k - 1] = 2 * s(k) - 1;  // position 2k
  }
  return Permutation::from_one_line(std::move(img));
}

}  // namespace permkit
