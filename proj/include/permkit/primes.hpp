#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "permkit/errors.hpp"

namespace permkit {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic primality for the full 64-bit range: strong-pseudoprime test
// against the fixed witness set {2,3,5,7,11,13,17,19,23,29,31,37}, which is
// known to be exact below 3.3 * 10^24. No randomness, so every verdict is
// reproducible and usable as an unconditional certificate.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  int s = 0;
  std::uint64_t d = n - 1;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    if (!detail::strong_probable_prime(n, a, d, s)) return false;
  return true;
}

inline constexpr std::int64_t kSieveCap = 100'000'000;

// Sieve-backed table of all primes up to a limit, with O(1) access to the
// k-th prime (one-indexed, matching the usual p_k notation).
class PrimeTable {
 public:
  static PrimeTable up_to(std::int64_t limit, std::int64_t cap = kSieveCap) {
    if (limit > cap)
      fail(errc::cap_exceeded,
           "sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
    PrimeTable t;
    t.limit_ = limit;
    if (limit < 2) return t;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i * i <= limit; ++i) {
      if (composite[i]) continue;
      for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    for (std::int64_t i = 2; i <= limit; ++i)
      if (!composite[i]) t.primes_.push_back(i);
    return t;
  }

  // Table holding at least the first `count` primes.
  static PrimeTable first(int count, std::int64_t cap = kSieveCap) {
    if (count < 1) fail(errc::out_of_range, "prime count must be >= 1");
    // p_n < n(ln n + ln ln n) for n >= 6; small counts use a fixed bound.
    std::int64_t limit = 15;
    if (count >= 6) {
      double nd = static_cast<double>(count);
      double ln = std::log(nd);
      limit = static_cast<std::int64_t>(nd * (ln + std::log(ln))) + 16;
    }
    PrimeTable t = up_to(limit, cap);
    while (static_cast<int>(t.primes_.size()) < count) t = up_to(t.limit_ * 2, cap);
    return t;
  }

  std::int64_t limit() const { return limit_; }
  int size() const { return static_cast<int>(primes_.size()); }

  // k-th prime, one-indexed: nth(1) = 2.
  std::int64_t nth(int k) const {
    if (k < 1 || k > size()) fail(errc::out_of_range, "prime index " + std::to_string(k));
    return primes_[static_cast<std::size_t>(k) - 1];
  }

  const std::vector<std::int64_t>& primes() const { return primes_; }

 private:
  PrimeTable() = default;
  std::int64_t limit_ = 0;
  std::vector<std::int64_t> primes_;
};

}  // namespace permkit
