#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/doubling_sequence.hpp"
#include "permkit/errors.hpp"
#include "permkit/primes.hpp"

namespace permkit {

// Square matrix of exact integers, one-indexed like everything else here.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    if (n < 1) fail(errc::out_of_range, "matrix dimension must be >= 1");
  }

  int size() const { return n_; }

  const Int& at(int i, int j) const { return entries_[idx(i, j)]; }
  void set(int i, int j, Int v) { entries_[idx(i, j)] = std::move(v); }

  bool is_zero_one() const {
    for (const Int& e : entries_)
      if (e != 0 && e != 1) return false;
    return true;
  }

  Int ones_count() const {
    Int c = 0;
    for (const Int& e : entries_)
      if (e == 1) ++c;
    return c;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<Int> entries_;
};

// Entry (i, j) = i^(j-1), exact.
inline ExactMatrix power_matrix(int n) {
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    Int v = 1;
    for (int j = 1; j <= n; ++j) {
      m.set(i, j, v);
      v *= i;
    }
  }
  return m;
}

inline bool is_power_of_two(std::int64_t v) { return v >= 2 && (v & (v - 1)) == 0; }

// 2^a - 1 for some a >= 1, i.e. 1, 3, 7, 15, ...
inline bool is_mersenne_number(std::int64_t v) { return v >= 1 && ((v + 1) & v) == 0; }

// Cell predicates for 0/1 constraint matrices: entry (i, j) is 1 exactly
// when the pair satisfies the condition. The prime-indexed variants read
// p_i, p_j from a shared prime table.
enum class CellCondition {
  sum_prime,                      // i + j prime
  sum_power_of_two,               // i + j = 2^a
  sum_mersenne,                   // i + j = 2^a - 1
  product_plus_one_prime,         // i*j + 1 prime
  product_minus_one_prime,        // i*j - 1 prime
  norm_form_prime,                // i^2 + i*j + j^2 prime
  sum_of_squares_prime,           // i^2 + j^2 prime
  prime_sum_plus_one_prime,       // p_i + p_j + 1 prime
  prime_product_minus_two_prime,  // p_i * p_j - 2 prime
};

inline ExactMatrix indicator_matrix(int n, CellCondition cond) {
  ExactMatrix m(n);
  const bool indexed_by_primes = cond == CellCondition::prime_sum_plus_one_prime ||
                                 cond == CellCondition::prime_product_minus_two_prime;
  std::vector<std::int64_t> p;
  if (indexed_by_primes) p = PrimeTable::first(n).primes();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::int64_t a = i, b = j;
      bool hit = false;
      switch (cond) {
        case CellCondition::sum_prime: hit = is_prime(a + b); break;
        case CellCondition::sum_power_of_two: hit = is_power_of_two(a + b); break;
        case CellCondition::sum_mersenne: hit = is_mersenne_number(a + b); break;
        case CellCondition::product_plus_one_prime: hit = is_prime(a * b + 1); break;
        case CellCondition::product_minus_one_prime:
          hit = a * b >= 2 && is_prime(a * b - 1);
          break;
        case CellCondition::norm_form_prime: hit = is_prime(a * a + a * b + b * b); break;
        case CellCondition::sum_of_squares_prime: hit = is_prime(a * a + b * b); break;
        case CellCondition::prime_sum_plus_one_prime:
          hit = is_prime(p[i - 1] + p[j - 1] + 1);
          break;
        case CellCondition::prime_product_minus_two_prime:
          hit = is_prime(p[i - 1] * p[j - 1] - 2);
          break;
      }
      m.set(i, j, hit ? 1 : 0);
    }
  }
  return m;
}

// Entry (i, j) = 1 iff i + j is a term of the sequence.
inline ExactMatrix indicator_matrix(int n, const DoublingSequence& seq) {
  ExactMatrix m(n);
  const auto terms = seq.terms_up_to(2 * static_cast<std::int64_t>(n));
  std::vector<char> member(2 * static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t t : terms) member[static_cast<std::size_t>(t)] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, member[i + j] ? 1 : 0);
  return m;
}

}  // namespace permkit
