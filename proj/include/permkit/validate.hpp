#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/errors.hpp"
#include "permkit/exact_matrix.hpp"
#include "permkit/permutation.hpp"
#include "permkit/primes.hpp"

// Independent witness checks. Every search result is re-validated by direct
// recomputation through these functions, which share no state or traversal
// logic with the searches themselves.

namespace permkit {

enum class ParityFilter { any, even, odd };

enum class FractionKind {
  sum_reciprocal,                    // terms 1/(k + pi(k)) over positions k
  adj_product_reciprocal,            // terms 1/(pi(k) * pi(k+1))
  adj_sum_reciprocal,                // terms 1/(pi(k) + pi(k+1))
  adj_difference_reciprocal,         // terms 1/(pi(k) - pi(k+1))
  adj_square_difference_reciprocal,  // terms 1/(pi(k)^2 - pi(k+1)^2)
};

enum class Topology { linear, cyclic };

inline bool cell_witness_ok(const ExactMatrix& allowed, const Permutation& p) {
  if (allowed.size() != p.degree()) return false;
  for (int k = 1; k <= p.degree(); ++k)
    if (allowed.at(k, p(k)) != 1) return false;
  return true;
}

inline bool parity_ok(const Permutation& p, ParityFilter f) {
  if (f == ParityFilter::any) return true;
  return (f == ParityFilter::even) == (p.sign() == 1);
}

inline Rational adjacency_term(FractionKind kind, int a, int b) {
  switch (kind) {
    case FractionKind::adj_product_reciprocal:
      return Rational(1, Int(a) * b);
    case FractionKind::adj_sum_reciprocal:
      return Rational(1, Int(a) + b);
    case FractionKind::adj_difference_reciprocal:
      return Rational(1, Int(a) - b);
    case FractionKind::adj_square_difference_reciprocal:
      return Rational(1, Int(a) * a - Int(b) * b);
    case FractionKind::sum_reciprocal:
      break;
  }
  fail(errc::bad_combination, "position-based kind has no adjacency term");
}

// Exact unit-fraction sum of a full permutation, recomputed from scratch.
inline Rational unit_fraction_sum(FractionKind kind, Topology topo, const Permutation& p) {
  const int n = p.degree();
  Rational s = 0;
  if (kind == FractionKind::sum_reciprocal) {
    for (int k = 1; k <= n; ++k) s += Rational(1, Int(k) + p(k));
    return s;
  }
  for (int k = 1; k < n; ++k) s += adjacency_term(kind, p(k), p(k + 1));
  if (topo == Topology::cyclic) s += adjacency_term(kind, p(n), p(1));
  return s;
}

// Sum of adjacent products pi(k) * pi(k+1), k = 1..n-1.
inline Int adjacent_product_sum(const Permutation& p) {
  Int s = 0;
  for (int k = 1; k < p.degree(); ++k) s += Int(p(k)) * p(k + 1);
  return s;
}

// All n cyclic adjacent sums of the arrangement, in order.
inline std::vector<std::int64_t> cyclic_adjacent_sums(const Permutation& p) {
  const int n = p.degree();
  std::vector<std::int64_t> sums;
  sums.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) sums.push_back(static_cast<std::int64_t>(p(k)) + p(k + 1));
  sums.push_back(static_cast<std::int64_t>(p(n)) + p(1));
  return sums;
}

inline bool prime_circle_ok(const Permutation& p) {
  for (std::int64_t s : cyclic_adjacent_sums(p))
    if (!is_prime(static_cast<std::uint64_t>(s))) return false;
  return true;
}

}  // namespace permkit
