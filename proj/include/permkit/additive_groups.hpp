#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/errors.hpp"
#include "permkit/permutation.hpp"
#include "permkit/primes.hpp"

namespace permkit {

// Z/mZ with its least prime factor, which is also the least order of a
// non-identity element.
struct CyclicContext {
  std::int64_t modulus = 0;
  std::int64_t least_prime_factor = 0;

  static CyclicContext of(std::int64_t m) {
    if (m < 2) fail(errc::out_of_range, "modulus must be >= 2");
    CyclicContext c;
    c.modulus = m;
    c.least_prime_factor = m;
    for (std::int64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        c.least_prime_factor = d;
        break;
      }
    return c;
  }
};

namespace detail {

// Backtracking core shared by the ordering searches: assign positions
// k = n..1 (the larger weights are the more constraining ones) an unused
// element whose weighted value is not yet taken. Values are compared through
// the supplied value functor, which folds in the modulus when there is one.
template <typename ValueFn>
inline bool order_elements(int n, int element_count, ValueFn value, std::vector<int>& assignment) {
  // assignment[k-1] = index of the element placed at weight k, 0-based.
  std::vector<char> used(static_cast<std::size_t>(element_count), 0);
  std::set<Int> taken;
  assignment.assign(static_cast<std::size_t>(n), -1);

  // Iterative backtracking over k = n down to 1.
  std::vector<int> cursor(static_cast<std::size_t>(n) + 1, -1);
  int k = n;
  while (k >= 1 && k <= n) {
    bool advanced = false;
    for (int i = cursor[k] + 1; i < element_count; ++i) {
      if (used[i]) continue;
      Int v = value(k, i);
      if (taken.count(v)) continue;
      cursor[k] = i;
      used[i] = 1;
      taken.insert(std::move(v));
      assignment[k - 1] = i;
      advanced = true;
      break;
    }
    if (advanced) {
      --k;
      if (k >= 1) cursor[k] = -1;
      continue;
    }
    // Exhausted this level; undo the assignment one level up.
    cursor[k] = -1;
    ++k;
    if (k > n) return false;
    const int i = assignment[k - 1];
    used[i] = 0;
    taken.erase(value(k, i));
    assignment[k - 1] = -1;
  }
  return true;
}

}  // namespace detail

// Permutation pi such that the products k * a[pi(k)] are pairwise distinct;
// guaranteed to exist for distinct integers.
inline Permutation distinct_multiple_order(const std::vector<std::int64_t>& a) {
  if (a.empty()) fail(errc::empty_input, "need at least one element");
  const int n = static_cast<int>(a.size());
  {
    std::set<std::int64_t> uniq(a.begin(), a.end());
    if (static_cast<int>(uniq.size()) != n)
      fail(errc::duplicate_input, "elements must be pairwise distinct");
  }
  std::vector<int> assignment;
  const bool ok = detail::order_elements(
      n, n, [&](int k, int i) { return Int(k) * a[i]; }, assignment);
  if (!ok)
    fail(errc::precondition_violated, "no ordering found for distinct integers");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) img[k - 1] = assignment[k - 1] + 1;
  return Permutation::from_one_line(std::move(img));
}

struct Conj41Result {
  bool ok = true;
  std::vector<std::int64_t> counterexample;  // empty when ok
  std::uint64_t subsets_enumerated = 0;
  std::uint64_t orderings_searched = 0;
};

namespace detail {

// Can the n-subset (given as increasing residues) be ordered a_1..a_n with
// the values k * a_k mod m pairwise distinct?
inline bool subset_orderable(std::int64_t m, const std::vector<std::int64_t>& subset) {
  const int n = static_cast<int>(subset.size());
  std::vector<int> assignment;
  return order_elements(
      n, n, [&](int k, int i) { return Int((k * subset[i]) % m); }, assignment);
}

}  // namespace detail

// Exhaustive check over all n-subsets of Z/mZ that each admits an ordering
// with k * a_k pairwise distinct. Requires the group hypothesis
// p(m) > n + 1. With the symmetry reduction on, only the lexicographically
// smallest member of each orbit under unit dilation is searched: dilating a
// subset by a unit u turns the value list (k * a_k) into (u * k * a_k),
// which is distinct iff the original was, so one representative decides the
// whole orbit.
inline Conj41Result verify_conj41_cyclic(std::int64_t m, int n, bool symmetry_reduction = true,
                                         std::uint64_t subset_budget = 500'000'000ULL) {
  const CyclicContext ctx = CyclicContext::of(m);
  if (n < 1) fail(errc::out_of_range, "subset size must be >= 1");
  if (n > 30 || m > 1000) fail(errc::too_large, "desk-scale harness: need n <= 30, m <= 1000");
  if (ctx.least_prime_factor <= n + 1)
    fail(errc::precondition_violated,
         "Z/" + std::to_string(m) + "Z has an element of order " +
             std::to_string(ctx.least_prime_factor) + " <= n+1");
  // C(m, n) within budget?
  {
    Int combos = 1;
    for (int i = 0; i < n; ++i) combos = combos * (m - i) / (i + 1);
    if (combos > subset_budget) fail(errc::too_large, "subset space exceeds budget");
  }

  std::vector<std::int64_t> units;
  for (std::int64_t u = 2; u < m; ++u)
    if (std::gcd(u, m) == 1) units.push_back(u);

  Conj41Result result;
  std::vector<std::int64_t> subset(static_cast<std::size_t>(n));
  std::vector<std::int64_t> dilated(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) subset[i] = i;

  for (;;) {
    ++result.subsets_enumerated;
    bool canonical = true;
    if (symmetry_reduction) {
      for (std::int64_t u : units) {
        for (int i = 0; i < n; ++i) dilated[i] = (u * subset[i]) % m;
        std::sort(dilated.begin(), dilated.end());
        if (dilated < subset) {
          canonical = false;
          break;
        }
      }
    }
    if (canonical) {
      ++result.orderings_searched;
      if (!detail::subset_orderable(m, subset)) {
        result.ok = false;
        result.counterexample = subset;
        return result;
      }
    }
    // Next n-combination of {0..m-1} in lexicographic order.
    int i = n - 1;
    while (i >= 0 && subset[i] == m - n + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }
  return result;
}

struct CompleteMappingReport {
  bool empty_confirmed = false;    // brute force found no qualifying permutation
  std::uint64_t nodes = 0;
  std::int64_t certificate_residue = 0;  // p(p-1)/2 mod (p-1); nonzero rules orderings out
  std::optional<Permutation> unexpected_witness;
};

// The arithmetic obstruction: summing the p-1 pairwise-incongruent values
// k + rho(k) mod p-1 would force p(p-1)/2 = 0 mod p-1, so a nonzero residue
// certifies that no multiplicative complete mapping of Z/pZ exists.
inline std::int64_t complete_mapping_certificate(std::int64_t p) {
  if (p < 3 || p % 2 == 0) fail(errc::not_odd_prime, "need an odd p");
  return (p * (p - 1) / 2) % (p - 1);
}

// Confirms by exhaustive backtracking that no permutation of {1..p-1} makes
// the products k * pi(k) pairwise incongruent mod p, and pairs that with the
// analytic certificate above.
inline CompleteMappingReport multiplicative_complete_mapping(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)) || p % 2 == 0)
    fail(errc::not_odd_prime, std::to_string(p) + " is not an odd prime");
  if (p > 13) fail(errc::too_large, "brute-force half limited to p <= 13");

  CompleteMappingReport report;
  report.certificate_residue = complete_mapping_certificate(p);

  const int n = static_cast<int>(p) - 1;
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<char> value_used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> residue_used(static_cast<std::size_t>(p), 0);

  // Positions k = 1..n; the value set and the residue set must both stay
  // collision-free.
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, int k) -> bool {
    if (k > n) return true;
    for (int v = 1; v <= n; ++v) {
      if (value_used[v]) continue;
      const int r = static_cast<int>((static_cast<std::int64_t>(k) * v) % p);
      if (residue_used[r]) continue;
      ++nodes;
      value_used[v] = 1;
      residue_used[r] = 1;
      img[k - 1] = v;
      if (self(self, k + 1)) return true;
      value_used[v] = 0;
      residue_used[r] = 0;
    }
    return false;
  };
  const bool witness_found = dfs(dfs, 1);
  report.nodes = nodes;
  report.empty_confirmed = !witness_found;
  if (witness_found) report.unexpected_witness = Permutation::from_one_line(img);
  return report;
}

struct TriplePowerWitness {
  Permutation sigma;  // in S_2: sigma(1)*a, sigma(2)*b distinct
  Permutation tau;    // in S_3: tau(1)*a, tau(2)*b, tau(3)*c pairwise distinct
};

// Additive order of x in Z/mZ.
inline std::int64_t additive_order(std::int64_t x, std::int64_t m) {
  const std::int64_t r = ((x % m) + m) % m;
  return m / std::gcd(r, m);
}

inline TriplePowerWitness triple_power_distinct(std::int64_t m, std::int64_t a, std::int64_t b,
                                                std::int64_t c) {
  if (m < 2) fail(errc::out_of_range, "modulus must be >= 2");
  const auto norm = [&](std::int64_t x) { return ((x % m) + m) % m; };
  const std::int64_t na = norm(a), nb = norm(b), nc = norm(c);
  if (na == nb || na == nc || nb == nc)
    fail(errc::not_distinct, "elements must be pairwise distinct mod m");
  for (std::int64_t x : {na, nb, nc}) {
    const std::int64_t ord = additive_order(x, m);
    if (ord == 2 || ord == 3)
      fail(errc::precondition_violated,
           "element " + std::to_string(x) + " has order " + std::to_string(ord));
  }

  std::optional<Permutation> sigma;
  for (const auto& s : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    if (norm(s[0] * na) != norm(s[1] * nb)) {
      sigma = Permutation::from_one_line(s);
      break;
    }
  }
  std::optional<Permutation> tau;
  std::vector<int> t = {1, 2, 3};
  do {
    const std::int64_t va = norm(t[0] * na), vb = norm(t[1] * nb), vc = norm(t[2] * nc);
    if (va != vb && va != vc && vb != vc) {
      tau = Permutation::from_one_line(t);
      break;
    }
  } while (std::next_permutation(t.begin(), t.end()));
  if (!sigma || !tau)
    fail(errc::precondition_violated, "no exponent ordering exists; hypothesis violated");
  return {*sigma, *tau};
}

struct SumsetReport {
  Int set_size = 0;     // |S(A)|
  Int bound = 0;        // min{p, (|A|-n) n(n+1)/2 + n(n^2-1)/6 + 1}
  bool satisfied = false;
  bool modular = false;
  std::int64_t modulus = 0;  // 0 over the rationals
  std::uint64_t tuples_enumerated = 0;
};

namespace detail {

template <typename Elem, typename SumFn>
inline SumsetReport sumset_enumerate(const std::vector<Elem>& a, int n, SumFn weighted_sum,
                                     std::uint64_t budget) {
  const int size = static_cast<int>(a.size());
  // Falling factorial |A| * (|A|-1) * ... * (|A|-n+1) injections.
  Int tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= size - i;
  if (tuples > budget) fail(errc::too_large, "injection space exceeds budget");

  SumsetReport report;
  std::vector<int> pick(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(size), 0);
  std::set<Elem> sums;
  auto dfs = [&](auto&& self, int k) -> void {
    if (k == n) {
      ++report.tuples_enumerated;
      sums.insert(weighted_sum(pick));
      return;
    }
    for (int i = 0; i < size; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      pick[k] = i;
      self(self, k + 1);
      used[i] = 0;
    }
  };
  dfs(dfs, 0);
  report.set_size = static_cast<std::int64_t>(sums.size());
  return report;
}

inline Int sumset_lower_bound(int set_size, int n) {
  const Int nn = n;
  return Int(set_size - n) * nn * (nn + 1) / 2 + nn * (nn * nn - 1) / 6 + 1;
}

}  // namespace detail

// |S(A)| for S(A) = { sum of k*a_k over distinct a_1..a_n from A } over the
// rationals, compared against the conjectured lower bound. Reports both
// numbers; it is the caller's job to interpret them.
inline SumsetReport sumset_bound_check_rational(const std::vector<Rational>& a, int n,
                                                std::uint64_t budget = 50'000'000ULL) {
  if (n < 1) fail(errc::out_of_range, "weight count must be >= 1");
  {
    std::set<Rational> uniq(a.begin(), a.end());
    if (uniq.size() != a.size()) fail(errc::not_distinct, "set elements must be distinct");
  }
  const int min_size = n + (n == 3 ? 1 : 0);
  if (static_cast<int>(a.size()) < min_size)
    fail(errc::precondition_violated,
         "|A| must be at least " + std::to_string(min_size) + " for n = " + std::to_string(n));
  SumsetReport report = detail::sumset_enumerate(
      a, n,
      [&](const std::vector<int>& pick) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += Rational(k + 1) * a[pick[k]];
        return s;
      },
      budget);
  report.bound = detail::sumset_lower_bound(static_cast<int>(a.size()), n);
  report.satisfied = report.set_size >= report.bound;
  return report;
}

// Same harness over the prime field Z/pZ; the bound gains the min with p.
inline SumsetReport sumset_bound_check_mod(std::int64_t p, const std::vector<std::int64_t>& a,
                                           int n, std::uint64_t budget = 50'000'000ULL) {
  if (!is_prime(static_cast<std::uint64_t>(p)))
    fail(errc::precondition_violated, "modulus must be prime");
  if (p <= n + 1)
    fail(errc::precondition_violated, "need p > n + 1");
  if (n < 1) fail(errc::out_of_range, "weight count must be >= 1");
  std::vector<std::int64_t> reduced(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) reduced[i] = ((a[i] % p) + p) % p;
  {
    std::set<std::int64_t> uniq(reduced.begin(), reduced.end());
    if (uniq.size() != reduced.size()) fail(errc::not_distinct, "set elements must be distinct mod p");
  }
  const int min_size = n + (n == 3 ? 1 : 0);
  if (static_cast<int>(reduced.size()) < min_size)
    fail(errc::precondition_violated,
         "|A| must be at least " + std::to_string(min_size) + " for n = " + std::to_string(n));
  SumsetReport report = detail::sumset_enumerate(
      reduced, n,
      [&](const std::vector<int>& pick) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k) s = (s + (k + 1) * reduced[pick[k]]) % p;
        return s;
      },
      budget);
  report.modular = true;
  report.modulus = p;
  const Int combinatorial = detail::sumset_lower_bound(static_cast<int>(reduced.size()), n);
  report.bound = combinatorial < p ? combinatorial : Int(p);
  report.satisfied = report.set_size >= report.bound;
  return report;
}

}  // namespace permkit
