#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "permkit/additive_groups.hpp"
#include "oracles.hpp"

using namespace permkit;

TEST_CASE("cyclic context") {
  CHECK(CyclicContext::of(7).least_prime_factor == 7);
  CHECK(CyclicContext::of(49).least_prime_factor == 7);
  CHECK(CyclicContext::of(35).least_prime_factor == 5);
  CHECK_THROWS_AS(CyclicContext::of(1), error);
}

TEST_CASE("distinct_multiple_order examples") {
  CHECK(distinct_multiple_order({2, 1}) == Permutation::from_one_line({2, 1}));
  // (1, 2): the identity ordering works and is what the search settles on.
  CHECK(distinct_multiple_order({1, 2}) == Permutation::identity(2));

  CHECK_THROWS_AS(distinct_multiple_order({3, 3}), error);
  CHECK_THROWS_AS(distinct_multiple_order({}), error);
}

TEST_CASE("distinct_multiple_order output always validates") {
  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::set<std::int64_t> uniq;
    while (static_cast<int>(uniq.size()) < n)
      uniq.insert(static_cast<std::int64_t>(rng() % 2001) - 1000);
    const std::vector<std::int64_t> a(uniq.begin(), uniq.end());
    const Permutation p = distinct_multiple_order(a);
    std::set<Int> products;
    for (int k = 1; k <= n; ++k) products.insert(Int(k) * a[p(k) - 1]);
    CAPTURE(trial, n);
    REQUIRE(static_cast<int>(products.size()) == n);
  }
}

TEST_CASE("conjecture 4.1 over small cyclic groups") {
  CHECK(verify_conj41_cyclic(7, 4).ok);
  CHECK(verify_conj41_cyclic(11, 3).ok);

  try {
    verify_conj41_cyclic(5, 4);
    FAIL("expected error");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_violated);
  }
}

TEST_CASE("symmetry reduction agrees with full enumeration") {
  for (const auto& [m, n] : std::vector<std::pair<std::int64_t, int>>{
           {7, 4}, {11, 4}, {7, 3}, {11, 3}}) {
    const auto reduced = verify_conj41_cyclic(m, n, true);
    const auto full = verify_conj41_cyclic(m, n, false);
    CAPTURE(m, n);
    CHECK(reduced.ok == full.ok);
    CHECK(reduced.counterexample == full.counterexample);
    CHECK(reduced.orderings_searched <= full.orderings_searched);
  }
}

TEST_CASE("no multiplicative complete mapping exists") {
  for (std::int64_t p : {3, 5, 7}) {
    const auto r = multiplicative_complete_mapping(p);
    CAPTURE(p);
    CHECK(r.empty_confirmed);
    CHECK(r.certificate_residue == (p - 1) / 2);
    CHECK(r.certificate_residue != 0);
  }
  CHECK(multiplicative_complete_mapping(7).certificate_residue == 3);  // 21 mod 6

  CHECK_THROWS_AS(multiplicative_complete_mapping(9), error);
  CHECK_THROWS_AS(multiplicative_complete_mapping(2), error);
  CHECK_THROWS_AS(multiplicative_complete_mapping(17), error);  // over the brute-force cap
}

TEST_CASE("analytic certificate is nonzero for every odd p up to 10^4") {
  for (std::int64_t p = 3; p <= 10'000; p += 2)
    REQUIRE(complete_mapping_certificate(p) != 0);
}

TEST_CASE("triple power orderings") {
  {
    const auto w = triple_power_distinct(7, 1, 2, 3);
    CHECK(w.tau == Permutation::identity(3));
  }
  {
    const auto w = triple_power_distinct(11, 3, 9, 5);
    const std::int64_t va = (w.tau(1) * 3) % 11, vb = (w.tau(2) * 9) % 11,
                       vc = (w.tau(3) * 5) % 11;
    CHECK(va != vb);
    CHECK(va != vc);
    CHECK(vb != vc);
  }
  try {
    triple_power_distinct(4, 2, 1, 3);
    FAIL("expected error");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_violated);  // 2 has additive order 2 mod 4
  }
  CHECK_THROWS_AS(triple_power_distinct(7, 1, 8, 3), error);  // 8 = 1 mod 7: not distinct
}

TEST_CASE("triple power orderings always exist under the hypothesis") {
  std::mt19937_64 rng(1313);
  int checked = 0;
  while (checked < 60) {
    const std::int64_t m = 5 + static_cast<std::int64_t>(rng() % 60);
    const std::int64_t a = static_cast<std::int64_t>(rng() % m);
    const std::int64_t b = static_cast<std::int64_t>(rng() % m);
    const std::int64_t c = static_cast<std::int64_t>(rng() % m);
    if (a == b || a == c || b == c) continue;
    bool hypothesis = true;
    for (std::int64_t x : {a, b, c}) {
      const auto ord = additive_order(x, m);
      hypothesis &= ord != 2 && ord != 3;
    }
    if (!hypothesis) continue;
    ++checked;
    const auto w = triple_power_distinct(m, a, b, c);
    const std::int64_t va = (w.tau(1) * a) % m, vb = (w.tau(2) * b) % m, vc = (w.tau(3) * c) % m;
    CAPTURE(m, a, b, c);
    REQUIRE(va != vb);
    REQUIRE(va != vc);
    REQUIRE(vb != vc);
    REQUIRE((w.sigma(1) * a) % m != (w.sigma(2) * b) % m);
  }
}

TEST_CASE("sumset bound reports") {
  {
    const auto r = sumset_bound_check_rational({1, 2}, 2);
    CHECK(r.set_size == 2);
    CHECK(r.bound == 2);
    CHECK(r.satisfied);
  }
  {
    const auto r = sumset_bound_check_rational({1, 2, 4}, 2);
    CHECK(r.set_size == 6);
    CHECK(r.bound == 5);
    CHECK(r.satisfied);
  }
  {
    // The transcribed bound fails here; the harness reports, it does not
    // assert.
    const auto r = sumset_bound_check_rational({1, 2, 3}, 2);
    CHECK(r.set_size == 4);
    CHECK(r.bound == 5);
    CHECK_FALSE(r.satisfied);
  }
}

TEST_CASE("sumset equality for A = {1..n}") {
  for (int n : {2, 4, 5, 6, 7, 8}) {
    std::vector<Rational> a;
    for (int i = 1; i <= n; ++i) a.emplace_back(i);
    const auto r = sumset_bound_check_rational(a, n);
    CAPTURE(n);
    CHECK(r.set_size == Int(n) * (Int(n) * n - 1) / 6 + 1);
    CHECK(r.satisfied);
  }
}

TEST_CASE("sumset preconditions") {
  // n = 3 requires |A| >= 4.
  CHECK_THROWS_AS(sumset_bound_check_rational({1, 2, 3}, 3), error);
  CHECK_NOTHROW(sumset_bound_check_rational({1, 2, 3, 4}, 3));
  CHECK_THROWS_AS(sumset_bound_check_rational({1, 1, 2}, 2), error);

  CHECK_THROWS_AS(sumset_bound_check_mod(4, {1, 2}, 2), error);   // not prime
  CHECK_THROWS_AS(sumset_bound_check_mod(3, {1, 2}, 2), error);   // p <= n+1
  const auto r = sumset_bound_check_mod(13, {1, 2, 5}, 2);
  CHECK(r.modular);
  CHECK(r.set_size == 6);
}

TEST_CASE("modular sumset bound folds in the field size") {
  // All of Z/7Z as A with n = 2: at most 7 values exist, so the bound
  // saturates at p.
  std::vector<std::int64_t> all = {0, 1, 2, 3, 4, 5, 6};
  const auto r = sumset_bound_check_mod(7, all, 2);
  CHECK(r.bound == 7);
  CHECK(r.set_size <= 7);
}
