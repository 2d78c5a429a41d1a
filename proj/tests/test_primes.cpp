#include <catch2/catch_amalgamated.hpp>

#include "permkit/primes.hpp"
#include "oracles.hpp"

using namespace permkit;

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));                    // Carmichael: 3 * 11 * 17
  CHECK_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to every base <= 23
  CHECK(is_prime((1ULL << 61) - 1));             // Mersenne prime
  CHECK_FALSE(is_prime((1ULL << 31) - 1 + 2));   // 2^31+1 = 3 * 715827883
  CHECK(is_prime(18446744073709551557ULL));      // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
  // Compare against a sieve (itself cross-checked by trial division on a
  // sparse subsample).
  const auto table = PrimeTable::up_to(1'000'000);
  std::vector<char> sieve_prime(1'000'001, 0);
  for (std::int64_t p : table.primes()) sieve_prime[p] = 1;
  for (std::int64_t v = 0; v <= 1'000'000; ++v) {
    if (is_prime(static_cast<std::uint64_t>(v)) != static_cast<bool>(sieve_prime[v])) {
      CAPTURE(v);
      REQUIRE(false);
    }
  }
  for (std::int64_t v = 0; v <= 1'000'000; v += 997)
    CHECK(oracles::trial_is_prime(v) == static_cast<bool>(sieve_prime[v]));
}

TEST_CASE("prime table") {
  CHECK(PrimeTable::first(1).nth(1) == 2);
  CHECK(PrimeTable::first(11).nth(11) == 31);
  CHECK(PrimeTable::up_to(10).primes() == std::vector<std::int64_t>{2, 3, 5, 7});

  const auto t = PrimeTable::up_to(100);
  CHECK(t.primes().back() == 97);
  CHECK(t.size() == 25);

  CHECK_THROWS_AS(PrimeTable::up_to(1'000, 100), error);
  // first(count) may hold more than count primes; indexing past the table
  // itself is what fails.
  const auto t200 = PrimeTable::first(200);
  CHECK(t200.size() >= 200);
  CHECK(t200.nth(200) == 1223);
  CHECK_THROWS_AS(t200.nth(t200.size() + 1), error);
  CHECK_THROWS_AS(t200.nth(0), error);
}
