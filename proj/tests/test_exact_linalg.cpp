#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "permkit/linalg.hpp"
#include "oracles.hpp"

using namespace permkit;

TEST_CASE("power matrix entries") {
  const auto m3 = power_matrix(3);
  CHECK(m3.at(1, 1) == 1);
  CHECK(m3.at(1, 3) == 1);
  CHECK(m3.at(2, 3) == 4);
  CHECK(m3.at(3, 3) == 9);
  CHECK(power_matrix(1).at(1, 1) == 1);
  CHECK(power_matrix(4).at(4, 4) == 64);
}

TEST_CASE("indicator matrices") {
  const auto sp = indicator_matrix(2, CellCondition::sum_prime);
  CHECK(sp.at(1, 1) == 1);
  CHECK(sp.at(1, 2) == 1);
  CHECK(sp.at(2, 1) == 1);
  CHECK(sp.at(2, 2) == 0);

  CHECK(indicator_matrix(5, CellCondition::sum_power_of_two).ones_count() == 7);
  CHECK(indicator_matrix(1, CellCondition::sum_power_of_two).at(1, 1) == 1);
}

TEST_CASE("power-of-two indicator ones count is 2n - floor(log2 n) - 1") {
  // floor(log2 n) = bit_width(n) - 1, so the expected count is 2n - bit_width(n).
  for (int n = 1; n <= 128; ++n) {
    const Int expected = 2 * Int(n) - std::bit_width(static_cast<unsigned>(n));
    CAPTURE(n);
    CHECK(indicator_matrix(n, CellCondition::sum_power_of_two).ones_count() == expected);
  }
  // Larger sizes: count the qualifying cells directly instead of building
  // a dense exact matrix.
  for (int n = 129; n <= 2048; ++n) {
    std::int64_t ones = 0;
    for (int i = 1; i <= n; ++i)
      for (std::int64_t s = 2; s <= 2 * n; s *= 2) {
        const std::int64_t j = s - i;
        if (j >= 1 && j <= n) ++ones;
      }
    CAPTURE(n);
    REQUIRE(ones == 2 * static_cast<std::int64_t>(n) - std::bit_width(static_cast<unsigned>(n)));
  }
}

TEST_CASE("exact permanent") {
  CHECK(permanent(power_matrix(3)) == 48);
  CHECK(permanent(power_matrix(4)) == 6160);

  ExactMatrix id(3);
  for (int i = 1; i <= 3; ++i) id.set(i, i, 1);
  CHECK(permanent(id) == 1);

  CHECK_THROWS_AS(permanent(power_matrix(25)), error);
}

TEST_CASE("Ryser equals naive expansion on random matrices") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = oracles::random_int_matrix(rng, n);
    CHECK(permanent(m) == oracles::naive_permanent(m));
  }
}

TEST_CASE("threaded permanent is bit-identical to sequential") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 4);
    const auto m = oracles::random_int_matrix(rng, n);
    const Int sequential = permanent(m, kPermanentMaxN, 1);
    CHECK(permanent(m, kPermanentMaxN, 4) == sequential);
    CHECK(permanent(m, kPermanentMaxN, 3) == sequential);
  }
}

TEST_CASE("modular permanent") {
  CHECK(permanent_mod(power_matrix(4), 5) == 0);
  CHECK(permanent_mod(power_matrix(4), 25) == 10);  // 5 * ((5-1)/2)!
  CHECK(permanent_mod(power_matrix(4), 4) == 0);

  CHECK_THROWS_AS(permanent_mod(power_matrix(3), 1), error);
  CHECK_THROWS_AS(permanent_mod(power_matrix(21), 7), error);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const std::uint64_t mod = 2 + rng() % 97;
    const auto m = oracles::random_int_matrix(rng, n);
    Int reduced = permanent(m) % static_cast<std::int64_t>(mod);
    if (reduced < 0) reduced += static_cast<std::int64_t>(mod);
    CHECK(permanent_mod(m, mod) == reduced);
  }
}

TEST_CASE("congruences of the power matrix") {
  for (std::int64_t p : {3, 5, 7, 11, 13})
    CHECK(permanent_mod(power_matrix(static_cast<int>(p) - 1),
                        static_cast<std::uint64_t>(p)) == 0);
  for (int n = 3; n <= 12; ++n)
    CHECK(permanent_mod(power_matrix(n), static_cast<std::uint64_t>(n)) == 0);
}

TEST_CASE("determinant") {
  CHECK(determinant(power_matrix(3)) == 2);
  CHECK(determinant(power_matrix(4)) == 12);

  ExactMatrix ones(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) ones.set(i, j, 1);
  CHECK(determinant(ones) == 0);

  // A matrix that forces a pivot swap.
  ExactMatrix sw(2);
  sw.set(1, 2, 1);
  sw.set(2, 1, 1);
  CHECK(determinant(sw) == -1);
}

TEST_CASE("determinant of the power matrix is the superfactorial") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(determinant(power_matrix(n)) == superfactorial(n - 1));
  }
  // Hence nonzero mod p at sizes p-1 and p.
  for (std::int64_t p : {3, 5, 7, 11}) {
    CHECK(determinant(power_matrix(static_cast<int>(p) - 1)) % p != 0);
    CHECK(determinant(power_matrix(static_cast<int>(p))) % p != 0);
  }
}

TEST_CASE("determinant equals naive expansion on random matrices") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = oracles::random_int_matrix(rng, n);
    CHECK(determinant(m) == oracles::naive_determinant(m));
  }
}

TEST_CASE("permanent and determinant agree mod 2") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto m = oracles::random_int_matrix(rng, n);
    CHECK((permanent(m) - determinant(m)) % 2 == 0);
  }
}
