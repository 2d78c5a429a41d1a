#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "permkit/format.hpp"
#include "permkit/permutation.hpp"
#include "oracles.hpp"

using namespace permkit;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a permkit::error");
  return errc::empty_input;
}

}  // namespace

TEST_CASE("from_one_line validates") {
  const auto p = Permutation::from_one_line({1, 3, 2, 9, 8, 7, 6, 5, 4});
  CHECK(p.degree() == 9);
  CHECK(to_cycle_string(p) == "(2,3)(4,9)(5,8)(6,7)");

  CHECK(Permutation::from_one_line({1}) == Permutation::identity(1));

  CHECK(code_of([] { Permutation::from_one_line({1, 1, 3}); }) == errc::duplicate_image);
  CHECK(code_of([] { Permutation::from_one_line({}); }) == errc::empty_input);
  CHECK(code_of([] { Permutation::from_one_line({1, 4}); }) == errc::out_of_range);
  CHECK(code_of([] { Permutation::from_one_line({0, 1}); }) == errc::out_of_range);
}

TEST_CASE("to_cycles canonical form") {
  CHECK(Permutation::from_one_line({1, 6, 5, 4, 3, 2}).to_cycles() ==
        std::vector<Cycle>{{2, 6}, {3, 5}});
  CHECK(Permutation::identity(7).to_cycles().empty());
  CHECK(Permutation::from_one_line({2, 3, 1}).to_cycles() == std::vector<Cycle>{{1, 2, 3}});
}

TEST_CASE("from_cycles") {
  const auto p = Permutation::from_cycles(11, {{1, 3}, {5, 11}, {6, 10}, {7, 9}});
  CHECK(p(1) == 3);
  CHECK(p(5) == 11);
  CHECK(p(4) == 4);

  CHECK(Permutation::from_cycles(3, {}) == Permutation::identity(3));

  CHECK(code_of([] { Permutation::from_cycles(4, {{2, 4}, {2, 3}}); }) ==
        errc::repeated_element);
  CHECK(code_of([] { Permutation::from_cycles(3, {{2, 4}}); }) == errc::out_of_range);

  // Non-canonical cycle order and rotation are accepted.
  CHECK(Permutation::from_cycles(6, {{5, 3}, {6, 2}}) ==
        Permutation::from_one_line({1, 6, 5, 4, 3, 2}));
}

TEST_CASE("sign") {
  CHECK(Permutation::from_one_line({1, 3, 2, 9, 8, 7, 6, 5, 4}).sign() == 1);
  CHECK(Permutation::identity(5).sign() == 1);
  CHECK(Permutation::from_one_line({2, 1}).sign() == -1);
}

TEST_CASE("involution predicate") {
  CHECK(Permutation::from_one_line({1, 6, 5, 4, 3, 2}).is_involution());
  CHECK(Permutation::identity(4).is_involution());
  CHECK_FALSE(Permutation::from_one_line({2, 3, 1}).is_involution());
}

TEST_CASE("compose") {
  const auto p = Permutation::from_one_line({2, 3, 1});
  CHECK(compose(p, p.inverse()) == Permutation::identity(3));
  CHECK(compose(Permutation::from_one_line({2, 1}), Permutation::from_one_line({2, 1})) ==
        Permutation::identity(2));
  CHECK(compose(p, p) == Permutation::from_one_line({3, 1, 2}));
  CHECK(code_of([] {
          compose(Permutation::identity(2), Permutation::identity(3));
        }) == errc::degree_mismatch);
}

TEST_CASE("algebraic properties on random permutations") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Permutation p = oracles::random_permutation(rng, n);
    const Permutation q = oracles::random_permutation(rng, n);

    CHECK(compose(p, p.inverse()) == Permutation::identity(n));
    CHECK(compose(p, q).sign() == p.sign() * q.sign());
    CHECK(Permutation::from_cycles(n, p.to_cycles()) == p);

    bool only_transpositions = true;
    for (const auto& c : p.to_cycles()) only_transpositions &= c.size() == 2;
    CHECK(p.is_involution() == only_transpositions);
  }
}

TEST_CASE("text round-trips") {
  const auto p = Permutation::from_one_line({1, 3, 2});
  CHECK(to_one_line_string(p) == "[1 3 2]");
  CHECK(parse_one_line("[1 3 2]") == p);

  const auto q = Permutation::from_one_line({1, 3, 2, 9, 8, 7, 6, 5, 4});
  CHECK(to_cycle_string(q) == "(2,3)(4,9)(5,8)(6,7)");
  CHECK(parse_cycles(9, "(2,3)(4,9)(5,8)(6,7)") == q);

  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(parse_cycles(3, "()") == Permutation::identity(3));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 15);
    const Permutation r = oracles::random_permutation(rng, n);
    CHECK(parse_one_line(to_one_line_string(r)) == r);
    CHECK(parse_cycles(n, to_cycle_string(r)) == r);
  }
}

TEST_CASE("b-file emission") {
  CHECK(emit_bfile({{1, 1}, {2, 1}}) == "1 1\n2 1\n");
  CHECK_THROWS_AS(emit_bfile({{2, 1}, {1, 1}}), error);
}
