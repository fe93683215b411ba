#include <doctest.h>

#include <random>

#include "fbk/braid_word.hpp"
#include "fbk/error.hpp"
#include "helpers.hpp"

using namespace fbk;
using fbk::test::w;

TEST_CASE("concat merges runs and cancels") {
  CHECK(concat(w(2, "s1"), w(2, "s1^-1")).empty());
  CHECK(concat(w(3, "s1 s2"), w(3, "s2")) == w(3, "s1 s2^2"));
  CHECK(concat(w(1, "t1"), w(1, "t1^2")) == w(1, "t1^3"));
  CHECK_THROWS_AS(concat(w(2, "s1"), w(3, "s1")), StrandMismatch);
}

TEST_CASE("invert") {
  CHECK(invert(w(3, "s1 s2")) == w(3, "s2^-1 s1^-1"));
  CHECK(invert(BraidWord(4)).empty());
  CHECK(invert(w(2, "t1 s1^2")) == w(2, "s1^-2 t1^-1"));
}

TEST_CASE("permutation_of") {
  CHECK(permutation_of(w(2, "s1")) == Permutation::transposition(2, 1));
  CHECK(permutation_of(w(2, "s1^-3")) == Permutation::transposition(2, 1));
  CHECK(permutation_of(w(3, "t1^5")).is_identity());
  // s1 s2: strand entering at 1 ends at 3.
  const auto p = permutation_of(w(3, "s1 s2"));
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
  CHECK(p.is_full_cycle());
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(w(2, "t1^-1 s1^-3")) == -4);
  CHECK(exponent_sum(BraidWord(3)) == 0);
  CHECK(exponent_sum(w(3, "s1 s2^-1 t2^2")) == 2);
}

TEST_CASE("push_back validates indices") {
  BraidWord b(3);
  CHECK_THROWS_AS(b.push_back(Letter::sigma(3)), IndexOutOfRange);
  CHECK_THROWS_AS(b.push_back(Letter::sigma(0)), IndexOutOfRange);
  CHECK_THROWS_AS(b.push_back(Letter::tau(4)), IndexOutOfRange);
  CHECK_NOTHROW(b.push_back(Letter::tau(3)));
  b.push_back(Letter::sigma(1, 0));
  CHECK(b == w(3, "t3"));
}

TEST_CASE("unit_letters expands runs") {
  const auto u = unit_letters(w(3, "s1^3 t2^-2"));
  REQUIRE(u.size() == 5);
  CHECK(u[0] == Letter::sigma(1));
  CHECK(u[4] == Letter::tau(2, -1));
  CHECK(w(3, "s1^3 t2^-2").unit_length() == 5);
}

TEST_CASE("permutation cycles start at their minimum") {
  const Permutation p({3, 1, 2, 4});
  const auto c = p.cycles();
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::vector<int>{1, 3, 2});
  CHECK(c[1] == std::vector<int>{4});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("braid_word properties on random words") {
  std::mt19937_64 rng(11);
  auto random_word = [&](int n) {
    BraidWord b(n);
    const int len = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int k = 0; k < len; ++k) {
      const bool tau = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
      const int e = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      if (tau) {
        b.push_back(Letter::tau(std::uniform_int_distribution<int>(1, n)(rng), e));
      } else {
        b.push_back(Letter::sigma(std::uniform_int_distribution<int>(1, n - 1)(rng), e));
      }
    }
    return b;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = random_word(n), b = random_word(n), c = random_word(n);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, BraidWord(n)) == a);
    CHECK(concat(BraidWord(n), a) == a);
    CHECK(permutation_of(concat(a, b)) == compose(permutation_of(b), permutation_of(a)));
    CHECK(exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b));
    CHECK(exponent_sum(invert(a)) == -exponent_sum(a));
    CHECK(invert(invert(a)) == a);
    CHECK(concat(a, invert(a)).empty());
  }
}
