#include <doctest.h>

#include "fbk/closure.hpp"
#include "fbk/error.hpp"
#include "fbk/fuzz.hpp"
#include "fbk/moves.hpp"
#include "helpers.hpp"

using namespace fbk;
using fbk::test::fb;

TEST_CASE("closure of the twisted trefoil") {
  const FramedBraid a = fb(2, "t1^-1 s1^-3");
  const auto sig = closure_signature(a);
  REQUIRE(sig.component_count() == 1);
  CHECK(sig.components[0].framing == -4);
  CHECK(sig.components[0].strands == std::vector<int>{1, 2});
  CHECK(knot_framing(a) == -4);
}

TEST_CASE("unlink and Hopf link") {
  for (int n = 1; n <= 6; ++n) {
    const auto sig = closure_signature(FramedBraid::identity(n));
    CHECK(sig.component_count() == static_cast<std::size_t>(n));
    for (const auto& c : sig.components) CHECK(c.framing == 0);
    for (const auto& row : sig.linking) {
      for (auto v : row) CHECK(v == 0);
    }
  }
  const auto hopf = closure_signature(fb(2, "s1^2"));
  REQUIRE(hopf.component_count() == 2);
  CHECK(hopf.components[0].framing == 0);
  CHECK(hopf.components[1].framing == 0);
  CHECK(hopf.linking[0][1] == 1);
  CHECK(hopf.linking[1][0] == 1);
  CHECK(hopf.linking[0][0] == 0);
}

TEST_CASE("knot_framing") {
  CHECK(knot_framing(fb(2, "s1")) == 1);
  CHECK(knot_framing(FramedBraid::identity(1)) == 0);
  CHECK_THROWS_AS(knot_framing(FramedBraid::identity(2)), InvalidArgument);
}

TEST_CASE("signatures_match") {
  CHECK_FALSE(signatures_match(closure_signature(fb(2, "t1^-1 s1^-3")),
                               closure_signature(fb(2, "s1^-3"))));
  CHECK(signatures_match(closure_signature(fb(2, "t1 s1")), closure_signature(fb(2, "t2 s1"))));
  const FramedBraid a = fb(3, "t1^2 s1 s2^-1 s1");
  CHECK(signatures_match(closure_signature(a),
                         closure_signature(conjugate(a, fb(3, "s2 t3 s1^-1")))));
}

TEST_CASE("integer convention ignores curls") {
  const auto sig = closure_signature(fb(2, "t1^-1 s1^-3"), FramingConvention::Integer);
  CHECK(sig.components[0].framing == -1);
}

TEST_CASE("canonical key is relabel invariant") {
  // Same link, components listed in different orders.
  const auto a = closure_signature(fb(3, "t1 s2^2"));
  const auto b = closure_signature(fb(3, "t3 s1^2"));
  CHECK(signatures_match(a, b));
  const auto c = closure_signature(fb(3, "t2 s2^2"));
  CHECK_FALSE(signatures_match(a, c));
}

TEST_CASE("closure invariants on random elements") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const FramedBraid a = random_framed_braid(rng, n, 12);
    const auto sig = closure_signature(a);
    // Partition of 1..n.
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& c : sig.components) {
      for (int s : c.strands) ++seen[static_cast<std::size_t>(s - 1)];
    }
    for (int v : seen) CHECK(v == 1);
    CHECK(sig.component_count() == permutation_of(a.beta()).cycles().size());
    // Sum rule.
    long long total = 0;
    for (std::size_t r = 0; r < sig.component_count(); ++r) {
      total += sig.components[r].framing;
      CHECK(sig.linking[r][r] == 0);
      for (std::size_t c = r + 1; c < sig.component_count(); ++c) {
        CHECK(sig.linking[r][c] == sig.linking[c][r]);
        total += 2 * sig.linking[r][c];
      }
    }
    CHECK(total == exponent_sum(a.spelled()));
    if (sig.component_count() == 1) CHECK(knot_framing(a) == sig.components[0].framing);
    // Presentation relations do not change the closure.
    const FramedBraid b = normalize(concat(concat(BraidWord(n, {Letter::tau(n)}), a.spelled()),
                                           BraidWord(n, {Letter::tau(n, -1)})));
    CHECK(signatures_match(sig, closure_signature(b)));
  }
}

TEST_CASE("canonical_order groups by profile") {
  std::vector<long long> key;
  const LinkingMatrix m{{0, 2, 0}, {2, 0, 1}, {0, 1, 0}};
  const auto order = detail::canonical_order({0, 0, 0}, m, key);
  REQUIRE(order.size() == 3);
  // Component 1 has row {1,2}; it sorts last.
  CHECK(order[2] == 1);
  CHECK(key.front() == 3);
}
