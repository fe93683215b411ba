#include <doctest.h>

#include <random>

#include "fbk/closure.hpp"
#include "fbk/error.hpp"
#include "fbk/fuzz.hpp"
#include "fbk/garside.hpp"
#include "fbk/moves.hpp"
#include "helpers.hpp"

using namespace fbk;
using fbk::test::fb;
using fbk::test::w;

namespace {

MoveDescriptor desc(MoveKind kind, std::size_t split, int i, int sign, int k = 0,
                    InclusionSide side = InclusionSide::Right) {
  MoveDescriptor d;
  d.kind = kind;
  d.split = split;
  d.i = i;
  d.sign = sign;
  d.k = k;
  d.side = side;
  return d;
}

}  // namespace

TEST_CASE("inclusions") {
  CHECK(include_natural(w(2, "s1"), 1) == w(3, "s1"));
  CHECK(include_natural(BraidWord(2), 3).strands() == 5);
  CHECK(include_natural(BraidWord(2), 3).empty());
  CHECK(closure_signature(normalize(include_natural(w(2, "s1"), 1))).component_count() == 2);

  const BraidWord a = w(3, "s1 s2^-1 t2");
  CHECK(are_equal(project_pi(normalize(over_inclusion(a, 4))), project_pi(normalize(include_natural(a, 1)))));
  CHECK(framed_equal(normalize(over_inclusion(a, 1)), normalize(under_inclusion(a, 1))));
  for (int i = 1; i <= 4; ++i) {
    CHECK(is_identity(project_pi(normalize(over_inclusion(BraidWord(3), i)))));
    // The inserted strand is a fixed point and the others keep their order.
    const Permutation p = permutation_of(over_inclusion(w(3, "s1 s2"), i));
    CHECK(p(i) == i);
  }
  CHECK_THROWS_AS(over_inclusion(a, 5), IndexOutOfRange);
}

TEST_CASE("over inclusion passes over, under inclusion passes under") {
  // Deleting the new strand recovers a, and the new strand's crossings
  // with the rest all have one sign convention per kind.
  const BraidWord a = w(3, "s1 s2^-1 s1");
  for (int i = 1; i <= 4; ++i) {
    for (bool over : {true, false}) {
      const BraidWord o = over ? over_inclusion(a, i) : under_inclusion(a, i);
      CHECK(are_equal(delete_strand(o, i), a));
      for (const auto& x : detail::crossings(o)) {
        if (x.left_strand == i) CHECK(x.sign == (over ? -1 : 1));
        if (x.right_strand == i) CHECK(x.sign == (over ? 1 : -1));
      }
    }
  }
}

TEST_CASE("L-move on the empty braid") {
  const BraidWord r = apply_L_move(BraidWord(1), desc(MoveKind::L_over, 0, 1, 1));
  CHECK(r.strands() == 2);
  CHECK(r.unit_length() == 1);
  const auto sig = closure_signature(normalize(r));
  CHECK(sig.component_count() == 1);
  CHECK(sig.components[0].framing == 1);
}

TEST_CASE("RL-move on the identity") {
  const FramedBraid r = apply_RL_move(FramedBraid::identity(1), desc(MoveKind::RL_over, 0, 1, 1));
  CHECK(framed_equal(r, fb(2, "t1^-1 s1")));
  const auto sig = closure_signature(r);
  REQUIRE(sig.component_count() == 1);
  CHECK(sig.components[0].framing == 0);
  CHECK(framed_equal(apply_RM_move(FramedBraid::identity(1), 1), fb(2, "t1^-1 s1")));
}

TEST_CASE("integer RL with k = 0 is the plain L word") {
  const FramedBraid a = fb(3, "t2 s1 s2^-2");
  for (auto side : {InclusionSide::Right, InclusionSide::Left}) {
    const auto d_int = desc(MoveKind::IntRL_over, 2, 2, -1, 0, side);
    const auto d_L = desc(MoveKind::L_over, 2, 2, -1, 0, side);
    CHECK(framed_equal(apply_integer_RL_move(a, d_int), normalize(apply_L_move(a.spelled(), d_L))));
  }
}

TEST_CASE("retract_move undoes L-type moves") {
  const BraidWord a = w(3, "t1 s1 s2^-1 t3^2 s1");
  for (auto kind : {MoveKind::L_over, MoveKind::L_under, MoveKind::RL_over, MoveKind::RL_under,
                    MoveKind::IntRL_over, MoveKind::IntRL_under}) {
    for (auto side : {InclusionSide::Right, InclusionSide::Left}) {
      for (int i = 1; i <= 3; ++i) {
        const auto d = desc(kind, 3, i, i % 2 ? 1 : -1, 1, side);
        const MoveWord mw = move_word(a, d);
        CHECK(framed_equal(normalize(retract_move(mw)), normalize(a)));
      }
    }
  }
}

TEST_CASE("descriptor validation") {
  const BraidWord a = w(2, "s1");
  CHECK_THROWS_AS(move_word(a, desc(MoveKind::RL_over, 0, 3, 1)), IndexOutOfRange);
  CHECK_THROWS_AS(move_word(a, desc(MoveKind::RL_over, 0, 1, 2)), InvalidArgument);
  CHECK_THROWS_AS(move_word(a, desc(MoveKind::RL_over, 5, 1, 1)), InvalidArgument);
  CHECK_THROWS_AS(move_word(a, desc(MoveKind::IntRL_over, 0, 1, 1, 2)), InvalidArgument);
  CHECK_THROWS_AS(move_word(a, desc(MoveKind::RM, 0, 1, 1)), InvalidArgument);
  CHECK_THROWS_AS(apply_RM_move(FramedBraid::identity(2), 0), InvalidArgument);
  MoveDescriptor c = desc(MoveKind::Conjugation, 0, 1, 1);
  CHECK_THROWS_AS(apply_move(FramedBraid::identity(2), c), InvalidArgument);
}

TEST_CASE("move kind names round trip") {
  for (auto k : {MoveKind::L_over, MoveKind::L_under, MoveKind::RL_over, MoveKind::RL_under,
                 MoveKind::IntRL_over, MoveKind::IntRL_under, MoveKind::M, MoveKind::RM,
                 MoveKind::Conjugation, MoveKind::TauConjugation, MoveKind::Isotopy}) {
    CHECK(move_kind_from_string(to_string(k)) == k);
  }
  CHECK_FALSE(move_kind_from_string("bogus").has_value());
}

TEST_CASE("conjugate") {
  const FramedBraid a = fb(2, "t1 s1");
  CHECK(framed_equal(conjugate(a, FramedBraid::identity(2)), a));
  CHECK(framed_equal(conjugate(a, fb(2, "s1")), fb(2, "t2 s1")));
}

TEST_CASE("tau conjugation sequence") {
  const auto trivial = tau_conjugation_as_RL_sequence(FramedBraid::identity(2), 1, 1);
  CHECK(framed_equal(trivial.back().element, FramedBraid::identity(2)));

  const FramedBraid a = fb(2, "t1 s1");
  for (int e : {1, -1}) {
    const auto steps = tau_conjugation_as_RL_sequence(a, 1, e);
    REQUIRE(steps.size() == 3);
    CHECK(framed_equal(steps.back().element, conjugate(a, fb(2, e > 0 ? "t1" : "t1^-1"))));
    for (const auto& s : steps) {
      CHECK(signatures_match(closure_signature(a), closure_signature(s.element)));
    }
  }
  CHECK_THROWS_AS(tau_conjugation_as_RL_sequence(a, 3, 1), IndexOutOfRange);
}

TEST_CASE("framing transfer examples") {
  const auto r0 = solve_framing_transfer(Permutation(3), {1, 2, 3}, {1, 2, 3});
  REQUIRE(r0.has_value());
  CHECK(*r0 == FramingVector{0, 0, 0});

  const Permutation swap = Permutation::transposition(2, 1);
  const auto r = solve_framing_transfer(swap, {2, 0}, {1, 1});
  REQUIRE(r.has_value());
  CHECK(*r == FramingVector{0, -1});
  // Substitution: delta_i - r_i == kappa_i - r_{p(i)}.
  for (int i = 1; i <= 2; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    const auto pk = static_cast<std::size_t>(swap(i) - 1);
    CHECK(FramingVector{2, 0}[k] - (*r)[k] == FramingVector{1, 1}[k] - (*r)[pk]);
  }
  CHECK_FALSE(solve_framing_transfer(swap, {2, 0}, {0, 0}).has_value());
  CHECK_THROWS_AS(solve_framing_transfer(swap, {1}, {1, 1}), StrandMismatch);
}

TEST_CASE("framing transfer agrees with brute force") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> images(static_cast<std::size_t>(m));
    std::iota(images.begin(), images.end(), 1);
    do {
      const Permutation p(images);
      for (int sample = 0; sample < 20; ++sample) {
        FramingVector delta(static_cast<std::size_t>(m)), kappa(static_cast<std::size_t>(m));
        for (auto& v : delta) v = entry(rng);
        for (auto& v : kappa) v = entry(rng);
        bool any = false;
        // Solutions are determined up to a per-cycle constant; a box of
        // radius 3 * m * 6 contains one whenever any exists.
        const int box = 6 * 3 * m;
        FramingVector r(static_cast<std::size_t>(m), -box);
        while (!any) {
          bool ok = true;
          for (int i = 1; i <= m && ok; ++i) {
            const auto k = static_cast<std::size_t>(i - 1);
            ok = delta[k] - r[k] == kappa[k] - r[static_cast<std::size_t>(p(i) - 1)];
          }
          any = ok;
          std::size_t d = 0;
          for (; d < r.size(); ++d) {
            if (++r[d] <= box) break;
            r[d] = -box;
          }
          if (d == r.size()) break;
        }
        const auto solved = solve_framing_transfer(p, delta, kappa);
        CHECK(solved.has_value() == any);
      }
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST_CASE("moves preserve closure signature and exponent sum") {
  Rng rng(99);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const FramedBraid a = random_framed_braid(rng, n, 10);
    const auto len = static_cast<std::size_t>(a.spelled().unit_length());
    const auto split = std::uniform_int_distribution<std::size_t>(0, len)(rng);
    const int i = std::uniform_int_distribution<int>(1, n)(rng);
    const int sign = coin(rng) ? 1 : -1;
    const auto side = coin(rng) ? InclusionSide::Right : InclusionSide::Left;
    const auto base = closure_signature(a);
    const long long es = exponent_sum(a.spelled());

    for (auto kind : {MoveKind::RL_over, MoveKind::RL_under}) {
      const FramedBraid b = apply_RL_move(a, desc(kind, split, i, sign, 0, side));
      CHECK(signatures_match(base, closure_signature(b)));
      CHECK(exponent_sum(b.spelled()) == es);
    }
    for (auto kind : {MoveKind::IntRL_over, MoveKind::IntRL_under}) {
      const int k = std::uniform_int_distribution<int>(-1, 1)(rng);
      const FramedBraid b = apply_integer_RL_move(a, desc(kind, split, i, sign, k, side));
      CHECK(signatures_match(closure_signature(a, FramingConvention::Integer),
                             closure_signature(b, FramingConvention::Integer)));
    }
    const FramedBraid rm = apply_RM_move(a, sign);
    CHECK(signatures_match(base, closure_signature(rm)));
    CHECK(exponent_sum(rm.spelled()) == es);
    const FramedBraid g = random_framed_braid(rng, n, 6);
    const FramedBraid c = conjugate(a, g);
    CHECK(signatures_match(base, closure_signature(c)));
    CHECK(exponent_sum(c.spelled()) == es);

    // Plain M shifts the framing sum by the sign.
    const FramedBraid m = apply_M_move(a, sign);
    CHECK(exponent_sum(m.spelled()) == es + sign);
  }
}
