#include <doctest.h>

#include "fbk/error.hpp"
#include "fbk/fuzz.hpp"
#include "fbk/garside.hpp"

using namespace fbk;

namespace {

FuzzConfig single_mode(FuzzMode m, int trials, std::uint64_t seed = 1) {
  FuzzConfig c;
  c.seed = seed;
  c.trials = trials;
  c.move_mix = {{m, 1.0}};
  if (m == FuzzMode::DoubleCoset || m == FuzzMode::Stabilization) c.n_range = {1, 4};
  return c;
}

}  // namespace

TEST_CASE("every positive mode passes") {
  for (auto m : all_fuzz_modes()) {
    if (m == FuzzMode::NegativeControl) continue;
    INFO(to_string(m));
    const auto r = run_fuzz(single_mode(m, 150));
    CHECK(r.failed == 0);
    CHECK(r.passed == 150);
    CHECK_FALSE(r.first_counterexample.has_value());
  }
}

TEST_CASE("negative control drifts by exactly one") {
  const auto r = run_fuzz(single_mode(FuzzMode::NegativeControl, 200));
  CHECK(r.failed == 0);
  int total = 0;
  for (auto [d, c] : r.drift_histogram) {
    CHECK((d == 1 || d == -1));
    total += c;
  }
  CHECK(total == 200);
}

TEST_CASE("reports are deterministic and independent of jobs") {
  FuzzConfig c;
  c.seed = 1234;
  c.trials = 120;
  const std::string one = run_fuzz(c).to_json().dump();
  CHECK(run_fuzz(c).to_json().dump() == one);
  c.jobs = 3;
  CHECK(run_fuzz(c).to_json().dump() == one);
  c.seed = 1235;
  c.jobs = 1;
  CHECK(run_fuzz(c).to_json().dump() != one);
}

TEST_CASE("trial substreams") {
  Rng a = trial_stream(5, 0), b = trial_stream(5, 0), c = trial_stream(5, 1);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(splitmix64(0) != splitmix64(1));
}

TEST_CASE("sampling respects the declared distribution") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const FramedBraid a = random_framed_braid(rng, 4, 8);
    for (auto v : a.lambda()) CHECK((v >= -3 && v <= 3));
    CHECK(a.beta().size() <= 8);
    for (const auto& l : a.beta().letters()) {
      CHECK(l.is_sigma());
      CHECK(l.exponent != 0);
    }
    const FramedBraid h = random_hilden_element(rng, 3, 6);
    CHECK(h.strands() == 6);
  }
}

TEST_CASE("config validation") {
  FuzzConfig c;
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.trials = 1;
  c.n_range = {3, 2};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.n_range = {1, 2};
  c.word_length_range = {-1, 2};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.word_length_range = {0, 2};
  c.move_mix = {{FuzzMode::RL, 0.0}};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.move_mix.clear();
  CHECK_NOTHROW(c.validate());
  CHECK(fuzz_mode_from_string("tau_conj") == FuzzMode::TauConjugation);
  CHECK_FALSE(fuzz_mode_from_string("x").has_value());
}
