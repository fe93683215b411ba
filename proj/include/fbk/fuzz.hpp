#pragma once

// Randomized move-invariance checks. Every trial draws from its own
// substream derived from (seed, trial index), so results do not depend on
// how trials are scheduled across threads.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fbk/framed.hpp"
#include "fbk/report.hpp"

namespace fbk {

enum class FuzzMode {
  RL,
  IntRL,
  RM,
  Conjugation,
  TauConjugation,
  DoubleCoset,
  Stabilization,
  // Plain L or M move without the compensating twist; expected to shift one
  // component's framing by exactly one.
  NegativeControl,
};

std::string to_string(FuzzMode mode);
std::optional<FuzzMode> fuzz_mode_from_string(const std::string& s);
const std::vector<FuzzMode>& all_fuzz_modes();

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct FuzzConfig {
  std::uint64_t seed = 0;
  int trials = 100;
  // Strand count for closure modes, half strand count for plat modes.
  IntRange n_range{1, 5};
  IntRange word_length_range{0, 15};
  std::map<FuzzMode, double> move_mix;
  int jobs = 1;

  // Every mode except the negative control, equally weighted.
  static std::map<FuzzMode, double> default_mix();
  // Throws InvalidArgument on an empty range, trials < 1 or a mix without
  // positive weight.
  void validate() const;
};

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
Rng trial_stream(std::uint64_t seed, std::uint64_t trial);

// lambda uniform in [-3,3]^n, beta of the given number of sigma letters with
// uniform indices and exponents in [-3,3]\{0}.
FramedBraid random_framed_braid(Rng& rng, int n, int length);
// Product of `length` built-in framed Hilden generators (or inverses) on 2n
// strands.
FramedBraid random_hilden_element(Rng& rng, int n, int length);

struct FuzzTrial {
  std::uint64_t trial = 0;
  FuzzMode mode = FuzzMode::RL;
  bool passed = false;
  // Negative control only: framing change on the affected component, 0 when
  // the change was not confined to one component.
  std::optional<long long> drift;
  // Input word, move and outcome; filled for every trial.
  Json detail;
};

FuzzTrial run_trial(const FuzzConfig& config, std::uint64_t trial);

struct FuzzReport {
  FuzzConfig config;
  int passed = 0;
  int failed = 0;
  std::map<FuzzMode, std::pair<int, int>> by_mode;  // (trials, passed)
  std::map<long long, int> drift_histogram;
  std::optional<FuzzTrial> first_counterexample;

  Json to_json() const;
};

FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace fbk
