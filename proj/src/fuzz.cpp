#include "fbk/fuzz.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "fbk/closure.hpp"
#include "fbk/error.hpp"
#include "fbk/hilden.hpp"
#include "fbk/moves.hpp"
#include "fbk/plat.hpp"
#include "fbk/word_syntax.hpp"

namespace fbk {

namespace {

const std::array<std::pair<FuzzMode, const char*>, 8> kModeNames{{
    {FuzzMode::RL, "rl"},
    {FuzzMode::IntRL, "int_rl"},
    {FuzzMode::RM, "rm"},
    {FuzzMode::Conjugation, "conjugation"},
    {FuzzMode::TauConjugation, "tau_conj"},
    {FuzzMode::DoubleCoset, "double_coset"},
    {FuzzMode::Stabilization, "stabilization"},
    {FuzzMode::NegativeControl, "negative"},
}};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int random_sign(Rng& rng) { return uniform(rng, 0, 1) ? 1 : -1; }

int nonzero_exponent(Rng& rng) {
  const int e = uniform(rng, 1, 3);
  return random_sign(rng) * e;
}

FuzzMode pick_mode(Rng& rng, const std::map<FuzzMode, double>& mix) {
  std::vector<FuzzMode> modes;
  std::vector<double> weights;
  for (auto [m, w] : mix) {
    modes.push_back(m);
    weights.push_back(w);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return modes[pick(rng)];
}

bool closure_preserved(const FramedBraid& a, const FramedBraid& b, FramingConvention c) {
  return signatures_match(closure_signature(a, c), closure_signature(b, c));
}

// Framing change confined to one component: the framing multisets differ in
// exactly one entry on each side. Returns that difference, else nullopt.
std::optional<long long> single_component_drift(const LinkSignature& before,
                                                const LinkSignature& after) {
  if (before.component_count() != after.component_count()) return std::nullopt;
  std::vector<long long> x, y;
  for (const auto& c : before.components) x.push_back(c.framing);
  for (const auto& c : after.components) y.push_back(c.framing);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<long long> only_x, only_y;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_x));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_y));
  if (only_x.size() != 1 || only_y.size() != 1) return std::nullopt;
  return only_y[0] - only_x[0];
}

MoveDescriptor random_L_descriptor(Rng& rng, const FramedBraid& a, MoveKind over, MoveKind under) {
  MoveDescriptor d;
  d.kind = uniform(rng, 0, 1) ? over : under;
  d.i = uniform(rng, 1, a.strands());
  d.sign = random_sign(rng);
  d.side = uniform(rng, 0, 1) ? InclusionSide::Right : InclusionSide::Left;
  d.split = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.spelled().unit_length())));
  return d;
}

}  // namespace

std::string to_string(FuzzMode mode) {
  for (auto [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

std::optional<FuzzMode> fuzz_mode_from_string(const std::string& s) {
  for (auto [m, name] : kModeNames) {
    if (s == name) return m;
  }
  return std::nullopt;
}

const std::vector<FuzzMode>& all_fuzz_modes() {
  static const std::vector<FuzzMode> modes = [] {
    std::vector<FuzzMode> out;
    for (auto [m, name] : kModeNames) out.push_back(m);
    return out;
  }();
  return modes;
}

std::map<FuzzMode, double> FuzzConfig::default_mix() {
  std::map<FuzzMode, double> mix;
  for (auto m : all_fuzz_modes()) {
    if (m != FuzzMode::NegativeControl) mix[m] = 1.0;
  }
  return mix;
}

void FuzzConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (n_range.lo < 1 || n_range.lo > n_range.hi) throw InvalidArgument("empty strand range");
  if (word_length_range.lo < 0 || word_length_range.lo > word_length_range.hi) {
    throw InvalidArgument("empty word length range");
  }
  if (jobs < 1) throw InvalidArgument("jobs must be >= 1");
  const auto& mix = move_mix.empty() ? default_mix() : move_mix;
  double total = 0;
  for (auto [m, w] : mix) {
    if (w < 0) throw InvalidArgument("negative weight for mode " + to_string(m));
    total += w;
  }
  if (total <= 0) throw InvalidArgument("move mix has no positive weight");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ trial));
}

FramedBraid random_framed_braid(Rng& rng, int n, int length) {
  FramingVector lambda(static_cast<std::size_t>(n));
  for (auto& v : lambda) v = uniform(rng, -3, 3);
  BraidWord beta(n);
  if (n >= 2) {
    for (int k = 0; k < length; ++k) {
      const int i = uniform(rng, 1, n - 1);
      beta.push_back(Letter::sigma(i, nonzero_exponent(rng)));
    }
  }
  return FramedBraid(std::move(lambda), std::move(beta));
}

FramedBraid random_hilden_element(Rng& rng, int n, int length) {
  FramedBraid out = FramedBraid::identity(2 * n);
  for (int k = 0; k < length; ++k) {
    FramedBraid g(2 * n);
    const int pick = uniform(rng, n >= 2 ? 0 : 2, 3);
    if (pick <= 1) {
      const int i = uniform(rng, 1, n - 1);
      g = framed_hilden_generator(pick == 0 ? FramedHildenGen::p : FramedHildenGen::s, i, n);
    } else {
      const int i = uniform(rng, 1, n);
      g = framed_hilden_generator(pick == 2 ? FramedHildenGen::theta : FramedHildenGen::omega, i, n);
    }
    out = multiply(out, uniform(rng, 0, 1) ? g : inverse(g));
  }
  return out;
}

FuzzTrial run_trial(const FuzzConfig& config, std::uint64_t trial) {
  Rng rng = trial_stream(config.seed, trial);
  const auto& mix = config.move_mix.empty() ? FuzzConfig::default_mix() : config.move_mix;
  FuzzTrial t;
  t.trial = trial;
  t.mode = pick_mode(rng, mix);
  const int n = uniform(rng, config.n_range.lo, config.n_range.hi);
  const int length = uniform(rng, config.word_length_range.lo, config.word_length_range.hi);
  t.detail = Json{{"trial", trial}, {"mode", to_string(t.mode)}};

  switch (t.mode) {
    case FuzzMode::RL:
    case FuzzMode::IntRL: {
      const FramedBraid a = random_framed_braid(rng, n, length);
      const bool integer = t.mode == FuzzMode::IntRL;
      MoveDescriptor d = integer ? random_L_descriptor(rng, a, MoveKind::IntRL_over, MoveKind::IntRL_under)
                                 : random_L_descriptor(rng, a, MoveKind::RL_over, MoveKind::RL_under);
      if (integer) d.k = uniform(rng, -1, 1);
      const FramedBraid b = apply_move(a, d);
      t.passed = closure_preserved(
          a, b, integer ? FramingConvention::Integer : FramingConvention::Blackboard);
      t.detail["word"] = print_word(a.spelled());
      t.detail["move"] = to_json(d);
      t.detail["result"] = print_word(b.spelled());
      break;
    }
    case FuzzMode::RM: {
      const FramedBraid a = random_framed_braid(rng, n, length);
      const int sign = random_sign(rng);
      const FramedBraid b = apply_RM_move(a, sign);
      t.passed = closure_preserved(a, b, FramingConvention::Blackboard);
      t.detail["word"] = print_word(a.spelled());
      t.detail["move"] = Json{{"kind", "RM"}, {"sign", sign}};
      t.detail["result"] = print_word(b.spelled());
      break;
    }
    case FuzzMode::Conjugation: {
      const FramedBraid a = random_framed_braid(rng, n, length);
      const FramedBraid g = random_framed_braid(rng, n, uniform(rng, 0, config.word_length_range.hi));
      const FramedBraid b = conjugate(a, g);
      t.passed = closure_preserved(a, b, FramingConvention::Blackboard);
      t.detail["word"] = print_word(a.spelled());
      t.detail["move"] = Json{{"kind", "Conjugation"}, {"conjugator", print_word(g.spelled())}};
      t.detail["result"] = print_word(b.spelled());
      break;
    }
    case FuzzMode::TauConjugation: {
      const FramedBraid a = random_framed_braid(rng, n, length);
      const int i = uniform(rng, 1, n);
      const int exponent = random_sign(rng);
      const auto steps = tau_conjugation_as_RL_sequence(a, i, exponent);
      const auto base = closure_signature(a);
      bool ok = true;
      for (const auto& s : steps) ok = ok && signatures_match(base, closure_signature(s.element));
      const FramedBraid twist = normalize(BraidWord(n, {Letter::tau(i, exponent)}));
      ok = ok && framed_equal(steps.back().element, conjugate(a, twist));
      t.passed = ok;
      t.detail["word"] = print_word(a.spelled());
      t.detail["move"] = Json{{"kind", "TauConjugation"}, {"index", i}, {"exponent", exponent}};
      t.detail["result"] = print_word(steps.back().element.spelled());
      break;
    }
    case FuzzMode::DoubleCoset: {
      const FramedBraid b = random_framed_braid(rng, 2 * n, length);
      const FramedBraid h1 = random_hilden_element(rng, n, uniform(rng, 0, 6));
      const FramedBraid h2 = random_hilden_element(rng, n, uniform(rng, 0, 6));
      const FramedBraid c = double_coset_move(b, h1, h2);
      t.passed = plat_signatures_match(plat_signature(b), plat_signature(c));
      t.detail["word"] = print_word(b.spelled());
      t.detail["move"] = Json{{"kind", "DoubleCoset"},
                              {"h1", print_word(h1.spelled())},
                              {"h2", print_word(h2.spelled())}};
      t.detail["result"] = print_word(c.spelled());
      break;
    }
    case FuzzMode::Stabilization: {
      const FramedBraid b = random_framed_braid(rng, 2 * n, length);
      const int sign = random_sign(rng);
      const FramedBraid c = framed_stabilization(b, sign);
      t.passed = plat_signatures_match(plat_signature(b), plat_signature(c));
      t.detail["word"] = print_word(b.spelled());
      t.detail["move"] = Json{{"kind", "Stabilization"}, {"sign", sign}};
      t.detail["result"] = print_word(c.spelled());
      break;
    }
    case FuzzMode::NegativeControl: {
      const FramedBraid a = random_framed_braid(rng, n, length);
      FramedBraid b(1);
      if (uniform(rng, 0, 1)) {
        const int sign = random_sign(rng);
        b = apply_M_move(a, sign);
        t.detail["move"] = Json{{"kind", "M"}, {"sign", sign}};
      } else {
        const MoveDescriptor d = random_L_descriptor(rng, a, MoveKind::L_over, MoveKind::L_under);
        b = apply_move(a, d);
        t.detail["move"] = to_json(d);
      }
      const auto drift = single_component_drift(closure_signature(a), closure_signature(b));
      t.drift = drift.value_or(0);
      t.passed = drift && (*drift == 1 || *drift == -1);
      t.detail["word"] = print_word(a.spelled());
      t.detail["result"] = print_word(b.spelled());
      t.detail["drift"] = *t.drift;
      break;
    }
  }
  t.detail["passed"] = t.passed;
  return t;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  config.validate();
  const auto count = static_cast<std::size_t>(config.trials);
  std::vector<FuzzTrial> results(count);

  const auto jobs = static_cast<std::size_t>(std::max(1, config.jobs));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) results[k] = run_trial(config, k);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t k = w; k < count; k += jobs) results[k] = run_trial(config, k);
      });
    }
    for (auto& th : workers) th.join();
  }

  FuzzReport report;
  report.config = config;
  for (auto& r : results) {
    auto& [seen, ok] = report.by_mode[r.mode];
    ++seen;
    if (r.passed) {
      ++ok;
      ++report.passed;
    } else {
      ++report.failed;
      if (!report.first_counterexample) report.first_counterexample = r;
    }
    if (r.drift) ++report.drift_histogram[*r.drift];
  }
  return report;
}

Json FuzzReport::to_json() const {
  Json mix = Json::object();
  for (auto [m, w] : config.move_mix.empty() ? FuzzConfig::default_mix() : config.move_mix) {
    mix[to_string(m)] = w;
  }
  Json modes = Json::object();
  for (auto [m, counts] : by_mode) {
    modes[to_string(m)] = Json{{"trials", counts.first}, {"passed", counts.second}};
  }
  Json out{{"seed", config.seed},
           {"trials", config.trials},
           {"n_range", {config.n_range.lo, config.n_range.hi}},
           {"word_length_range", {config.word_length_range.lo, config.word_length_range.hi}},
           {"move_mix", std::move(mix)},
           {"passed", passed},
           {"failed", failed},
           {"by_mode", std::move(modes)}};
  if (!drift_histogram.empty()) {
    Json drift = Json::object();
    for (auto [d, c] : drift_histogram) drift[std::to_string(d)] = c;
    out["framing_drift"] = std::move(drift);
  }
  if (first_counterexample) {
    Json ce = first_counterexample->detail;
    ce["seed"] = config.seed;
    out["first_counterexample"] = std::move(ce);
  } else {
    out["first_counterexample"] = nullptr;
  }
  return out;
}

}  // namespace fbk
