#include "fbk/moves.hpp"

#include <array>
#include <utility>

#include "fbk/error.hpp"

namespace fbk {

namespace {

constexpr std::array<std::pair<MoveKind, const char*>, 11> kKindNames{{
    {MoveKind::L_over, "L_over"},
    {MoveKind::L_under, "L_under"},
    {MoveKind::RL_over, "RL_over"},
    {MoveKind::RL_under, "RL_under"},
    {MoveKind::IntRL_over, "IntRL_over"},
    {MoveKind::IntRL_under, "IntRL_under"},
    {MoveKind::M, "M"},
    {MoveKind::RM, "RM"},
    {MoveKind::Conjugation, "Conjugation"},
    {MoveKind::TauConjugation, "TauConjugation"},
    {MoveKind::Isotopy, "Isotopy"},
}};

bool is_plain_L(MoveKind k) { return k == MoveKind::L_over || k == MoveKind::L_under; }
bool is_RL(MoveKind k) { return k == MoveKind::RL_over || k == MoveKind::RL_under; }
bool is_IntRL(MoveKind k) { return k == MoveKind::IntRL_over || k == MoveKind::IntRL_under; }

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
}

void validate_L_family(int n, std::size_t length, const MoveDescriptor& d) {
  if (!is_plain_L(d.kind) && !is_RL(d.kind) && !is_IntRL(d.kind)) {
    throw InvalidArgument("descriptor kind " + to_string(d.kind) + " is not an L-type move");
  }
  check_sign(d.sign);
  if (d.i < 1 || d.i > n) {
    throw IndexOutOfRange("L-move strand index " + std::to_string(d.i) + " outside 1.." +
                          std::to_string(n));
  }
  if (d.split > length) throw InvalidArgument("split position exceeds word length");
  if (is_IntRL(d.kind) && (d.k < -1 || d.k > 1)) {
    throw InvalidArgument("integer RL-move twist k must lie in {-1, 0, 1}");
  }
}

BraidWord dragging_word(int n_plus_one, int from, int to, int exponent) {
  BraidWord w(n_plus_one);
  if (from <= to) {
    for (int j = from; j <= to; ++j) w.push_back(Letter::sigma(j, exponent));
  } else {
    for (int j = from; j >= to; --j) w.push_back(Letter::sigma(j, exponent));
  }
  return w;
}

BraidWord inclusion(const BraidWord& a, int i, bool over) {
  const int n = a.strands();
  if (i < 1 || i > n + 1) {
    throw IndexOutOfRange("inclusion index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n + 1));
  }
  // Drag the new strand from position i to n+1, include naturally, drag back.
  // Moving right over a neighbour is sigma^{-1}; moving right under is sigma.
  const int right = over ? -1 : 1;
  BraidWord w(n + 1);
  if (i <= n) w.append(dragging_word(n + 1, i, n, right));
  w.append(a.widened(n + 1));
  if (i <= n) w.append(dragging_word(n + 1, n, i, -right));
  return w;
}

std::pair<BraidWord, BraidWord> split_units(const BraidWord& a, std::size_t split) {
  const auto units = unit_letters(a);
  if (split > units.size()) throw InvalidArgument("split position exceeds word length");
  BraidWord a1(a.strands());
  BraidWord a2(a.strands());
  for (std::size_t k = 0; k < units.size(); ++k) (k < split ? a1 : a2).push_back(units[k]);
  return {std::move(a1), std::move(a2)};
}

}  // namespace

std::string to_string(MoveKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (const auto& [k, name] : kKindNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

bool is_over(MoveKind kind) {
  return kind == MoveKind::L_over || kind == MoveKind::RL_over || kind == MoveKind::IntRL_over;
}

BraidWord include_natural(const BraidWord& a, int m) {
  if (m < 0) throw InvalidArgument("inclusion count must be non-negative");
  return a.widened(a.strands() + m);
}

BraidWord over_inclusion(const BraidWord& a, int i) { return inclusion(a, i, true); }
BraidWord under_inclusion(const BraidWord& a, int i) { return inclusion(a, i, false); }

BraidWord delete_strand(const BraidWord& a, int p) {
  const int n = a.strands();
  if (n < 2) throw InvalidArgument("cannot delete the only strand");
  if (p < 1 || p > n) throw IndexOutOfRange("strand " + std::to_string(p) + " out of range");
  int pos = p;  // current position of the deleted strand
  BraidWord out(n - 1);
  for (const auto& l : unit_letters(a)) {
    if (l.is_tau()) {
      if (l.index != pos) out.push_back({Gen::Tau, l.index - (pos < l.index ? 1 : 0), l.exponent});
      continue;
    }
    if (l.index == pos || l.index + 1 == pos) {
      pos = l.index == pos ? pos + 1 : pos - 1;
      continue;
    }
    out.push_back({Gen::Sigma, l.index - (pos < l.index ? 1 : 0), l.exponent});
  }
  return out;
}

BraidWord MoveWord::spelled() const {
  BraidWord w = prefix;
  w.append(kink);
  w.append(suffix);
  return w;
}

MoveWord move_word(const BraidWord& a1, const BraidWord& a2, const MoveDescriptor& d) {
  if (a1.strands() != a2.strands()) throw StrandMismatch(a1.strands(), a2.strands());
  const int n = a1.strands();
  validate_L_family(n, static_cast<std::size_t>(a1.unit_length() + a2.unit_length()),
                    MoveDescriptor{d.kind, 0, d.i, d.sign, d.k, d.side, std::nullopt, false});
  const int i = d.i;
  const bool over = is_over(d.kind);
  const bool twist = is_RL(d.kind);
  const int k = is_IntRL(d.kind) ? d.k : 0;

  MoveWord mw{BraidWord(n + 1), BraidWord(n + 1), BraidWord(n + 1), 1};
  if (d.side == InclusionSide::Right) {
    // sigma_{i+1}^{-1}..sigma_n^{-1} o_{n+1}(a1) sigma_i^{-1}..sigma_{n-1}^{-1}
    //   [t] sigma_n^{+-1} sigma_{n-1}..sigma_i o_{n+1}(a2) sigma_n..sigma_{i+1}
    // for the over move; the under move flips the dragging signs. The twist
    // sits on position n, which carries the cut strand at the kink.
    const int right = over ? -1 : 1;
    mw.new_strand = i + 1;
    mw.prefix.push_back(Letter::tau(i + 1, k));
    if (i + 1 <= n) mw.prefix.append(dragging_word(n + 1, i + 1, n, right));
    mw.prefix.append(a1.widened(n + 1));
    if (i <= n - 1) mw.prefix.append(dragging_word(n + 1, i, n - 1, right));
    if (twist) mw.kink.push_back(Letter::tau(n, -d.sign));
    mw.kink.push_back(Letter::sigma(n, d.sign));
    if (i <= n - 1) mw.suffix.append(dragging_word(n + 1, n - 1, i, -right));
    mw.suffix.append(a2.widened(n + 1));
    if (i + 1 <= n) mw.suffix.append(dragging_word(n + 1, n, i + 1, -right));
    mw.suffix.push_back(Letter::tau(i + 1, -k));
  } else {
    mw.new_strand = i;
    mw.prefix.push_back(Letter::tau(i, k));
    mw.prefix.append(inclusion(a1, i, over));
    if (twist) mw.kink.push_back(Letter::tau(i + 1, -d.sign));
    mw.kink.push_back(Letter::sigma(i, d.sign));
    mw.suffix.append(inclusion(a2, i, over));
    mw.suffix.push_back(Letter::tau(i, -k));
  }
  return mw;
}

MoveWord move_word(const BraidWord& a, const MoveDescriptor& d) {
  validate_L_family(a.strands(), static_cast<std::size_t>(a.unit_length()), d);
  auto [a1, a2] = split_units(a, d.split);
  return move_word(a1, a2, d);
}

BraidWord retract_move(const MoveWord& w) {
  return delete_strand(concat(w.prefix, w.suffix), w.new_strand);
}

BraidWord apply_L_move(const BraidWord& a, const MoveDescriptor& d) {
  if (!is_plain_L(d.kind)) throw InvalidArgument("apply_L_move needs an L_over/L_under descriptor");
  return move_word(a, d).spelled();
}

FramedBraid apply_RL_move(const FramedBraid& a, const MoveDescriptor& d) {
  if (!is_RL(d.kind)) throw InvalidArgument("apply_RL_move needs an RL_over/RL_under descriptor");
  return normalize(move_word(a.spelled(), d).spelled());
}

FramedBraid apply_integer_RL_move(const FramedBraid& a, const MoveDescriptor& d) {
  if (!is_IntRL(d.kind)) {
    throw InvalidArgument("apply_integer_RL_move needs an IntRL_over/IntRL_under descriptor");
  }
  return normalize(move_word(a.spelled(), d).spelled());
}

FramedBraid apply_RM_move(const FramedBraid& a, int sign) {
  check_sign(sign);
  const int n = a.strands();
  BraidWord w = a.spelled().widened(n + 1);
  w.push_back(Letter::tau(n, -sign));
  w.push_back(Letter::sigma(n, sign));
  return normalize(w);
}

FramedBraid apply_M_move(const FramedBraid& a, int sign) {
  check_sign(sign);
  const int n = a.strands();
  BraidWord w = a.spelled().widened(n + 1);
  w.push_back(Letter::sigma(n, sign));
  return normalize(w);
}

FramedBraid conjugate(const FramedBraid& a, const FramedBraid& g) {
  if (a.strands() != g.strands()) throw StrandMismatch(a.strands(), g.strands());
  return multiply(multiply(inverse(g), a), g);
}

FramedBraid apply_move(const FramedBraid& a, const MoveDescriptor& d) {
  switch (d.kind) {
    case MoveKind::L_over:
    case MoveKind::L_under:
      return normalize(apply_L_move(a.spelled(), d));
    case MoveKind::RL_over:
    case MoveKind::RL_under:
      return apply_RL_move(a, d);
    case MoveKind::IntRL_over:
    case MoveKind::IntRL_under:
      return apply_integer_RL_move(a, d);
    case MoveKind::M:
      return apply_M_move(a, d.sign);
    case MoveKind::RM:
      return apply_RM_move(a, d.sign);
    case MoveKind::Conjugation:
      if (!d.conjugator) throw InvalidArgument("conjugation descriptor without conjugator");
      return conjugate(a, *d.conjugator);
    case MoveKind::TauConjugation:
      return tau_conjugation_as_RL_sequence(a, d.i, d.sign).back().element;
    case MoveKind::Isotopy:
      return a;
  }
  throw InvalidArgument("unknown move kind");
}

std::vector<MoveStep> tau_conjugation_as_RL_sequence(const FramedBraid& a, int i, int exponent) {
  const int n = a.strands();
  check_sign(exponent);
  if (i < 1 || i > n) throw IndexOutOfRange("framing index " + std::to_string(i) + " out of range");

  // For t_i^{-1} a t_i the chain is
  //   a -> o_i(a) t_{i+1} sigma_i^{-1} o_i(1)
  //     == t_i^{-1} o_{i+1}(1) t_i sigma_i^{-1} o_{i+1}(a t_i)
  //     -> t_i^{-1} a t_i.
  // The inverse conjugation runs the same chain with under-inclusions.
  const MoveKind kind = exponent > 0 ? MoveKind::RL_over : MoveKind::RL_under;
  const BraidWord word = a.spelled();
  const BraidWord none(n);
  const BraidWord twist_in(n, {Letter::tau(i, -exponent)});
  const BraidWord tail = concat(word, BraidWord(n, {Letter::tau(i, exponent)}));

  std::vector<MoveStep> steps;

  MoveDescriptor out_move{kind, static_cast<std::size_t>(word.unit_length()), i, -exponent, 0,
                          InclusionSide::Left, std::nullopt, false};
  steps.push_back({out_move, normalize(move_word(word, none, out_move).spelled())});

  MoveDescriptor back_move{kind, 1, i, -exponent, 0, InclusionSide::Right, std::nullopt, true};
  const FramedBraid middle = normalize(move_word(twist_in, tail, back_move).spelled());
  MoveDescriptor isotopy{MoveKind::Isotopy, 0, i, exponent, 0, InclusionSide::Right, std::nullopt,
                         false};
  steps.push_back({isotopy, middle});

  steps.push_back({back_move, normalize(concat(twist_in, tail))});
  return steps;
}

std::optional<FramingVector> solve_framing_transfer(const Permutation& p,
                                                    const FramingVector& delta,
                                                    const FramingVector& kappa) {
  const auto m = static_cast<std::size_t>(p.size());
  if (delta.size() != m || kappa.size() != m) {
    throw StrandMismatch(p.size(), static_cast<int>(delta.size() != m ? delta.size() : kappa.size()));
  }
  // r_{p(j)} = r_j + kappa_j - delta_j along each cycle.
  FramingVector r(m, 0);
  for (const auto& cycle : p.cycles()) {
    long long value = 0;
    for (int j : cycle) {
      r[static_cast<std::size_t>(j - 1)] = value;
      value += kappa[static_cast<std::size_t>(j - 1)] - delta[static_cast<std::size_t>(j - 1)];
    }
    if (value != 0) return std::nullopt;
  }
  return r;
}

}  // namespace fbk
