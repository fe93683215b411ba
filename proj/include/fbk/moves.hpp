#pragma once

// Braid-level moves on (framed) braids: strand inclusions, L / RL /
// integer-RL moves, M / RM stabilizations, conjugation, the realization of a
// framing conjugation as RL moves, and the framing-transfer solver.
//
// Every move returns a new element; nothing is modified in place.

#include <optional>
#include <string>
#include <vector>

#include "fbk/braid_word.hpp"
#include "fbk/framed.hpp"

namespace fbk {

enum class MoveKind {
  L_over,
  L_under,
  RL_over,
  RL_under,
  IntRL_over,
  IntRL_under,
  M,
  RM,
  Conjugation,
  TauConjugation,
  // Rewriting inside RB_n; the element does not change.
  Isotopy,
};

// Where the new strand of an L-type move enters relative to the cut strand i.
enum class InclusionSide {
  // o_{i+1}(a1) t_i sigma_i o_{i+1}(a2); applied in the right-dragged form.
  Right,
  // o_i(a1) t_{i+1} sigma_i o_i(a2).
  Left,
};

struct MoveDescriptor {
  MoveKind kind = MoveKind::RL_over;
  // Number of unit letters of the spelled word that go into a1.
  std::size_t split = 0;
  // Index of the cut strand for L-type moves; of t_i for TauConjugation.
  int i = 1;
  int sign = 1;
  int k = 0;
  InclusionSide side = InclusionSide::Right;
  // Conjugation only.
  std::optional<FramedBraid> conjugator;
  // Marks a step that undoes the move it describes.
  bool inverse = false;
};

std::string to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(const std::string& s);
bool is_over(MoveKind kind);

BraidWord include_natural(const BraidWord& a, int m);
// New strand inserted at position i (1 <= i <= n+1), passing over (resp.
// under) every other strand. Tau letters of a are carried along.
BraidWord over_inclusion(const BraidWord& a, int i);
BraidWord under_inclusion(const BraidWord& a, int i);

// Removes the strand entering at top position p together with its crossings
// and twists. The result lives on n-1 strands.
BraidWord delete_strand(const BraidWord& a, int p);

// An L-type move word split around the inserted kink, so the move can be
// undone exactly: prefix * suffix is the inclusion of a, and removing the new
// strand from it gives a back.
struct MoveWord {
  BraidWord prefix;
  BraidWord kink;
  BraidWord suffix;
  // Top position of the inserted strand.
  int new_strand = 1;

  BraidWord spelled() const;
};

// Builds the move word from an explicit factorization a = a1 a2. Kinds:
// L_*, RL_*, IntRL_*.
MoveWord move_word(const BraidWord& a1, const BraidWord& a2, const MoveDescriptor& d);
// Same, splitting the unit letters of a at d.split.
MoveWord move_word(const BraidWord& a, const MoveDescriptor& d);
// Inverse move: drop the kink, then the inserted strand.
BraidWord retract_move(const MoveWord& w);

BraidWord apply_L_move(const BraidWord& a, const MoveDescriptor& d);
FramedBraid apply_RL_move(const FramedBraid& a, const MoveDescriptor& d);
FramedBraid apply_integer_RL_move(const FramedBraid& a, const MoveDescriptor& d);
// a -> a t_n^{-sign} sigma_n^{sign} in RB_{n+1}.
FramedBraid apply_RM_move(const FramedBraid& a, int sign);
// a -> a sigma_n^{sign}; changes the framing of one component.
FramedBraid apply_M_move(const FramedBraid& a, int sign);
// g^{-1} a g.
FramedBraid conjugate(const FramedBraid& a, const FramedBraid& g);

// Dispatches on d.kind (everything except TauConjugation and Isotopy).
FramedBraid apply_move(const FramedBraid& a, const MoveDescriptor& d);

struct MoveStep {
  MoveDescriptor move;
  FramedBraid element;
};

// RL moves and isotopies taking a to conjugate(a, t_i^{exponent}). The last
// step's element is that conjugate.
std::vector<MoveStep> tau_conjugation_as_RL_sequence(const FramedBraid& a, int i, int exponent);

// Solves delta_i - r_i == kappa_i - r_{p(i)} for all i. Solvable iff the
// cycle sums of delta and kappa agree on every cycle of p; the returned r is
// zero at the minimal index of each cycle.
std::optional<FramingVector> solve_framing_transfer(const Permutation& p,
                                                    const FramingVector& delta,
                                                    const FramingVector& kappa);

}  // namespace fbk
