#pragma once

// Invariants of the standard closure of a framed braid: component partition,
// per-component framing and the linking matrix.
//
// These are necessary invariants only. Equal signatures never prove that two
// closures are isotopic; tests use them in the sound direction.

#include <vector>

#include "fbk/framed.hpp"

namespace fbk {

enum class FramingConvention {
  // Ribbon twists plus the self-writhe of the core (curls count).
  Blackboard,
  // Ribbon twists only; crossings never change a component's framing.
  Integer,
};

struct LinkComponent {
  // Top positions of the strands forming the component, ascending.
  std::vector<int> strands;
  long long framing = 0;

  friend bool operator==(const LinkComponent&, const LinkComponent&) = default;
};

using LinkingMatrix = std::vector<std::vector<long long>>;

struct LinkSignature {
  std::vector<LinkComponent> components;
  LinkingMatrix linking;
  // Relabel-invariant comparison key.
  std::vector<long long> canonical_key;

  std::size_t component_count() const { return components.size(); }
};

// Components come out sorted in canonical order.
LinkSignature closure_signature(const FramedBraid& a,
                                FramingConvention convention = FramingConvention::Blackboard);

// Requires the closure to be a knot; throws InvalidArgument otherwise.
long long knot_framing(const FramedBraid& a);

bool signatures_match(const LinkSignature& x, const LinkSignature& y);

namespace detail {

struct Crossing {
  // Top positions of the strands at positions i and i+1 when the crossing
  // happens.
  int left_strand = 0;
  int right_strand = 0;
  int sign = 1;
};

// Unit crossings of a sigma word in reading order.
std::vector<Crossing> crossings(const BraidWord& beta);

// Canonical ordering of components for relabel-invariant comparison.
// Components are grouped by (framing, sorted |row| entries); inside those
// groups the ordering minimizing the matrix lexicographically is chosen.
// Returns order[k] = original index of the k-th canonical component and
// fills key with (count, framings, matrix) in that order.
std::vector<std::size_t> canonical_order(const std::vector<long long>& framings,
                                         const LinkingMatrix& matrix,
                                         std::vector<long long>& key);

}  // namespace detail

}  // namespace fbk
