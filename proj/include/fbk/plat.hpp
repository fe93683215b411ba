#pragma once

// Framed plat closure: caps join top endpoints (2i-1, 2i) and bottom
// endpoints (2i-1, 2i) of a braid on 2n ribbons.
//
// The cap tangles are never built as geometry; they exist only as the
// pairing rule above. Each component is oriented by entering the braid
// downward at its smallest top endpoint.

#include <vector>

#include "fbk/closure.hpp"
#include "fbk/framed.hpp"

namespace fbk {

enum class Direction : int { Down = 1, Up = -1 };

struct PlatComponent {
  // Strands (by top position) in traversal order, with the direction each is
  // traversed in.
  std::vector<int> strands;
  std::vector<Direction> directions;
  long long framing = 0;
};

struct PlatSignature {
  std::vector<PlatComponent> components;
  // |linking number| per component pair.
  LinkingMatrix abs_linking;
  std::vector<long long> canonical_key;

  std::size_t component_count() const { return components.size(); }
};

struct PlatOptions {
  // Component indices (in traversal discovery order) whose orientation is
  // reversed. Framings and |lk| must not depend on this.
  std::vector<bool> reversed;
};

// Throws InvalidArgument on an odd strand count.
PlatSignature plat_signature(const FramedBraid& b, const PlatOptions& options = {});
bool plat_signatures_match(const PlatSignature& x, const PlatSignature& y);

FramedBraid double_coset_move(const FramedBraid& b, const FramedBraid& h1, const FramedBraid& h2);
// b in RB_{2n} -> b t_{2n}^{-sign} sigma_{2n}^{sign} in RB_{2n+2}.
FramedBraid framed_stabilization(const FramedBraid& b, int sign);
// Same without the compensating twist.
FramedBraid classical_stabilization(const FramedBraid& b, int sign);

}  // namespace fbk
