#include "fbk/plat.hpp"

#include <cstdlib>

#include "fbk/error.hpp"

namespace fbk {

namespace {

int partner(int endpoint) { return endpoint % 2 == 1 ? endpoint + 1 : endpoint - 1; }

void require_even(int n) {
  if (n % 2 != 0) throw InvalidArgument("plat closure needs an even strand count");
}

}  // namespace

PlatSignature plat_signature(const FramedBraid& b, const PlatOptions& options) {
  const int n = b.strands();
  require_even(n);
  const Permutation p = permutation_of(b.beta());
  const Permutation p_inv = p.inverse();

  // Walk each component: down a strand, across a bottom cap, up a strand,
  // across a top cap.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> direction(static_cast<std::size_t>(n), 0);
  std::vector<PlatComponent> comps;
  for (int start = 1; start <= n; ++start) {
    if (owner[static_cast<std::size_t>(start - 1)] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    PlatComponent comp;
    int top = start;
    do {
      owner[static_cast<std::size_t>(top - 1)] = id;
      direction[static_cast<std::size_t>(top - 1)] = 1;
      comp.strands.push_back(top);
      comp.directions.push_back(Direction::Down);
      const int up_strand = p_inv(partner(p(top)));
      owner[static_cast<std::size_t>(up_strand - 1)] = id;
      direction[static_cast<std::size_t>(up_strand - 1)] = -1;
      comp.strands.push_back(up_strand);
      comp.directions.push_back(Direction::Up);
      top = partner(up_strand);
    } while (top != start);
    comps.push_back(std::move(comp));
  }

  const std::size_t m = comps.size();
  if (!options.reversed.empty()) {
    if (options.reversed.size() != m) throw InvalidArgument("orientation mask size mismatch");
    for (std::size_t c = 0; c < m; ++c) {
      if (!options.reversed[c]) continue;
      for (auto& d : comps[c].directions) d = d == Direction::Down ? Direction::Up : Direction::Down;
      for (int s : comps[c].strands) direction[static_cast<std::size_t>(s - 1)] *= -1;
    }
  }

  std::vector<long long> framing(m, 0);
  LinkingMatrix inter(m, std::vector<long long>(m, 0));
  for (int s = 1; s <= n; ++s) {
    framing[static_cast<std::size_t>(owner[static_cast<std::size_t>(s - 1)])] +=
        b.lambda()[static_cast<std::size_t>(s - 1)];
  }
  for (const auto& x : detail::crossings(b.beta())) {
    const auto l = static_cast<std::size_t>(x.left_strand - 1);
    const auto r = static_cast<std::size_t>(x.right_strand - 1);
    const int sign = direction[l] == direction[r] ? x.sign : -x.sign;
    const auto c1 = static_cast<std::size_t>(owner[l]);
    const auto c2 = static_cast<std::size_t>(owner[r]);
    if (c1 == c2) {
      framing[c1] += sign;
    } else {
      inter[c1][c2] += sign;
      inter[c2][c1] += sign;
    }
  }
  for (auto& row : inter) {
    for (auto& v : row) {
      if (v % 2 != 0) throw InternalError("odd inter-component crossing sum in plat scan");
      v = std::llabs(v / 2);
    }
  }

  PlatSignature sig;
  const auto order = detail::canonical_order(framing, inter, sig.canonical_key);
  sig.abs_linking.assign(m, std::vector<long long>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    PlatComponent c = comps[order[r]];
    c.framing = framing[order[r]];
    sig.components.push_back(std::move(c));
    for (std::size_t k = 0; k < m; ++k) sig.abs_linking[r][k] = inter[order[r]][order[k]];
  }
  return sig;
}

bool plat_signatures_match(const PlatSignature& x, const PlatSignature& y) {
  return x.canonical_key == y.canonical_key;
}

FramedBraid double_coset_move(const FramedBraid& b, const FramedBraid& h1, const FramedBraid& h2) {
  return multiply(multiply(h1, b), h2);
}

namespace {

FramedBraid stabilize(const FramedBraid& b, int sign, bool compensate) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  const int n = b.strands();
  require_even(n);
  BraidWord w = b.spelled().widened(n + 2);
  if (compensate) w.push_back(Letter::tau(n, -sign));
  w.push_back(Letter::sigma(n, sign));
  return normalize(w);
}

}  // namespace

FramedBraid framed_stabilization(const FramedBraid& b, int sign) { return stabilize(b, sign, true); }

FramedBraid classical_stabilization(const FramedBraid& b, int sign) {
  return stabilize(b, sign, false);
}

}  // namespace fbk
