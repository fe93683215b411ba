#include "fbk/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fbk/error.hpp"

namespace fbk {

namespace detail {

std::vector<Crossing> crossings(const BraidWord& beta) {
  std::vector<int> occupant(static_cast<std::size_t>(beta.strands()));
  std::iota(occupant.begin(), occupant.end(), 1);
  std::vector<Crossing> out;
  for (const auto& l : unit_letters(beta)) {
    if (!l.is_sigma()) continue;
    auto& left = occupant[static_cast<std::size_t>(l.index - 1)];
    auto& right = occupant[static_cast<std::size_t>(l.index)];
    out.push_back({left, right, l.exponent});
    std::swap(left, right);
  }
  return out;
}

std::vector<std::size_t> canonical_order(const std::vector<long long>& framings,
                                         const LinkingMatrix& matrix,
                                         std::vector<long long>& key) {
  const std::size_t m = framings.size();
  // (framing, sorted |off-diagonal row|)
  using Profile = std::pair<long long, std::vector<long long>>;
  std::vector<Profile> profiles(m);
  for (std::size_t c = 0; c < m; ++c) {
    profiles[c].first = framings[c];
    for (std::size_t d = 0; d < m; ++d) {
      if (d != c) profiles[c].second.push_back(std::llabs(matrix[c][d]));
    }
    std::sort(profiles[c].second.begin(), profiles[c].second.end());
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return profiles[a] < profiles[b];
  });

  // Ranges of equal profiles; only orderings within a range are searched.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t k = 0; k < m;) {
    std::size_t e = k + 1;
    while (e < m && profiles[order[e]] == profiles[order[k]]) ++e;
    groups.emplace_back(k, e);
    k = e;
  }

  auto flatten = [&](const std::vector<std::size_t>& ord) {
    std::vector<long long> flat;
    flat.reserve(m * m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) flat.push_back(matrix[ord[r]][ord[c]]);
    }
    return flat;
  };

  std::vector<std::size_t> best = order;
  std::vector<long long> best_flat = flatten(order);
  std::vector<std::size_t> current = order;
  for (auto& [b, e] : groups) std::sort(current.begin() + static_cast<long>(b), current.begin() + static_cast<long>(e));

  // Odometer over the per-group permutations.
  bool any_large = std::any_of(groups.begin(), groups.end(),
                               [](const auto& g) { return g.second - g.first > 1; });
  if (any_large) {
    while (true) {
      auto flat = flatten(current);
      if (flat < best_flat) {
        best_flat = std::move(flat);
        best = current;
      }
      std::size_t g = 0;
      for (; g < groups.size(); ++g) {
        auto first = current.begin() + static_cast<long>(groups[g].first);
        auto last = current.begin() + static_cast<long>(groups[g].second);
        if (std::next_permutation(first, last)) break;
      }
      if (g == groups.size()) break;
    }
  }

  key.clear();
  key.push_back(static_cast<long long>(m));
  for (std::size_t k = 0; k < m; ++k) key.push_back(framings[best[k]]);
  key.insert(key.end(), best_flat.begin(), best_flat.end());
  return best;
}

}  // namespace detail

LinkSignature closure_signature(const FramedBraid& a, FramingConvention convention) {
  const int n = a.strands();
  const Permutation p = permutation_of(a.beta());
  const auto cycles = p.cycles();
  const std::size_t m = cycles.size();

  std::vector<std::size_t> owner(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < m; ++c) {
    for (int s : cycles[c]) owner[static_cast<std::size_t>(s - 1)] = c;
  }

  std::vector<long long> framing(m, 0);
  LinkingMatrix inter(m, std::vector<long long>(m, 0));
  for (int s = 1; s <= n; ++s) {
    framing[owner[static_cast<std::size_t>(s - 1)]] += a.lambda()[static_cast<std::size_t>(s - 1)];
  }
  for (const auto& x : detail::crossings(a.beta())) {
    const auto c1 = owner[static_cast<std::size_t>(x.left_strand - 1)];
    const auto c2 = owner[static_cast<std::size_t>(x.right_strand - 1)];
    if (c1 == c2) {
      if (convention == FramingConvention::Blackboard) framing[c1] += x.sign;
    } else {
      inter[c1][c2] += x.sign;
      inter[c2][c1] += x.sign;
    }
  }
  for (std::size_t c1 = 0; c1 < m; ++c1) {
    for (std::size_t c2 = 0; c2 < m; ++c2) {
      if (inter[c1][c2] % 2 != 0) {
        throw InternalError("odd inter-component crossing sum in closure scan");
      }
      inter[c1][c2] /= 2;
    }
  }

  LinkSignature sig;
  const auto order = detail::canonical_order(framing, inter, sig.canonical_key);
  sig.linking.assign(m, std::vector<long long>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    auto strands = cycles[order[r]];
    std::sort(strands.begin(), strands.end());
    sig.components.push_back({std::move(strands), framing[order[r]]});
    for (std::size_t c = 0; c < m; ++c) sig.linking[r][c] = inter[order[r]][order[c]];
  }
  return sig;
}

long long knot_framing(const FramedBraid& a) {
  if (!permutation_of(a.beta()).is_full_cycle()) {
    throw InvalidArgument("closure is not a knot: permutation is not an n-cycle");
  }
  return exponent_sum(a.spelled());
}

bool signatures_match(const LinkSignature& x, const LinkSignature& y) {
  return x.canonical_key == y.canonical_key;
}

}  // namespace fbk
