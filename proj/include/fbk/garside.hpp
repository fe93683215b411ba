#pragma once

// Left-greedy Garside normal form in B_n over the classical Garside
// structure: simple elements are positive permutation braids and Delta is
// the half twist.

#include <vector>

#include "fbk/braid_word.hpp"

namespace fbk {

struct GarsideNormalForm {
  int n = 1;
  // Power of the half twist, placed on the left.
  long long inf = 0;
  // Left-weighted simple factors; never the identity or Delta.
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

// Throws FramingLetterPresent if the word contains tau letters.
GarsideNormalForm to_normal_form(const BraidWord& a);

bool are_equal(const BraidWord& a, const BraidWord& b);
bool is_identity(const BraidWord& a);

// Positive word of the permutation braid with the given permutation.
BraidWord simple_word(const Permutation& p);
BraidWord half_twist(int n);
// Delta^inf followed by the factors, as a sigma-only word.
BraidWord spell(const GarsideNormalForm& nf);

namespace garside {

// Indices i with sigma_i a left divisor (starting set) / right divisor
// (finishing set) of the permutation braid p.
std::vector<int> starting_set(const Permutation& p);
std::vector<int> finishing_set(const Permutation& p);
bool is_left_weighted(const Permutation& first, const Permutation& second);

}  // namespace garside

}  // namespace fbk
