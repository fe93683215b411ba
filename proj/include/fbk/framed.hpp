#pragma once

// The framed braid group RB_n = Z^n x| B_n. Elements are kept in the normal
// form t_1^{lambda_1} ... t_n^{lambda_n} beta with beta a sigma-only word.

#include <vector>

#include "fbk/braid_word.hpp"

namespace fbk {

using FramingVector = std::vector<long long>;

class FramedBraid {
 public:
  explicit FramedBraid(int n = 1);
  // Throws InvalidArgument if beta carries tau letters, StrandMismatch if the
  // sizes disagree.
  FramedBraid(FramingVector lambda, BraidWord beta);

  static FramedBraid identity(int n) { return FramedBraid(n); }

  int strands() const { return beta_.strands(); }
  const FramingVector& lambda() const { return lambda_; }
  const BraidWord& beta() const { return beta_; }

  // The framing prefix followed by beta.
  BraidWord spelled() const;

  // Storage equality (same lambda, same stored word); group equality is
  // framed_equal.
  friend bool operator==(const FramedBraid&, const FramedBraid&) = default;

 private:
  FramingVector lambda_;
  BraidWord beta_;
};

// Pushes every tau letter to the left through sigma_i t_j = t_{s_i(j)} sigma_i.
FramedBraid normalize(const BraidWord& w);
FramedBraid multiply(const FramedBraid& a, const FramedBraid& b);
FramedBraid inverse(const FramedBraid& a);
bool framed_equal(const FramedBraid& a, const FramedBraid& b);
BraidWord project_pi(const FramedBraid& a);

// The framing vector lambda' with t^lambda beta = beta t^{lambda'}, i.e. the
// framing read at the bottom of beta: lambda'_{p(j)} = lambda_j where p is the
// permutation of beta.
FramingVector push_through(const FramingVector& lambda, const BraidWord& beta);

}  // namespace fbk
