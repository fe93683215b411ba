#include "fbk/framed.hpp"

#include <numeric>

#include "fbk/error.hpp"
#include "fbk/garside.hpp"

namespace fbk {

FramedBraid::FramedBraid(int n) : lambda_(static_cast<std::size_t>(n), 0), beta_(n) {}

FramedBraid::FramedBraid(FramingVector lambda, BraidWord beta)
    : lambda_(std::move(lambda)), beta_(std::move(beta)) {
  if (beta_.has_tau()) throw InvalidArgument("beta must contain only sigma letters");
  if (static_cast<int>(lambda_.size()) != beta_.strands()) {
    throw StrandMismatch(static_cast<int>(lambda_.size()), beta_.strands());
  }
}

BraidWord FramedBraid::spelled() const {
  BraidWord w(strands());
  for (std::size_t j = 0; j < lambda_.size(); ++j) {
    if (lambda_[j] != 0) {
      w.push_back(Letter::tau(static_cast<int>(j + 1), static_cast<int>(lambda_[j])));
    }
  }
  w.append(beta_);
  return w;
}

FramedBraid normalize(const BraidWord& w) {
  const int n = w.strands();
  FramingVector lambda(static_cast<std::size_t>(n), 0);
  BraidWord beta(n);
  // occupant[p-1] = top position of the strand at position p below the
  // sigma letters read so far.
  std::vector<int> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const auto& l : w.letters()) {
    if (l.is_tau()) {
      lambda[static_cast<std::size_t>(occupant[static_cast<std::size_t>(l.index - 1)] - 1)] +=
          l.exponent;
    } else {
      beta.push_back(l);
      // One unit crossing at a time; even runs leave strands in place.
      if (l.exponent % 2 != 0) {
        std::swap(occupant[static_cast<std::size_t>(l.index - 1)],
                  occupant[static_cast<std::size_t>(l.index)]);
      }
    }
  }
  return FramedBraid(std::move(lambda), std::move(beta));
}

FramingVector push_through(const FramingVector& lambda, const BraidWord& beta) {
  const Permutation p = permutation_of(beta);
  if (static_cast<int>(lambda.size()) != p.size()) {
    throw StrandMismatch(static_cast<int>(lambda.size()), p.size());
  }
  FramingVector out(lambda.size(), 0);
  for (int j = 1; j <= p.size(); ++j) {
    out[static_cast<std::size_t>(p(j) - 1)] = lambda[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

FramedBraid multiply(const FramedBraid& a, const FramedBraid& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  // a.beta t^mu = t^{mu'} a.beta where mu'_j = mu_{p(j)}.
  const Permutation p = permutation_of(a.beta());
  FramingVector lambda = a.lambda();
  for (int j = 1; j <= p.size(); ++j) {
    lambda[static_cast<std::size_t>(j - 1)] += b.lambda()[static_cast<std::size_t>(p(j) - 1)];
  }
  return FramedBraid(std::move(lambda), concat(a.beta(), b.beta()));
}

FramedBraid inverse(const FramedBraid& a) { return normalize(invert(a.spelled())); }

bool framed_equal(const FramedBraid& a, const FramedBraid& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  return a.lambda() == b.lambda() && are_equal(a.beta(), b.beta());
}

BraidWord project_pi(const FramedBraid& a) { return a.beta(); }

}  // namespace fbk
