#include "fbk/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fbk/error.hpp"

namespace fbk {

namespace {

void check_bounds(int n, const Letter& l) {
  const int hi = l.is_sigma() ? n - 1 : n;
  if (l.index < 1 || l.index > hi) {
    throw IndexOutOfRange(std::string(l.is_sigma() ? "sigma" : "tau") +
                          " index " + std::to_string(l.index) +
                          " out of range for " + std::to_string(n) +
                          " strands");
  }
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("strand count must be >= 1");
}

BraidWord::BraidWord(int n, std::span<const Letter> letters) : BraidWord(n) {
  for (const auto& l : letters) push_back(l);
}

BraidWord::BraidWord(int n, std::initializer_list<Letter> letters)
    : BraidWord(n, std::span<const Letter>(letters.begin(), letters.size())) {}

long long BraidWord::unit_length() const {
  long long total = 0;
  for (const auto& l : letters_) total += std::llabs(l.exponent);
  return total;
}

bool BraidWord::has_tau() const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.is_tau(); });
}

void BraidWord::push_back(const Letter& l) {
  if (l.exponent == 0) return;
  check_bounds(n_, l);
  if (!letters_.empty() && letters_.back().same_generator(l)) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

void BraidWord::append(const BraidWord& w) {
  if (w.n_ != n_) throw StrandMismatch(n_, w.n_);
  for (const auto& l : w.letters_) push_back(l);
}

BraidWord BraidWord::widened(int new_n) const {
  if (new_n < n_) throw InvalidArgument("cannot narrow a braid word");
  BraidWord out(new_n);
  out.letters_ = letters_;
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

BraidWord invert(const BraidWord& a) {
  BraidWord out(a.strands());
  const auto& ls = a.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    out.push_back({it->gen, it->index, -it->exponent});
  }
  return out;
}

long long exponent_sum(const BraidWord& a) {
  long long s = 0;
  for (const auto& l : a.letters()) s += l.exponent;
  return s;
}

std::vector<Letter> unit_letters(const BraidWord& a) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(a.unit_length()));
  for (const auto& l : a.letters()) {
    const int step = l.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exponent); ++k) {
      out.push_back({l.gen, l.index, step});
    }
  }
  return out;
}

Permutation permutation_of(const BraidWord& a) {
  const int n = a.strands();
  // occupant[p] = top position of the strand currently at position p+1.
  std::vector<int> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const auto& l : a.letters()) {
    if (l.is_sigma() && (l.exponent % 2 != 0)) {
      std::swap(occupant[static_cast<std::size_t>(l.index - 1)],
                occupant[static_cast<std::size_t>(l.index)]);
    }
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    images[static_cast<std::size_t>(occupant[static_cast<std::size_t>(p - 1)] - 1)] = p;
  }
  return Permutation(std::move(images));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw InvalidArgument("permutation size must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw InvalidArgument("permutation size must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("images do not form a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw IndexOutOfRange("transposition index out of range");
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)],
            p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    inv[static_cast<std::size_t>(images_[j] - 1)] = static_cast<int>(j + 1);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != static_cast<int>(j + 1)) return false;
  }
  return true;
}

bool Permutation::is_full_cycle() const { return cycles().size() == 1; }

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int j = start; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw StrandMismatch(outer.size(), inner.size());
  std::vector<int> images(static_cast<std::size_t>(inner.size()));
  for (int j = 1; j <= inner.size(); ++j) {
    images[static_cast<std::size_t>(j - 1)] = outer(inner(j));
  }
  return Permutation(std::move(images));
}

}  // namespace fbk
