#pragma once

// Words in the Artin generators sigma_i and the framing generators t_j.
//
// A BraidWord is stored freely reduced with run-length letters: adjacent
// letters on the same generator are merged and zero runs disappear. It is
// NOT braid-reduced; equality in B_n lives in garside.hpp.
//
// Conventions used throughout the library:
//   * indices are 1-based;
//   * a word is read left to right, i.e. top to bottom of the braid diagram;
//   * strands are oriented downward and sigma_i^{+1} is a positive crossing,
//     so crossing signs are the letter signs.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fbk {

enum class Gen : std::uint8_t { Sigma, Tau };

struct Letter {
  Gen gen = Gen::Sigma;
  int index = 1;
  int exponent = 1;

  static constexpr Letter sigma(int i, int e = 1) { return {Gen::Sigma, i, e}; }
  static constexpr Letter tau(int j, int e = 1) { return {Gen::Tau, j, e}; }

  bool is_sigma() const { return gen == Gen::Sigma; }
  bool is_tau() const { return gen == Gen::Tau; }
  bool same_generator(const Letter& o) const {
    return gen == o.gen && index == o.index;
  }

  friend bool operator==(const Letter&, const Letter&) = default;
};

class Permutation;

class BraidWord {
 public:
  explicit BraidWord(int n = 1);
  BraidWord(int n, std::span<const Letter> letters);
  BraidWord(int n, std::initializer_list<Letter> letters);

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Number of unit crossings plus unit twists, i.e. sum of |exponent|.
  long long unit_length() const;
  bool has_tau() const;

  // Appends with merging; validates index bounds.
  void push_back(const Letter& l);
  void append(const BraidWord& w);

  // Same letters over a larger strand count (natural inclusion).
  BraidWord widened(int new_n) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
long long exponent_sum(const BraidWord& a);
Permutation permutation_of(const BraidWord& a);

// Expands run-length letters into unit letters (exponent +-1).
std::vector<Letter> unit_letters(const BraidWord& a);

// images[j-1] = bottom position reached by the strand entering the top at
// position j. Values are 1-based.
class Permutation {
 public:
  explicit Permutation(int n = 1);
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_full_cycle() const;

  // Cycles in canonical form: each cycle starts at its minimal element and
  // cycles are sorted by that element. Fixed points are included.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (outer o inner)(j) = outer(inner(j)): apply inner first.
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace fbk
