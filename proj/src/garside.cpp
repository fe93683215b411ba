#include "fbk/garside.hpp"

#include <cstdlib>
#include <deque>

#include "fbk/error.hpp"

namespace fbk {

namespace {

using Images = std::vector<int>;

// Simple elements are handled as raw image vectors here; Permutation is only
// materialized at the API boundary.

Images identity_images(int n) {
  Images v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j + 1;
  return v;
}

Images delta_images(int n) {
  Images v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = n - j;
  return v;
}

int at(const Images& p, int j) { return p[static_cast<std::size_t>(j - 1)]; }

// p(i) > p(i+1): the strands entering at i, i+1 cross.
bool starts_with(const Images& p, int i) { return at(p, i) > at(p, i + 1); }

bool ends_with(const Images& p, int i) {
  // The strands leaving at i and i+1 cross iff their top positions are
  // inverted.
  int top_i = 0;
  int top_next = 0;
  for (int j = 1; j <= static_cast<int>(p.size()); ++j) {
    if (at(p, j) == i) top_i = j;
    if (at(p, j) == i + 1) top_next = j;
  }
  return top_i > top_next;
}

// p * sigma_i, i.e. swap bottom positions i and i+1.
void right_multiply(Images& p, int i) {
  for (auto& v : p) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
}

// sigma_i^{-1} * p, i.e. swap top positions i and i+1.
void left_divide(Images& p, int i) {
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Images flip(const Images& p) {
  const int n = static_cast<int>(p.size());
  Images out(p.size());
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = n + 1 - at(p, n + 1 - j);
  return out;
}

bool make_left_weighted(Images& a, Images& b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(b, i) && !ends_with(a, i)) {
        right_multiply(a, i);
        left_divide(b, i);
        moved = changed = true;
      }
    }
  }
  return changed;
}

bool left_weighted(const Images& a, const Images& b) {
  const int n = static_cast<int>(a.size());
  for (int i = 1; i < n; ++i) {
    if (starts_with(b, i) && !ends_with(a, i)) return false;
  }
  return true;
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int n)
      : n_(n), identity_(identity_images(n)), delta_(delta_images(n)) {}

  void push(Images simple) {
    if (simple == identity_) return;
    factors_.push_back(std::move(simple));
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      if (!make_left_weighted(factors_[j - 1], factors_[j])) break;
    }
    settle();
  }

  void add_inf(long long k) { inf_ += k; }

  GarsideNormalForm finish() {
    GarsideNormalForm nf;
    nf.n = n_;
    nf.inf = inf_;
    for (auto& f : factors_) nf.factors.emplace_back(std::move(f));
    factors_.clear();
    return nf;
  }

 private:
  void settle() {
    // The right-to-left sweep leaves a left-weighted sequence; repair passes
    // only run if that ever fails to hold.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      while (!factors_.empty() && factors_.front() == delta_) {
        factors_.pop_front();
        ++inf_;
      }
      while (!factors_.empty() && factors_.back() == identity_) factors_.pop_back();
      for (std::size_t j = 0; j + 1 < factors_.size(); ++j) {
        if (factors_[j] == identity_ || !left_weighted(factors_[j], factors_[j + 1])) {
          make_left_weighted(factors_[j], factors_[j + 1]);
          dirty = true;
        }
      }
      if (dirty) {
        std::erase_if(factors_, [this](const Images& f) { return f == identity_; });
      }
    }
  }

  int n_;
  Images identity_;
  Images delta_;
  long long inf_ = 0;
  std::deque<Images> factors_;
};

}  // namespace

GarsideNormalForm to_normal_form(const BraidWord& a) {
  if (a.has_tau()) throw FramingLetterPresent();
  const int n = a.strands();
  const auto units = unit_letters(a);

  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is moved
  // to the front, conjugating the simples it passes by Delta.
  std::vector<int> negatives_after(units.size() + 1, 0);
  for (std::size_t k = units.size(); k > 0; --k) {
    negatives_after[k - 1] = negatives_after[k] + (units[k - 1].exponent < 0 ? 1 : 0);
  }

  NormalFormBuilder builder(n);
  builder.add_inf(-negatives_after[0]);
  const Images delta = delta_images(n);
  for (std::size_t k = 0; k < units.size(); ++k) {
    const Letter& l = units[k];
    Images simple;
    if (l.exponent > 0) {
      simple = identity_images(n);
      right_multiply(simple, l.index);
    } else {
      // Delta sigma_i^{-1}: the permutation s_i o delta.
      simple = delta;
      right_multiply(simple, l.index);
    }
    if (negatives_after[k + 1] % 2 != 0) simple = flip(simple);
    builder.push(std::move(simple));
  }
  return builder.finish();
}

bool are_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  return to_normal_form(a) == to_normal_form(b);
}

bool is_identity(const BraidWord& a) {
  const auto nf = to_normal_form(a);
  return nf.inf == 0 && nf.factors.empty();
}

BraidWord simple_word(const Permutation& p) {
  Images v = p.images();
  BraidWord w(p.size());
  const int n = p.size();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(v, i)) {
        w.push_back(Letter::sigma(i));
        left_divide(v, i);
        progress = true;
        break;
      }
    }
  }
  return w;
}

BraidWord half_twist(int n) { return simple_word(Permutation(delta_images(n))); }

BraidWord spell(const GarsideNormalForm& nf) {
  BraidWord out(nf.n);
  const BraidWord d = nf.inf >= 0 ? half_twist(nf.n) : invert(half_twist(nf.n));
  for (long long k = 0; k < std::llabs(nf.inf); ++k) out.append(d);
  for (const auto& f : nf.factors) out.append(simple_word(f));
  return out;
}

namespace garside {

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (starts_with(p.images(), i)) out.push_back(i);
  }
  return out;
}

std::vector<int> finishing_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (ends_with(p.images(), i)) out.push_back(i);
  }
  return out;
}

bool is_left_weighted(const Permutation& first, const Permutation& second) {
  return left_weighted(first.images(), second.images());
}

}  // namespace garside

}  // namespace fbk
