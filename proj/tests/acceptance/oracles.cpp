#include "oracles.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

std::uint64_t pack(const Word& w) {
  std::uint64_t key = w.size();
  for (int x : w) {
    const int code = x == 1 ? 0 : x == -1 ? 1 : x == 2 ? 2 : 3;
    key = (key << 2) | static_cast<std::uint64_t>(code);
  }
  // Length in the top bits keeps words of different lengths apart.
  return key | (static_cast<std::uint64_t>(w.size()) << 56);
}

void enumerate(Word& prefix, int cap, std::vector<Word>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == cap) return;
  for (int x : {1, -1, 2, -2}) {
    if (!prefix.empty() && prefix.back() == -x) continue;
    prefix.push_back(x);
    enumerate(prefix, cap, out);
    prefix.pop_back();
  }
}

// Cyclic rotations of s1 s2 s1 s2^-1 s1^-1 s2^-1 and of its inverse.
std::vector<Word> relator_cycles() {
  const Word r{1, 2, 1, -2, -1, -2};
  Word inv;
  for (auto it = r.rbegin(); it != r.rend(); ++it) inv.push_back(-*it);
  std::vector<Word> out;
  for (const Word* base : std::array<const Word*, 2>{&r, &inv}) {
    for (std::size_t s = 0; s < base->size(); ++s) {
      Word rot;
      for (std::size_t k = 0; k < base->size(); ++k) rot.push_back((*base)[(s + k) % base->size()]);
      out.push_back(rot);
    }
  }
  return out;
}

Laurent add(const Laurent& x, const Laurent& y) {
  Laurent out = x;
  for (auto [e, c] : y) {
    if ((out[e] += c) == 0) out.erase(e);
  }
  return out;
}

Laurent mul(const Laurent& x, const Laurent& y) {
  Laurent out;
  for (auto [e1, c1] : x) {
    for (auto [e2, c2] : y) {
      if ((out[e1 + e2] += c1 * c2) == 0) out.erase(e1 + e2);
    }
  }
  return out;
}

Matrix2 mul(const Matrix2& x, const Matrix2& y) {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Laurent mono(int e, long long c) { return c == 0 ? Laurent{} : Laurent{{e, c}}; }

Matrix2 generator(int x) {
  switch (x) {
    case 1: return {mono(1, -1), mono(0, 1), {}, mono(0, 1)};
    case -1: return {mono(-1, -1), mono(-1, 1), {}, mono(0, 1)};
    case 2: return {mono(0, 1), {}, mono(1, 1), mono(1, -1)};
    case -2: return {mono(0, 1), {}, mono(0, 1), mono(-1, -1)};
    default: throw std::invalid_argument("B_3 letter must be +-1 or +-2");
  }
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

RewritingOracle::RewritingOracle(int cap) : cap_(cap) {
  Word prefix;
  enumerate(prefix, cap, words_);
  for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(pack(words_[k]), static_cast<int>(k));
  parent_.resize(words_.size());
  std::iota(parent_.begin(), parent_.end(), 0);

  const auto cycles = relator_cycles();
  Word next;
  for (std::size_t id = 0; id < words_.size(); ++id) {
    const Word& w = words_[id];
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (const auto& cyc : cycles) {
        // u = cyc[0..len), replaced by (cyc[len..6))^{-1}.
        for (std::size_t len = 1; len <= cyc.size() && pos + len <= w.size(); ++len) {
          if (w[pos + len - 1] != cyc[len - 1]) break;
          next.assign(w.begin(), w.begin() + static_cast<long>(pos));
          for (std::size_t k = cyc.size(); k > len; --k) next.push_back(-cyc[k - 1]);
          next.insert(next.end(), w.begin() + static_cast<long>(pos + len), w.end());
          const Word reduced = free_reduce(next);
          if (static_cast<int>(reduced.size()) > cap_) continue;
          unite(static_cast<int>(id), id_of(reduced));
        }
      }
    }
  }
}

int RewritingOracle::id_of(const Word& w) const {
  auto it = index_.find(pack(w));
  if (it == index_.end()) throw std::logic_error("word outside the oracle table");
  return it->second;
}

int RewritingOracle::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

void RewritingOracle::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

bool RewritingOracle::equivalent(const Word& a, const Word& b) {
  return find(id_of(free_reduce(a))) == find(id_of(free_reduce(b)));
}

std::vector<Word> RewritingOracle::class_members(const Word& w, int max_len) {
  if (!members_built_) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      members_[find(static_cast<int>(k))].push_back(static_cast<int>(k));
    }
    members_built_ = true;
  }
  std::vector<Word> out;
  for (int k : members_[find(id_of(free_reduce(w)))]) {
    if (static_cast<int>(words_[static_cast<std::size_t>(k)].size()) <= max_len) {
      out.push_back(words_[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

Matrix2 burau(const Word& w) {
  Matrix2 m{mono(0, 1), {}, {}, mono(0, 1)};
  for (int x : w) m = mul(m, generator(x));
  return m;
}

}  // namespace oracle
