#pragma once

// Generator words of the Hilden group H_2n, the framed Hilden group RH_2n and
// the pure framed Hilden group PRH_2n inside RB_2n, plus a data-driven
// relation verifier that checks every instance of a presentation at fixed n
// with the word-problem solver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbk/framed.hpp"

namespace fbk {

enum class HildenGen { P, S, Theta };
enum class FramedHildenGen { p, s, theta, omega };
enum class PureFramedGen { g, omega };

// Words on 2n strands. Index ranges: P, S, p, s in 1..n-1; the rest 1..n.
FramedBraid hilden_generator(HildenGen name, int i, int n);
FramedBraid framed_hilden_generator(FramedHildenGen name, int i, int n);
FramedBraid pure_framed_generator(PureFramedGen name, int k, int n);

// Generator names are "<symbol>_<i>" or "<symbol>_<i>,<j>" with ASCII symbols
// P, S, Theta (classical), p, s, theta, omega, g (framed) and the two-index
// pure generators p, x, y. Two-index keys are stored with i < j.
class GeneratorDictionary {
 public:
  explicit GeneratorDictionary(int n) : n_(n) {}

  // Every built-in generator for half strand count n.
  static GeneratorDictionary builtin(int n);

  int n() const { return n_; }
  // Throws StrandMismatch unless b lives on 2n strands.
  void set(const std::string& name, FramedBraid b);
  const FramedBraid* find(const std::string& name) const;
  const std::map<std::string, FramedBraid>& entries() const { return entries_; }

  static std::string key(const std::string& symbol, std::initializer_list<int> indices);

 private:
  int n_;
  std::map<std::string, FramedBraid> entries_;
};

enum class RelationSuite { Hilden1, FramedHilden, PureFramed };

std::string to_string(RelationSuite suite);
std::optional<RelationSuite> relation_suite_from_string(const std::string& s);

struct RelationReport {
  // Template text plus the index assignment, e.g. "P_{i} P_{j} = P_{j} P_{i} @ i=1,j=3".
  std::string relation_id;
  std::optional<FramedBraid> lhs;
  std::optional<FramedBraid> rhs;
  bool holds = false;
  // True when the dictionary lacks a referenced generator; never a pass.
  bool skipped = false;
  std::vector<std::string> missing;
  // Set when the template fixes a reading of an ambiguous relation.
  std::string note;
};

// One report per instance over all valid index assignments, deduplicated by
// the normal forms of the two sides.
std::vector<RelationReport> verify_relation_suite(const GeneratorDictionary& dict,
                                                  RelationSuite suite);

// Necessary condition for membership in RH_2n: the framed plat closure is n
// unlinked components with framing 0.
bool plat_trivializes(const FramedBraid& h);
// Unframed variant for classical elements of B_2n: n components, pairwise
// unlinked. Blackboard framing is not an invariant of an unframed link and is
// not checked.
bool plat_trivializes_unframed(const BraidWord& h);

}  // namespace fbk
