#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orm/words.hpp"

namespace orm {

// A length-reducing-or-lexicographic rewrite rule over symbol sequences.
// Every rule in this codebase satisfies rhs <_sh lhs, which makes any rule
// set Noetherian: each application strictly decreases the shortlex value of
// the whole word.
struct RewriteRule {
  Word lhs;
  Word rhs;
};

// Leftmost redex first, lowest rule index on ties; repeated to a fixpoint.
// Precondition (unchecked here, guaranteed by all call sites): each rule is
// shortlex-decreasing, so the loop terminates.
Word reduce_with_rules(Word w, const std::vector<RewriteRule>& rules);

// All superposition pairs of the rule set: proper overlaps (a suffix of one
// lhs equal to a prefix of another) and containments (one lhs inside
// another).  Each pair is the two one-step descendants of the superposed
// word; the system is locally confluent iff every pair joins.
std::vector<std::pair<Word, Word>> superposition_pairs(
    const std::vector<RewriteRule>& rules);

struct KbBudget {
  long long max_inferences = 100000;  // candidate equations examined
  double max_seconds = 2.0;           // wall-clock cap on completion
  std::size_t max_rules = 5000;
};

struct KbResult {
  std::vector<RewriteRule> rules;  // interreduced, shortlex-decreasing
  bool converged = false;          // every superposition was examined
  long long inferences = 0;
  std::string stop_reason;  // "converged", "inference budget", ...

  Word reduce(const Word& w) const { return reduce_with_rules(w, rules); }
};

// Shortlex Knuth–Bendix completion of a set of word equations.  Orientation
// never fails because shortlex is total.  A non-converged result is still a
// sound partial system: every rule is a consequence of the input equations,
// so reducing a word to the empty word proves it trivial, but irreducibility
// proves nothing.
KbResult kb_complete(const std::vector<std::pair<Word, Word>>& equations,
                     const KbBudget& budget = {});

}  // namespace orm
