#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "orm/group_words.hpp"
#include "orm/kb.hpp"
#include "orm/presentation.hpp"

namespace orm {

enum class Truth { TRIVIAL, NONTRIVIAL, UNKNOWN };
enum class Method { FREE, ABELIAN, DEHN, KNUTH_BENDIX, BFS };
enum class Eq { EQUAL, NOT_EQUAL, UNKNOWN };

const char* to_string(Truth t);
const char* to_string(Method m);
const char* to_string(Eq e);

// Three-valued answer to "does w represent the identity of G?".  Decided
// verdicts carry a replayable certificate (a reduction trace, a normal form,
// or an exponent-sum obstruction).
struct Verdict {
  Truth value;
  Method method;
  std::string certificate;
};

// The same, relabeled for equality questions.
struct EqVerdict {
  Eq value;
  Method method;
  std::string certificate;
};

// Raised when a decision method is asked about a presentation outside its
// hypotheses (currently only: Dehn without a proper-power relator).
struct UnsupportedMethod : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleBudgets {
  long long kb_inferences = 100000;
  double kb_seconds = 2.0;
  std::size_t kb_max_rules = 5000;
  int bfs_radius = 8;
};

// Greedy majority-factor replacement over cyclic rotations of the relator
// and its inverse.  Complete for proper-power relators: a nonempty
// cyclically reduced trivial word always contains a strict-majority factor
// of some rotation, so being stuck proves nontriviality.  `relator` is the
// full relator (the exponent-th power of its root); `exponent` below 2 is
// an UnsupportedMethod error.
Verdict dehn_is_trivial(const GroupWord& w, const GroupWord& relator, int exponent);

class UnitsOracle;

// Normal-form test against the oracle's (possibly partial) completed system.
Verdict kb_is_trivial(const GroupWord& w, const UnitsOracle& oracle);

// Word-problem decider for a group given by a single positive relator, the
// group of units ⟨B | φ(w)=1⟩ in the intended use.  Construction is cheap;
// the completion and the derivation ball are built lazily on first use and
// then shared.  All queries are const and thread-safe.
class UnitsOracle {
 public:
  explicit UnitsOracle(SpecialPresentation group, OracleBudgets budgets = {});

  const SpecialPresentation& group() const { return group_; }
  const OracleBudgets& budgets() const { return budgets_; }
  int torsion_exponent() const { return torsion_.exponent; }
  const Word& torsion_root() const { return torsion_.root; }

  // Full strategy chain: free reduction, exponent-sum obstruction, Dehn when
  // the relator is a proper power, Knuth–Bendix, derivation ball, UNKNOWN.
  // Every TRIVIAL answer is cross-checked against the abelianization.
  Verdict is_trivial(const GroupWord& w) const;

  // is_trivial(u·v⁻¹), relabeled.  Counts as a single query.
  EqVerdict equal(const GroupWord& u, const GroupWord& v) const;

  // Individual methods, exposed for cross-validation.  They do not fall
  // through to one another and do not bump the query counter.
  Verdict free_verdict(const GroupWord& w) const;
  Verdict abelian_verdict(const GroupWord& w) const;  // NONTRIVIAL or UNKNOWN
  Verdict dehn_verdict(const GroupWord& w) const;     // UnsupportedMethod if k < 2
  Verdict kb_verdict(const GroupWord& w) const;
  Verdict bfs_verdict(const GroupWord& w) const;      // TRIVIAL or UNKNOWN

  // Forces the lazy completion and returns it.
  const KbResult& completion() const;

  // Necessary condition only: the exponent-sum vector of w lies in the
  // lattice spanned by the relator's exponent-sum vector.
  bool abelianization_admits_trivial(const GroupWord& w) const;

  long long query_count() const { return queries_.load(); }

 private:
  Verdict chain(const GroupWord& w) const;
  Word to_ext(const GroupWord& w) const;
  GroupWord from_ext(const Word& w) const;
  std::string render(const GroupWord& w) const;
  void ensure_kb() const;
  void ensure_ball() const;

  SpecialPresentation group_;
  OracleBudgets budgets_;
  GroupWord relator_;                   // positive image of the relator word
  std::vector<long long> relator_exp_;
  PowerDecomposition torsion_;

  mutable std::once_flag kb_once_;
  mutable KbResult kb_;
  mutable std::once_flag ball_once_;
  mutable std::unordered_set<Word, WordHash> ball_;  // words derivably trivial
  mutable std::atomic<long long> queries_{0};
};

}  // namespace orm
