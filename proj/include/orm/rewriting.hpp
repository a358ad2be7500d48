#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orm/adjan.hpp"
#include "orm/kb.hpp"
#include "orm/oracle.hpp"

namespace orm {

// Subword scan order for reduce_in_M.  The normal form is scan-independent
// whenever reductions are certified (the underlying infinite system is
// confluent); exposing the order lets tests exercise exactly that.
enum class ScanPolicy { LONGEST_LEFTMOST, SHORTEST_LEFTMOST, RIGHTMOST_LONGEST };

struct RewriteStep {
  std::size_t pos;
  Word lhs;
  Word rhs;
};

struct ReductionResult {
  Word word;
  bool certified = true;  // no oracle UNKNOWN anywhere in the run
  std::vector<RewriteStep> trace;
};

struct EqualityResult {
  Eq value;
  std::string certificate;
};

enum class Ternary { YES, NO, UNKNOWN };

struct InvertibilityResult {
  Ternary value;
  Word reduced;
  bool certified;
};

// Post-hoc validation of a piece decomposition: no proper nonempty prefix of
// a piece may be equal in M to a product of pieces.
struct DecompositionCertificate {
  bool consistent = true;  // false ⇒ some piece has an invertible proper prefix
  bool certified = true;   // false ⇒ some check ended UNKNOWN
  std::vector<std::string> notes;
};

// Shared state for reducing words of M: the piece decomposition, the units
// oracle, and the discovery/reduction memo tables.  Not internally
// synchronized — use one context per thread (they can share one oracle).
class ReductionContext {
 public:
  ReductionContext(PieceDecomposition d, std::shared_ptr<const UnitsOracle> oracle,
                   bool enable_memo = true);

  const PieceDecomposition& decomposition() const { return d_; }
  const UnitsOracle& oracle() const { return *oracle_; }
  const std::shared_ptr<const UnitsOracle>& oracle_ptr() const { return oracle_; }
  bool memo_enabled() const { return memo_; }

  // Shortlex-least Δ*-word equal to sub in M, when one exists below sub.
  // certified=false records that some candidate comparison was UNKNOWN, in
  // which case an absent rule does not prove irreducibility (and a found
  // rhs might not be the least).  InputError when sub ∉ Δ⁺.
  struct Discovery {
    std::optional<RewriteRule> rule;
    bool certified = true;
  };
  Discovery discover(const Word& sub);

  ReductionResult reduce(const Word& w,
                         ScanPolicy policy = ScanPolicy::LONGEST_LEFTMOST);
  EqualityResult equal(const Word& u, const Word& v);

 private:
  PieceDecomposition d_;
  std::shared_ptr<const UnitsOracle> oracle_;
  bool memo_;
  std::unordered_map<Word, Discovery, WordHash> discoveries_;
  std::unordered_map<Word, ReductionResult, WordHash> reductions_;
};

// Free-function spellings of the context operations.
std::optional<RewriteRule> discover_rule(const Word& sub, ReductionContext& ctx);
ReductionResult reduce_in_M(const Word& w, ReductionContext& ctx,
                            ScanPolicy policy = ScanPolicy::LONGEST_LEFTMOST);
EqualityResult equal_in_M(const Word& u, const Word& v, ReductionContext& ctx);

// Equality of two piece-products via their images in the group of units.
// InputError when either word fails to factor over Δ.
EqVerdict delta_equal_in_M(const Word& u, const Word& v, const PieceDecomposition& d,
                           const UnitsOracle& oracle);

// Reduce, then test membership of the normal form in Δ*.  YES is sound even
// for uncertified reductions (rewrites preserve the element); NO needs a
// certified normal form.
InvertibilityResult is_invertible_in_M(const Word& u, ReductionContext& ctx);

DecompositionCertificate certify_decomposition(const PieceDecomposition& d,
                                               ReductionContext& ctx);

// A finite, explicitly given rewriting system (used for the a·dᵢ → 1
// presentations).  Construction validates that every rule decreases shortlex.
struct FiniteSystem {
  Alphabet alphabet;
  std::vector<RewriteRule> rules;
};
FiniteSystem make_finite_system(Alphabet alphabet, std::vector<RewriteRule> rules);

enum class Confluence { CONFLUENT, NOT_CONFLUENT, UNKNOWN };

struct ConfluenceReport {
  std::vector<std::pair<Word, Word>> pairs;     // all critical pairs
  std::vector<std::pair<Word, Word>> unjoined;  // distinct normal forms
  Confluence verdict = Confluence::UNKNOWN;
};

// All critical pairs with a joinability verdict; the systems here are
// Noetherian, so local confluence settles confluence.
ConfluenceReport critical_pairs(const FiniteSystem& s);

}  // namespace orm
