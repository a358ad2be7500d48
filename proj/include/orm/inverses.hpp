#pragma once

#include "orm/adjan.hpp"
#include "orm/rewriting.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orm {

// One right inverse of a power of the distinguished letter: a^j · x_word = 1
// in M, where the source piece is a^j · beta and eta inverts the whole piece
// in the group of units.
struct InverseEntry {
  int j = 0;
  Word beta;
  Word eta;     // shortlex-least product of pieces inverting the piece
  Word x_word;  // beta · eta, verified irreducible
  bool certified = true;
};

struct InverseTable {
  Symbol a = 0;
  int m = 0;  // maximal leading a-run over the pieces
  std::vector<InverseEntry> entries;
  std::vector<Word> basis;        // shortlex order
  std::map<Word, int> weights;    // basis word -> its j
  bool certified = true;
};

struct WeightedSignature {
  int rank = 0;
  std::vector<int> weights;  // aligned with basis
  std::vector<Word> basis;
};

// Builds the entries (basis left empty; see compute_basis).  Throws InputError
// when no two pieces share the first letter a, unless require_witness is off —
// the single-piece monoids still carry a useful table.
InverseTable compute_X(const PieceDecomposition& d, Symbol a, ReductionContext& ctx,
                       bool require_witness = true);

// The unique i with a^i · w = 1, searched up to m·|w|; 0 for the empty word;
// absent when w is not a right inverse of any power.  certified (optional out)
// goes false when an undecided equality was skipped along the way.
std::optional<int> weight(const Word& w, const InverseTable& table,
                          ReductionContext& ctx, bool* certified = nullptr);

// Fills table.basis/weights: a table word is basic iff it is not a graphical
// concatenation of two or more table words.  With conditions supplied and the
// rank-two hypotheses certified, a basis smaller than 2 is an internal error.
WeightedSignature compute_basis(InverseTable& table,
                                const ConditionReport* conditions = nullptr);

// Unique factorization over the basis, absent if w is outside the generated
// submonoid.  Empty word gives an empty list.
std::optional<std::vector<Word>> factor_over_basis(const Word& w,
                                                   const InverseTable& table);

struct PowerOfAChecks {
  bool graphical = false;  // u literally a run of a's
  Eq equational = Eq::UNKNOWN;  // does u·a equal a·u in M
};

// Both membership tests for {a}*.  With assert_agreement, a decided equational
// answer disagreeing with the graphical one throws logic_error; callers enable
// this only where the commutation criterion's hypotheses hold.
PowerOfAChecks is_power_of_a(const Word& u, ReductionContext& ctx, Symbol a,
                             bool assert_agreement = false);

struct NBicyclicReport {
  FiniteSystem system;                  // { a·d_i -> 1 } over a, d1..dq
  std::vector<Word> generator_images;   // d_i -> weight-1 table word, shortlex
  int forms_checked = 0;
  int pairs_checked = 0;
  bool injective = false;
  bool homomorphic = false;
  bool certified = true;
  std::vector<std::string> counterexamples;
};

// Embeds the q-generator polycyclic-style monoid { a·d_i = 1 } into M via the
// weight-1 layer and verifies, over all normal forms alpha·a^j with
// |alpha|+j <= radius, that the map is injective and multiplicative.
NBicyclicReport n_bicyclic_view(const InverseTable& table, ReductionContext& ctx,
                                int radius);

}  // namespace orm
