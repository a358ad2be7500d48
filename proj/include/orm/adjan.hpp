#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orm/presentation.hpp"
#include "orm/words.hpp"

namespace orm {

// The decomposition machinery found something that should be impossible
// (a factorization that does not tile the relator, a piece set that is not
// a prefix code, ...).  Distinct from InputError: the input was fine, the
// invariants were not.
struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Factorization of the relator into minimal invertible pieces, plus the
// letter map onto the units alphabet.
struct PieceDecomposition {
  std::vector<Word> pieces;  // concatenates to the relator
  std::vector<Word> delta;   // distinct pieces, shortlex-sorted; a prefix code
  Alphabet units_alphabet;   // one fresh letter per delta word

  // delta[i] ↦ units letter i.
  std::unordered_map<Word, Symbol, WordHash> piece_letter;

  // Image of a piece word under the letter map; InputError when w is not a
  // concatenation of delta words.
  Word phi(const Word& w) const;
  // Single piece lookup.
  Symbol phi_letter(const Word& piece) const;
  // w ∈ Δ*?
  bool factors_over_delta(const Word& w) const;
};

struct ConditionReport {
  // C1: no delta word is a proper factor of another delta word.
  bool c1 = false;
  // A letter witnesses C2 when at least two distinct delta words start with
  // it; gamma/delta_word are the two shortlex-least such words.
  struct C2Witness {
    Symbol letter;
    Word gamma;
    Word delta_word;
  };
  std::vector<C2Witness> c2_witnesses;
  // Per witness letter a: no delta word starts with aa.
  std::map<Symbol, bool> c3_by_witness;
  std::optional<Symbol> chosen_a;  // shortlex-least witness letter
  // Largest j such that chosen_a^j is a prefix of some delta word (0 when
  // there is no witness).
  int m = 0;

  bool c2() const { return !c2_witnesses.empty(); }
  bool c3() const;  // for chosen_a; false when there is no witness
};

struct StructureReport {
  int torsion_exponent = 1;  // largest k with relator ≡ root^k
  Word torsion_root;
  bool all_letters_invertible = false;
  // Letters of A that do not occur in the relator.  When every relator
  // letter is invertible, M splits as (group of units) ∗ (free monoid on
  // this set).
  std::vector<Symbol> free_product_complement;
  bool hyperbolic_units_flag = false;  // torsion_exponent ≥ 2
};

// Least set containing the relator and closed under the overlap rule: when
// u ≡ αβ and v ≡ βγ for members u, v and nonempty β, the words α, β, γ are
// members too (empty words dropped).  u = v and whole-word β are allowed.
// Sorted shortlex.
std::vector<Word> invertible_closure(const Word& relator);

// Greedy left-to-right factorization of the relator into shortest closure
// prefixes with no proper nonempty prefix in the closure, iterated with the
// produced pieces until stable.
PieceDecomposition minimal_pieces(const SpecialPresentation& p);

ConditionReport check_conditions(const PieceDecomposition& d);

// ⟨B | φ(r₁)…φ(r_k) = 1⟩, the presentation of the group of units.
SpecialPresentation units_presentation(const PieceDecomposition& d);

StructureReport structure_report(const SpecialPresentation& p,
                                 const PieceDecomposition& d);

}  // namespace orm
