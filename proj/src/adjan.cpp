#include "orm/adjan.hpp"

#include <algorithm>
#include <unordered_set>

namespace orm {

Word PieceDecomposition::phi(const Word& w) const {
  auto factors = prefix_code_factor(w, delta);
  if (!factors)
    throw InputError("word does not factor over the piece set");
  Word out;
  out.reserve(factors->size());
  for (const Word& f : *factors) out.push_back(piece_letter.at(f));
  return out;
}

Symbol PieceDecomposition::phi_letter(const Word& piece) const {
  auto it = piece_letter.find(piece);
  if (it == piece_letter.end()) throw InputError("not a piece");
  return it->second;
}

bool PieceDecomposition::factors_over_delta(const Word& w) const {
  return prefix_code_factor(w, delta).has_value();
}

bool ConditionReport::c3() const {
  if (!chosen_a) return false;
  auto it = c3_by_witness.find(*chosen_a);
  return it != c3_by_witness.end() && it->second;
}

std::vector<Word> invertible_closure(const Word& relator) {
  std::unordered_set<Word, WordHash> set;
  set.insert(relator);
  // Fixpoint over the overlap rule.  All derived words are factors of words
  // already present, so the set is contained in the relator's factor set and
  // the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Word> members(set.begin(), set.end());
    for (const Word& u : members) {
      for (const Word& v : members) {
        const std::size_t max_b = std::min(u.size(), v.size());
        for (std::size_t b = 1; b <= max_b; ++b) {
          // u ≡ α·β with |β| = b, v ≡ β·γ.
          if (!std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(b),
                          u.end() - static_cast<std::ptrdiff_t>(b)))
            continue;
          const Word alpha(u.begin(), u.end() - static_cast<std::ptrdiff_t>(b));
          const Word beta(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(b));
          const Word gamma(v.begin() + static_cast<std::ptrdiff_t>(b), v.end());
          for (const Word* w : {&alpha, &beta, &gamma})
            if (!w->empty() && set.insert(*w).second) changed = true;
        }
      }
    }
  }
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

namespace {

// Fresh single-letter names for the units alphabet: p, q, r, … then g11,
// g12, … once the tail of the Latin alphabet runs out.
std::string units_letter_name(std::size_t i) {
  if (i < 11) return std::string(1, static_cast<char>('p' + i));
  return "g" + std::to_string(i);
}

// Shortest prefix of w (from `from`) that lies in the closure and has no
// proper nonempty prefix in the closure.  Returns its length, 0 if none.
std::size_t minimal_closure_prefix(const Word& w, std::size_t from,
                                   const std::unordered_set<Word, WordHash>& closure) {
  Word prefix;
  for (std::size_t len = 1; from + len <= w.size(); ++len) {
    prefix.push_back(w[from + len - 1]);
    if (closure.count(prefix)) return len;
  }
  return 0;
}

}  // namespace

PieceDecomposition minimal_pieces(const SpecialPresentation& p) {
  if (p.relator.empty()) throw InputError("relator must be nonempty");

  std::vector<Word> closure_words = invertible_closure(p.relator);
  std::unordered_set<Word, WordHash> closure(closure_words.begin(),
                                             closure_words.end());

  std::vector<Word> pieces;
  // The factoring and the closure are iterated together until neither
  // changes.  In practice one round suffices: every greedy factor is already
  // a closure member, so re-closing adds nothing new; the loop guards the
  // general case at negligible cost.
  while (true) {
    pieces.clear();
    std::size_t at = 0;
    while (at < p.relator.size()) {
      const std::size_t len = minimal_closure_prefix(p.relator, at, closure);
      if (len == 0)
        throw DecompositionError(
            "greedy factorization stuck: no invertible prefix at offset " +
            std::to_string(at));
      pieces.emplace_back(p.relator.begin() + static_cast<std::ptrdiff_t>(at),
                          p.relator.begin() + static_cast<std::ptrdiff_t>(at + len));
      at += len;
    }

    std::size_t before = closure.size();
    for (const Word& piece : pieces) closure.insert(piece);
    // Re-close under the overlap rule with the pieces present.
    bool changed = closure.size() != before;
    while (changed) {
      changed = false;
      std::vector<Word> members(closure.begin(), closure.end());
      for (const Word& u : members)
        for (const Word& v : members) {
          const std::size_t max_b = std::min(u.size(), v.size());
          for (std::size_t b = 1; b <= max_b; ++b) {
            if (!std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(b),
                            u.end() - static_cast<std::ptrdiff_t>(b)))
              continue;
            const Word alpha(u.begin(), u.end() - static_cast<std::ptrdiff_t>(b));
            const Word beta(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(b));
            const Word gamma(v.begin() + static_cast<std::ptrdiff_t>(b), v.end());
            for (const Word* nw : {&alpha, &beta, &gamma})
              if (!nw->empty() && closure.insert(*nw).second) changed = true;
          }
        }
      if (changed) before = 0;  // force another factoring round
    }
    if (closure.size() == before) break;
  }

  PieceDecomposition d;
  d.pieces = pieces;
  std::unordered_set<Word, WordHash> seen;
  for (const Word& piece : pieces)
    if (seen.insert(piece).second) d.delta.push_back(piece);
  std::sort(d.delta.begin(), d.delta.end(), ShortlexLess{});

  if (!is_prefix_code(d.delta))
    throw DecompositionError("piece set is not a prefix code");
  Word flat;
  for (const Word& piece : d.pieces) flat.insert(flat.end(), piece.begin(), piece.end());
  if (flat != p.relator)
    throw DecompositionError("pieces do not concatenate to the relator");

  for (std::size_t i = 0; i < d.delta.size(); ++i) {
    const Symbol s = d.units_alphabet.add(units_letter_name(i));
    d.piece_letter.emplace(d.delta[i], s);
  }
  return d;
}

ConditionReport check_conditions(const PieceDecomposition& d) {
  ConditionReport r;

  r.c1 = true;
  for (const Word& u : d.delta)
    for (const Word& v : d.delta)
      if (u != v && is_proper_factor(u, v)) r.c1 = false;

  // Group delta words by first letter; delta is shortlex-sorted already, so
  // the first two hits per letter are the shortlex-least pair.
  std::map<Symbol, std::vector<const Word*>> by_first;
  for (const Word& w : d.delta)
    if (!w.empty()) by_first[w.front()].push_back(&w);
  for (const auto& [letter, words] : by_first) {
    if (words.size() < 2) continue;
    r.c2_witnesses.push_back({letter, *words[0], *words[1]});
    bool no_square = true;
    for (const Word& w : d.delta)
      if (w.size() >= 2 && w[0] == letter && w[1] == letter) no_square = false;
    r.c3_by_witness[letter] = no_square;
  }
  if (!r.c2_witnesses.empty()) {
    r.chosen_a = r.c2_witnesses.front().letter;  // map order = smallest symbol
    for (const Word& w : d.delta) {
      int run = 0;
      for (Symbol s : w) {
        if (s != *r.chosen_a) break;
        ++run;
      }
      r.m = std::max(r.m, run);
    }
  }
  return r;
}

SpecialPresentation units_presentation(const PieceDecomposition& d) {
  SpecialPresentation p;
  p.alphabet = d.units_alphabet;
  for (const Word& piece : d.pieces) p.relator.push_back(d.piece_letter.at(piece));
  return p;
}

StructureReport structure_report(const SpecialPresentation& p,
                                 const PieceDecomposition& d) {
  StructureReport r;
  const PowerDecomposition power = primitive_power(p.relator);
  r.torsion_exponent = power.exponent;
  r.torsion_root = power.root;
  r.hyperbolic_units_flag = power.exponent >= 2;

  std::size_t max_piece = 0;
  for (const Word& w : d.delta) max_piece = std::max(max_piece, w.size());
  r.all_letters_invertible = (max_piece == 1);

  std::vector<bool> used(p.alphabet.size(), false);
  for (Symbol s : p.relator) used[s] = true;
  for (Symbol s = 0; s < p.alphabet.size(); ++s)
    if (!used[s]) r.free_product_complement.push_back(s);
  return r;
}

}  // namespace orm
