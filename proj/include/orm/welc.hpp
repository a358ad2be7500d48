#pragma once

#include "orm/inverses.hpp"
#include "orm/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orm {

// Word equations with weighted length constraints over an abstract free
// monoid on generators d1..dn.  Terms are sequences of variables and
// generators; constraints read |lhs|_λ <= |rhs|_λ.

struct WelcItem {
  bool is_var = false;
  std::size_t index = 0;
  bool operator==(const WelcItem& o) const {
    return is_var == o.is_var && index == o.index;
  }
};
using WelcTerm = std::vector<WelcItem>;

struct WelcSystem {
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::vector<int> weights;  // empty means the unit profile
  std::vector<std::pair<WelcTerm, WelcTerm>> equations;
  std::vector<std::pair<WelcTerm, WelcTerm>> constraints;
  int rank() const { return static_cast<int>(generators.size()); }
};

// Directives, one per line (';' also separates): vars:, gens:, weights:,
// eq: <seq> = <seq>, len: <seq> <= <seq>.  Tokens name a declared variable or
// generator; "1" is the empty sequence.  '#' starts a comment.
WelcSystem parse_welc(const std::string& text);
std::string render_welc(const WelcSystem& sys);

enum class SolveStatus { SAT, UNSAT_WITHIN_BOUND, UNKNOWN };
const char* to_string(SolveStatus s);

struct WelcResult {
  SolveStatus status = SolveStatus::UNSAT_WITHIN_BOUND;
  std::map<std::string, WelcTerm> witness;  // generator-only terms
  long long assignments = 0;
};

// Exhaustive search over generator-words of length <= bound per variable,
// declaration order, length-then-index order within a variable.
WelcResult brute_force_welc(const WelcSystem& sys, int bound);

// True when the (generator-only) assignment satisfies every equation
// graphically and every constraint under the weight profile.
bool welc_assignment_satisfies(const WelcSystem& sys,
                               const std::map<std::string, WelcTerm>& assign);

// Equations over the target monoid ------------------------------------------

struct MItem {
  bool is_var = false;
  Symbol letter = 0;     // when a coefficient
  std::size_t var = 0;   // when a variable, index into variables
  bool operator==(const MItem& o) const {
    return is_var == o.is_var && (is_var ? var == o.var : letter == o.letter);
  }
};
using MTerm = std::vector<MItem>;

struct MonoidEqSystem {
  SpecialPresentation base;
  std::vector<std::string> variables;  // gadget variables interleaved first
  std::vector<std::pair<MTerm, MTerm>> equations;
};

struct CompilationRecord {
  std::vector<Word> generator_map;  // d_i -> basis word over the base alphabet
  std::vector<int> lambda;          // recorded weights of those words
  std::vector<std::string> domain_gadgets;      // one fresh name per variable
  std::vector<std::string> constraint_gadgets;  // one fresh name per constraint
};

// Realizes the system inside the monoid: generators become basis words,
// every variable x gets a companion __f_<x> forcing x into the embedded free
// submonoid, and each length constraint becomes the three-equation gadget
// with a fresh __c_<idx> commuting with the distinguished letter.
std::pair<MonoidEqSystem, CompilationRecord> compile(const WelcSystem& sys,
                                                     const WeightedSignature& sig,
                                                     const SpecialPresentation& base,
                                                     Symbol a);

// Projects a monoid-level witness back to the source: fresh variables are
// dropped, each original value is factored over the mapped generators.  Absent
// when some value does not factor.
std::optional<std::map<std::string, WelcTerm>> decompile_witness(
    const std::map<std::string, Word>& witness, const WelcSystem& sys,
    const CompilationRecord& rec);

// eq-file round trip for the CLI: `vars:` plus `eq:` lines, coefficients
// rendered through the base alphabet.
MonoidEqSystem parse_eq_system(const std::string& text, SpecialPresentation base);
std::string render_eq_system(const MonoidEqSystem& sys);

}  // namespace orm
