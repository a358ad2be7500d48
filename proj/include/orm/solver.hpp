#pragma once

#include "orm/rewriting.hpp"
#include "orm/welc.hpp"

#include <map>
#include <string>
#include <vector>

namespace orm {

struct BallResult {
  std::vector<Word> words;        // deduplicated, shortlex
  std::vector<Word> uncertified;  // members whose reduction was undecided
  bool degraded = false;
};

// Reduces every word of length <= radius over the base alphabet.  The
// alphabet travels separately because a decomposition does not remember
// letters absent from the relator.
BallResult reduced_ball(ReductionContext& ctx, const Alphabet& base, int radius);

struct SolverStats {
  long long bindings = 0;      // variable-value bindings explored
  long long oracle_calls = 0;  // unit-group queries during the search phase
  double seconds = 0.0;        // whole call, ball included
};

struct SolverResult {
  SolveStatus status = SolveStatus::UNSAT_WITHIN_BOUND;
  std::map<std::string, Word> witness;
  SolverStats stats;
  bool degraded_ball = false;
};

// Backtracking search over ball values, variables in declaration order,
// values in shortlex order.  Equations fire as soon as their variables are
// all bound (shorter substituted sides first); a NOT_EQUAL prunes the
// subtree, an UNKNOWN prunes it and taints a would-be UNSAT.  jobs > 1
// partitions the first variable's values across OpenMP threads, each with a
// private memo; merging keeps the least first-value SAT so the witness
// matches the serial one.  jobs <= 0 means the OpenMP default.
SolverResult solve(const MonoidEqSystem& sys, ReductionContext& ctx, int radius,
                   int jobs = 1);

// Same search skeleton and soundness rules, but serial, no reduction or
// discovery memo, and equations within a depth stay in declaration order.
// Used for cross-checking and as the cost baseline.
SolverResult solve_reference(const MonoidEqSystem& sys, ReductionContext& ctx,
                             int radius);

}  // namespace orm
