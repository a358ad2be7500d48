// Compares the memoized OpenMP solver against the serial cold-start
// reference on a few compiled word-equation instances.  Build with the
// solver_bench target; not part of the test suite.

#include "orm/analysis.hpp"
#include "orm/inverses.hpp"
#include "orm/solver.hpp"
#include "orm/welc.hpp"

#include <cstdio>
#include <string>
#include <thread>

using namespace orm;

namespace {

struct Case {
  const char* name;
  const char* text;
};

const Case kCases[] = {
    {"assign", "vars: X\ngens: d1, d2\neq: X = d1"},
    {"two-var", "vars: X, Y\ngens: d1, d2\neq: X d1 = d1 Y"},
    {"commute", "vars: X, Y\ngens: d1, d2\neq: X Y = Y X"},
    {"bounded", "vars: X\ngens: d1, d2\neq: X = d2\nlen: X <= d2"},
    {"unsat-len", "vars: X\ngens: d1, d2\nlen: X d1 <= X"},
    {"unsat-struct", "vars: X\ngens: d1, d2\neq: X d1 = d2 X"},
};

}  // namespace

int main() {
  MonoidContext mc = make_context(parse_presentation("< a,b,c | abacab = 1 >"));
  InverseTable table =
      compute_X(mc.decomposition, *mc.conditions.chosen_a, *mc.reduction);
  WeightedSignature sig = compute_basis(table, &mc.conditions);
  const int radius = 6;
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int par_jobs = hw > 1 ? hw : 2;

  std::printf("radius %d, parallel jobs %d\n", radius, par_jobs);
  std::printf("%-14s %-19s %10s %10s %10s %12s %12s\n", "case", "status",
              "serial(s)", "par(s)", "ref(s)", "calls", "ref calls");

  for (const Case& c : kCases) {
    WelcSystem sys = parse_welc(c.text);
    auto compiled = compile(sys, sig, mc.presentation, *mc.conditions.chosen_a);

    SolverResult serial = solve(compiled.first, *mc.reduction, radius, 1);
    SolverResult par = solve(compiled.first, *mc.reduction, radius, par_jobs);
    SolverResult ref = solve_reference(compiled.first, *mc.reduction, radius);

    const bool consistent =
        serial.status == par.status && serial.status == ref.status;
    std::printf("%-14s %-19s %10.4f %10.4f %10.4f %12lld %12lld%s\n", c.name,
                to_string(serial.status), serial.stats.seconds,
                par.stats.seconds, ref.stats.seconds, serial.stats.oracle_calls,
                ref.stats.oracle_calls, consistent ? "" : "  (MISMATCH)");
  }
  return 0;
}
