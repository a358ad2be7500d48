#include "doctest.h"

#include "corpus.hpp"
#include "orm/solver.hpp"

#include <set>

using namespace orm;
using corpus::w;

TEST_CASE("reduced balls of the bicyclic presentation") {
  auto& b = corpus::bicyclic();
  for (int radius = 0; radius <= 6; ++radius) {
    BallResult ball = reduced_ball(*b.reduction, b.presentation.alphabet, radius);
    CHECK_FALSE(ball.degraded);
    std::set<Word> expect;
    for (int i = 0; i + 0 <= radius; ++i)
      for (int j = 0; i + j <= radius; ++j) {
        Word v;
        v.insert(v.end(), i, 1);  // b's
        v.insert(v.end(), j, 0);  // a's
        expect.insert(v);
      }
    CHECK(ball.words.size() == expect.size());
    CHECK(std::set<Word>(ball.words.begin(), ball.words.end()) == expect);
    CHECK(std::is_sorted(ball.words.begin(), ball.words.end(), ShortlexLess{}));
  }
}

TEST_CASE("letters outside the relator still populate the ball") {
  auto& g = corpus::aba();  // alphabet a,b,c,d with relator over a,b
  BallResult ball = reduced_ball(*g.reduction, g.presentation.alphabet, 1);
  bool has_c = false;
  for (const Word& v : ball.words)
    if (v == w(g, "c")) has_c = true;
  CHECK(has_c);
}

TEST_CASE("single-variable equation finds the least witness") {
  auto& c = corpus::abacab();
  MonoidEqSystem sys = parse_eq_system("vars: x\neq: a x = 1\n", c.presentation);
  SolverResult res = solve(sys, *c.reduction, 5);
  CHECK(res.status == SolveStatus::SAT);
  REQUIRE(res.witness.count("x"));
  CHECK(corpus::render(c, res.witness.at("x")) == "babac");
  CHECK(res.stats.bindings > 0);

  SolverResult ref = solve_reference(sys, *c.reduction, 5);
  CHECK(ref.status == SolveStatus::SAT);
  CHECK(corpus::render(c, ref.witness.at("x")) == "babac");
  CHECK(ref.stats.oracle_calls >= res.stats.oracle_calls);
}

TEST_CASE("left inverses of the tool letter do not exist in the bicyclic case") {
  auto& b = corpus::bicyclic();
  MonoidEqSystem sys = parse_eq_system("vars: x\neq: x a = 1\n", b.presentation);
  for (int radius = 2; radius <= 4; ++radius) {
    CHECK(solve(sys, *b.reduction, radius).status ==
          SolveStatus::UNSAT_WITHIN_BOUND);
    CHECK(solve_reference(sys, *b.reduction, radius).status ==
          SolveStatus::UNSAT_WITHIN_BOUND);
  }
  // The mirror-image equation is satisfied by the other letter.
  MonoidEqSystem right = parse_eq_system("vars: x\neq: a x = 1\n", b.presentation);
  SolverResult res = solve(right, *b.reduction, 2);
  CHECK(res.status == SolveStatus::SAT);
  CHECK(corpus::render(b, res.witness.at("x")) == "b");
}

TEST_CASE("multi-variable systems bind in declaration order") {
  auto& c = corpus::abacab();
  MonoidEqSystem sys =
      parse_eq_system("vars: x y\neq: x a = a x\neq: y x = 1\n", c.presentation);
  SolverResult res = solve(sys, *c.reduction, 2);
  CHECK(res.status == SolveStatus::SAT);
  CHECK(res.witness.at("x").empty());
  CHECK(res.witness.at("y").empty());
}

TEST_CASE("variable-free systems are checked directly") {
  auto& c = corpus::abacab();
  MonoidEqSystem good = parse_eq_system("eq: abacab = 1\n", c.presentation);
  CHECK(solve(good, *c.reduction, 2).status == SolveStatus::SAT);
  MonoidEqSystem bad = parse_eq_system("eq: b = c\n", c.presentation);
  CHECK(solve(bad, *c.reduction, 2).status == SolveStatus::UNSAT_WITHIN_BOUND);
}

TEST_CASE("thread partitioning returns the serial witness") {
  auto& c = corpus::abacab();
  MonoidEqSystem sys = parse_eq_system("vars: x\neq: a x = 1\n", c.presentation);
  SolverResult serial = solve(sys, *c.reduction, 5, 1);
  SolverResult par = solve(sys, *c.reduction, 5, 2);
  CHECK(par.status == SolveStatus::SAT);
  CHECK(par.witness.at("x") == serial.witness.at("x"));
}

TEST_CASE("solver stats carry timing and search effort") {
  auto& c = corpus::abacab();
  MonoidEqSystem sys = parse_eq_system("vars: x\neq: x = x\n", c.presentation);
  SolverResult res = solve(sys, *c.reduction, 1);
  CHECK(res.status == SolveStatus::SAT);
  CHECK(res.witness.at("x").empty());  // least value wins
  CHECK(res.stats.seconds >= 0.0);
  CHECK(res.stats.bindings >= 1);
}
