#include "doctest.h"

#include "corpus.hpp"
#include "orm/welc.hpp"

using namespace orm;
using corpus::w;

TEST_CASE("directive parsing and rendering round trip") {
  const char* text =
      "vars: X Y\n"
      "gens: d1 d2\n"
      "weights: 1 2\n"
      "eq: X d1 = d2 Y\n"
      "len: X <= d1 d1\n";
  WelcSystem sys = parse_welc(text);
  CHECK(sys.variables == std::vector<std::string>{"X", "Y"});
  CHECK(sys.generators == std::vector<std::string>{"d1", "d2"});
  CHECK(sys.weights == std::vector<int>{1, 2});
  CHECK(sys.equations.size() == 1);
  CHECK(sys.constraints.size() == 1);
  CHECK(render_welc(sys) == text);
  CHECK(render_welc(parse_welc(render_welc(sys))) == render_welc(sys));
}

TEST_CASE("commas and semicolons are accepted separators") {
  WelcSystem sys = parse_welc("vars: X; gens: d1, d2; eq: X = d1 # trailing");
  CHECK(sys.generators == std::vector<std::string>{"d1", "d2"});
  CHECK(sys.equations.size() == 1);
}

TEST_CASE("malformed directive files are refused") {
  CHECK_THROWS_AS(parse_welc("gens: d1 d1"), InputError);
  CHECK_THROWS_AS(parse_welc("vars: X\ngens: X\neq: X = X"), InputError);
  CHECK_THROWS_AS(parse_welc("gens: d1\neq: d2 = d1"), InputError);
  CHECK_THROWS_AS(parse_welc("gens: d1\nweights: 1 2"), InputError);
  CHECK_THROWS_AS(parse_welc("gens: d1\nbogus: x"), InputError);
  CHECK_THROWS_AS(parse_welc("gens: d1\neq: d1 = d1 = d1"), InputError);
  CHECK_THROWS_AS(parse_welc("gens: d1\nno colon here"), InputError);
  CHECK_THROWS_AS(parse_welc("vars: X\neq: X = X"), InputError);  // no gens
}

TEST_CASE("brute force search over generator words") {
  WelcResult r = brute_force_welc(parse_welc("vars: X\ngens: d1 d2\neq: X = d1"), 2);
  CHECK(r.status == SolveStatus::SAT);
  REQUIRE(r.witness.count("X"));
  CHECK(r.witness.at("X").size() == 1);

  // Conjugation by distinct generators has no bounded solution.
  r = brute_force_welc(parse_welc("vars: X\ngens: d1 d2\neq: X d1 = d2 X"), 4);
  CHECK(r.status == SolveStatus::UNSAT_WITHIN_BOUND);
  CHECK(r.assignments == 31);  // full pool of words up to length 4

  // Variable-free systems are decided by inspection.
  r = brute_force_welc(parse_welc("gens: d1\neq: d1 = d1"), 1);
  CHECK(r.status == SolveStatus::SAT);
  r = brute_force_welc(parse_welc("gens: d1 d2\neq: d1 = d2"), 1);
  CHECK(r.status == SolveStatus::UNSAT_WITHIN_BOUND);
}

TEST_CASE("length constraints prune under the weight profile") {
  // |X|must exceed its cap: X = d1 d1 d1 forced by the equation, cap is 2.
  const char* text =
      "vars: X\ngens: d1\neq: X = d1 d1 d1\nlen: X <= d1 d1\n";
  WelcResult r = brute_force_welc(parse_welc(text), 3);
  CHECK(r.status == SolveStatus::UNSAT_WITHIN_BOUND);

  // Weighted profile: d2 counts double, so d1 d1 fits under one d2... not.
  const char* weighted =
      "vars: X\ngens: d1 d2\nweights: 1 2\neq: X = d1 d1\nlen: X <= d2\n";
  r = brute_force_welc(parse_welc(weighted), 2);
  CHECK(r.status == SolveStatus::SAT);
}

TEST_CASE("assignment checking validates its input") {
  WelcSystem sys = parse_welc("vars: X\ngens: d1\neq: X = d1");
  std::map<std::string, WelcTerm> good = {{"X", {WelcItem{false, 0}}}};
  CHECK(welc_assignment_satisfies(sys, good));
  std::map<std::string, WelcTerm> missing;
  CHECK_THROWS_AS(welc_assignment_satisfies(sys, missing), InputError);
  std::map<std::string, WelcTerm> varry = {{"X", {WelcItem{true, 0}}}};
  CHECK_THROWS_AS(welc_assignment_satisfies(sys, varry), InputError);
}

TEST_CASE("compilation produces the commutation and inverse gadgets") {
  auto& c = corpus::abacab();
  InverseTable t = compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
  WeightedSignature sig = compute_basis(t, &c.conditions);

  WelcSystem sys = parse_welc(
      "vars: X\ngens: d1 d2\neq: X d1 = d2 X\nlen: X <= d2 d2\n");
  auto [msys, rec] = compile(sys, sig, c.presentation, t.a);

  CHECK(msys.variables == std::vector<std::string>{"__f_X", "X", "__c_0"});
  CHECK(msys.equations.size() == 6);
  CHECK(rec.generator_map.size() == 2);
  CHECK(corpus::render(c, rec.generator_map[0]) == "babac");
  CHECK(corpus::render(c, rec.generator_map[1]) == "cabab");
  CHECK(rec.lambda == std::vector<int>{1, 1});
  CHECK(rec.domain_gadgets == std::vector<std::string>{"__f_X"});
  CHECK(rec.constraint_gadgets == std::vector<std::string>{"__c_0"});

  std::string rendered = render_eq_system(msys);
  CHECK(rendered.find("a __f_X = __f_X a") != std::string::npos);
  CHECK(rendered.find("__f_X X = 1") != std::string::npos);
  CHECK(rendered.find("X babac = cabab X") != std::string::npos);
  CHECK(rendered.find("__c_0 cabab") != std::string::npos);
}

TEST_CASE("compilation rejects what the signature cannot carry") {
  auto& c = corpus::abacab();
  InverseTable t = compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
  WeightedSignature sig = compute_basis(t, &c.conditions);

  // More abstract generators than basis words.
  CHECK_THROWS_AS(compile(parse_welc("gens: d1 d2 d3\neq: d1 = d1"), sig,
                          c.presentation, t.a),
                  InputError);
  // Weight profile disagrees with the recorded weights.
  CHECK_THROWS_AS(compile(parse_welc("gens: d1 d2\nweights: 2 1\neq: d1 = d1"),
                          sig, c.presentation, t.a),
                  InputError);
  // Reserved name prefix.
  CHECK_THROWS_AS(compile(parse_welc("vars: __f_z\ngens: d1\neq: __f_z = d1"),
                          sig, c.presentation, t.a),
                  InputError);
}

TEST_CASE("witness decompilation inverts the generator map") {
  auto& c = corpus::abacab();
  InverseTable t = compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
  WeightedSignature sig = compute_basis(t, &c.conditions);
  WelcSystem sys = parse_welc("vars: X\ngens: d1 d2\neq: X = X");
  auto [msys, rec] = compile(sys, sig, c.presentation, t.a);

  std::map<std::string, Word> wit = {{"X", w(c, "babaccabab")},
                                     {"__f_X", w(c, "aa")}};
  auto back = decompile_witness(wit, sys, rec);
  REQUIRE(back);
  REQUIRE(back->count("X"));
  const WelcTerm& term = back->at("X");
  REQUIRE(term.size() == 2);
  CHECK(term[0].index == 0);
  CHECK(term[1].index == 1);

  std::map<std::string, Word> stray = {{"X", w(c, "ba")}, {"__f_X", Word{}}};
  CHECK_FALSE(decompile_witness(stray, sys, rec));
}

TEST_CASE("equation files round trip through the base presentation") {
  auto& c = corpus::abacab();
  MonoidEqSystem sys = parse_eq_system("vars: x y\neq: a x = y\neq: x y = 1\n",
                                       c.presentation);
  CHECK(sys.variables == std::vector<std::string>{"x", "y"});
  CHECK(sys.equations.size() == 2);
  std::string text = render_eq_system(sys);
  MonoidEqSystem again = parse_eq_system(text, c.presentation);
  CHECK(render_eq_system(again) == text);

  CHECK_THROWS_AS(parse_eq_system("eq: z = 1", c.presentation), InputError);
  CHECK_THROWS_AS(parse_eq_system("vars: x\nlen: x <= x", c.presentation),
                  InputError);
}
