#include "doctest.h"

#include "corpus.hpp"
#include "orm/inverses.hpp"
#include "orm/json_io.hpp"
#include "orm/solver.hpp"
#include "schema_check.hpp"

#include <fstream>

using namespace orm;
using nlohmann::json;

namespace {

json load_schema(const char* name) {
  std::ifstream in(std::string(ORM_SOURCE_DIR) + "/schemas/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

void expect_valid(const char* schema_name, const json& value) {
  std::string err;
  bool ok = schema_check::validate(load_schema(schema_name), value, err);
  INFO(err);
  CHECK(ok);
}

}  // namespace

TEST_CASE("analysis output obeys its schema") {
  AnalysisReport rep = analyze(corpus::abacab().presentation);
  expect_valid("analysis.json", analysis_json(rep));
  // The no-witness case exercises the nullable field.
  rep = analyze(corpus::ten_letter().presentation);
  expect_valid("analysis.json", analysis_json(rep));
}

TEST_CASE("reduction output obeys its schema") {
  auto& c = corpus::abacab();
  Word in = corpus::w(c, "bacab");
  expect_valid("reduction.json",
               reduction_json(in, c.reduction->reduce(in),
                              c.presentation.alphabet));
}

TEST_CASE("ball output obeys its schema") {
  auto& b = corpus::bicyclic();
  BallResult ball = reduced_ball(*b.reduction, b.presentation.alphabet, 3);
  expect_valid("ball.json", ball_json(ball, b.presentation.alphabet, 3));
}

TEST_CASE("inverse table output obeys its schema") {
  auto& c = corpus::abacab();
  InverseTable t = compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
  compute_basis(t, &c.conditions);
  expect_valid("inverses.json", inverses_json(t, c.presentation.alphabet));
}

TEST_CASE("embedding report obeys its schema") {
  auto& c = corpus::abacab();
  InverseTable t = compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
  NBicyclicReport rep = n_bicyclic_view(t, *c.reduction, 2);
  expect_valid("embed.json", embed_json(rep, c.presentation.alphabet));
}

TEST_CASE("solver output obeys its schema") {
  auto& c = corpus::abacab();
  MonoidEqSystem sys = parse_eq_system("vars: x\neq: a x = 1\n", c.presentation);
  SolverResult res = solve(sys, *c.reduction, 5);
  expect_valid("solve.json", solve_json(res, c.presentation.alphabet));
}

TEST_CASE("verdict fields use the published vocabulary") {
  auto& c = corpus::abacab();
  Verdict v = c.oracle->is_trivial(
      parse_group_word("pqp", c.units.alphabet));
  json j = verdict_json(v);
  j["word"] = "p q p";
  j["group"] = render_presentation(c.units);
  expect_valid("units.json", j);
}

TEST_CASE("compilation record obeys its schema") {
  auto& c = corpus::abacab();
  InverseTable t = compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
  WeightedSignature sig = compute_basis(t, &c.conditions);
  auto [msys, rec] = compile(parse_welc("vars: X\ngens: d1 d2\neq: X = d1"), sig,
                             c.presentation, t.a);
  json j;
  j["eq_file"] = render_eq_system(msys);
  j["record"] = record_json(rec, c.presentation.alphabet);
  expect_valid("compile.json", j);
}
