#include "doctest.h"

#include "orm/oracle.hpp"

using namespace orm;

namespace {

UnitsOracle& z_units() {  // q = p^-2, infinite cyclic
  static UnitsOracle o(parse_presentation("< p,q | pqp = 1 >"));
  return o;
}

UnitsOracle& torsion_units() {
  static UnitsOracle o(parse_presentation("< p,q | pqppqp = 1 >"));
  return o;
}

GroupWord gw(const UnitsOracle& o, const char* s) {
  return parse_group_word(s, o.group().alphabet);
}

}  // namespace

TEST_CASE("strategy chain decides the basic queries") {
  UnitsOracle& o = z_units();
  CHECK(o.is_trivial(gw(o, "1")).value == Truth::TRIVIAL);
  CHECK(o.is_trivial(gw(o, "1")).method == Method::FREE);

  Verdict v = o.is_trivial(gw(o, "pqp"));
  CHECK(v.value == Truth::TRIVIAL);

  // Exponent sums (1,0) sit outside the lattice of (2,1).
  v = o.is_trivial(gw(o, "p"));
  CHECK(v.value == Truth::NONTRIVIAL);
  CHECK(v.method == Method::ABELIAN);

  CHECK(o.is_trivial(gw(o, "qpp")).value == Truth::TRIVIAL);
  CHECK(o.is_trivial(gw(o, "q p^2")).value == Truth::TRIVIAL);
}

TEST_CASE("equality questions reuse the triviality chain") {
  UnitsOracle& o = z_units();
  CHECK(o.equal(gw(o, "pq"), gw(o, "qp")).value == Eq::EQUAL);
  CHECK(o.equal(gw(o, "p"), gw(o, "q")).value == Eq::NOT_EQUAL);
}

TEST_CASE("query counter moves only on public queries") {
  UnitsOracle& o = z_units();
  long long before = o.query_count();
  (void)o.free_verdict(gw(o, "1"));
  (void)o.abelian_verdict(gw(o, "p"));
  (void)o.kb_verdict(gw(o, "pqp"));
  CHECK(o.query_count() == before);
  (void)o.is_trivial(gw(o, "pqp"));
  (void)o.equal(gw(o, "p"), gw(o, "q"));
  CHECK(o.query_count() == before + 2);
}

TEST_CASE("abelianization admission is a sound prefilter") {
  UnitsOracle& o = z_units();
  CHECK(o.abelianization_admits_trivial(gw(o, "p^2 q")));
  CHECK(o.abelianization_admits_trivial(gw(o, "p^4 q^2")));
  CHECK_FALSE(o.abelianization_admits_trivial(gw(o, "p")));
  CHECK_FALSE(o.abelianization_admits_trivial(gw(o, "p^3 q")));
}

TEST_CASE("torsion detection and the greedy replacement decider") {
  UnitsOracle& o = torsion_units();
  CHECK(o.torsion_exponent() == 2);
  CHECK(o.group().alphabet.render_word(o.torsion_root()) == "pqp");

  CHECK(o.dehn_verdict(gw(o, "pqppqp")).value == Truth::TRIVIAL);
  CHECK(o.dehn_verdict(gw(o, "p")).value == Truth::NONTRIVIAL);
  CHECK(o.dehn_verdict(gw(o, "1")).value == Truth::TRIVIAL);

  // The exponent-1 group refuses the method instead of guessing.
  CHECK_THROWS_AS((void)z_units().dehn_verdict(gw(z_units(), "p")),
                  UnsupportedMethod);
}

TEST_CASE("every decided triviality is abelianization-consistent") {
  UnitsOracle& o = torsion_units();
  const char* words[] = {"1", "p", "q", "pq", "qp", "pqp", "pqppqp", "p^-1 q"};
  for (const char* s : words) {
    Verdict v = o.is_trivial(gw(o, s));
    if (v.value == Truth::TRIVIAL) CHECK(o.abelianization_admits_trivial(gw(o, s)));
  }
}

TEST_CASE("starved completion degrades to later layers without lying") {
  OracleBudgets tiny;
  tiny.kb_inferences = 0;
  UnitsOracle o(parse_presentation("< p,q | pqp = 1 >"), tiny);
  CHECK_FALSE(o.completion().converged);
  // Direct relator occurrence still reduces to the empty word.
  CHECK(o.is_trivial(gw(o, "pqp")).value == Truth::TRIVIAL);
  // A rearranged trivial word must not come back NONTRIVIAL from a partial
  // system; TRIVIAL (via the derivation ball) or UNKNOWN are both honest.
  CHECK(o.is_trivial(gw(o, "qpp")).value != Truth::NONTRIVIAL);
}
