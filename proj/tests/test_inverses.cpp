#include "doctest.h"

#include "corpus.hpp"
#include "orm/inverses.hpp"

using namespace orm;
using corpus::w;

namespace {

InverseTable& abacab_table() {
  static InverseTable t = [] {
    auto& c = corpus::abacab();
    InverseTable table =
        compute_X(c.decomposition, *c.conditions.chosen_a, *c.reduction);
    compute_basis(table, &c.conditions);
    return table;
  }();
  return t;
}

}  // namespace

TEST_CASE("right-inverse table of the six-letter presentation") {
  auto& c = corpus::abacab();
  auto& t = abacab_table();
  CHECK(c.presentation.alphabet.name(t.a) == "a");
  CHECK(t.m == 1);
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries[0].j == 1);
  CHECK(corpus::render(c, t.entries[0].beta) == "b");
  CHECK(corpus::render(c, t.entries[0].eta) == "abac");
  CHECK(corpus::render(c, t.entries[0].x_word) == "babac");
  CHECK(t.entries[0].certified);
  CHECK(corpus::render(c, t.entries[1].x_word) == "cabab");
  CHECK(t.entries[1].certified);
  CHECK(t.certified);

  // a · x = 1 for both table words.
  for (const auto& e : t.entries) {
    Word ax = w(c, "a");
    ax.insert(ax.end(), e.x_word.begin(), e.x_word.end());
    CHECK(c.reduction->equal(ax, Word{}).value == Eq::EQUAL);
  }
}

TEST_CASE("weights count the annihilating power") {
  auto& c = corpus::abacab();
  auto& t = abacab_table();
  bool cert = true;
  auto weight_of = [&](const char* s) { return weight(w(c, s), t, *c.reduction, &cert); };
  auto w0 = weight_of("1");
  REQUIRE(w0);
  CHECK(*w0 == 0);
  auto w1 = weight_of("babac");
  REQUIRE(w1);
  CHECK(*w1 == 1);
  auto w2 = weight_of("babaccabab");
  REQUIRE(w2);
  CHECK(*w2 == 2);
  CHECK_FALSE(weight_of("bb"));
  CHECK(cert);
}

TEST_CASE("basis and unique factorization") {
  auto& c = corpus::abacab();
  auto& t = abacab_table();
  REQUIRE(t.basis.size() == 2);
  CHECK(corpus::render(c, t.basis[0]) == "babac");
  CHECK(corpus::render(c, t.basis[1]) == "cabab");
  CHECK(t.weights.at(w(c, "babac")) == 1);
  CHECK(t.weights.at(w(c, "cabab")) == 1);

  auto f = factor_over_basis(w(c, "babaccabab"), t);
  REQUIRE(f);
  REQUIRE(f->size() == 2);
  CHECK(corpus::render(c, (*f)[0]) == "babac");
  CHECK(corpus::render(c, (*f)[1]) == "cabab");

  auto none = factor_over_basis(w(c, "ba"), t);
  CHECK_FALSE(none);
  auto empty = factor_over_basis(Word{}, t);
  REQUIRE(empty);
  CHECK(empty->empty());
}

TEST_CASE("power-of-letter membership two ways") {
  auto& c = corpus::abacab();
  Symbol a = *c.conditions.chosen_a;
  auto chk = is_power_of_a(w(c, "aaa"), *c.reduction, a, true);
  CHECK(chk.graphical);
  CHECK(chk.equational == Eq::EQUAL);
  chk = is_power_of_a(w(c, "ab"), *c.reduction, a, true);
  CHECK_FALSE(chk.graphical);
  CHECK(chk.equational == Eq::NOT_EQUAL);
  chk = is_power_of_a(Word{}, *c.reduction, a, true);
  CHECK(chk.graphical);
}

TEST_CASE("missing two-starter witness is refused unless relaxed") {
  auto& b = corpus::bicyclic();
  Symbol a = 0;  // letter "a"
  CHECK_THROWS_AS(compute_X(b.decomposition, a, *b.reduction), InputError);
  InverseTable t = compute_X(b.decomposition, a, *b.reduction, false);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].eta.empty());
  CHECK(corpus::render(b, t.entries[0].x_word) == "b");
  WeightedSignature sig = compute_basis(t);
  CHECK(sig.rank == 1);
}

TEST_CASE("hand-built squared-prefix table matches the frozen values") {
  auto& c = corpus::squared_prefix();
  InverseTable t = compute_X(c.decomposition, 0, *c.reduction);
  CHECK(t.m == 2);
  REQUIRE(t.entries.size() == 3);
  CHECK(t.entries[0].j == 1);
  CHECK(corpus::render(c, t.entries[0].x_word) == "abaababb");
  CHECK(t.entries[1].j == 1);
  CHECK(corpus::render(c, t.entries[1].x_word) == "bbaabaab");
  CHECK(t.entries[2].j == 2);
  CHECK(corpus::render(c, t.entries[2].x_word) == "baababb");
  CHECK(t.certified);

  WeightedSignature sig = compute_basis(t, &c.conditions);
  CHECK(sig.rank == 3);
  CHECK(corpus::render(c, sig.basis[0]) == "baababb");
  CHECK(sig.weights == std::vector<int>{2, 1, 1});

  auto w2 = weight(w(c, "baababb"), t, *c.reduction);
  REQUIRE(w2);
  CHECK(*w2 == 2);
}

TEST_CASE("bounded embedding report for the six-letter presentation") {
  auto& c = corpus::abacab();
  auto& t = abacab_table();
  NBicyclicReport rep = n_bicyclic_view(t, *c.reduction, 3);
  CHECK(rep.generator_images.size() == 2);
  CHECK(corpus::render(c, rep.generator_images[0]) == "babac");
  CHECK(corpus::render(c, rep.generator_images[1]) == "cabab");
  CHECK(rep.injective);
  CHECK(rep.homomorphic);
  CHECK(rep.certified);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.system.rules.size() == 2);
}

TEST_CASE("single-generator embedding covers the classic normal forms") {
  auto& b = corpus::bicyclic();
  InverseTable t = compute_X(b.decomposition, 0, *b.reduction, false);
  NBicyclicReport rep = n_bicyclic_view(t, *b.reduction, 3);
  CHECK(rep.forms_checked == 10);  // b^i a^j with i+j <= 3
  CHECK(rep.injective);
  CHECK(rep.homomorphic);
  CHECK(rep.certified);
}
