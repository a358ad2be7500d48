#include "doctest.h"

#include "orm/group_words.hpp"

using namespace orm;

namespace {
Alphabet pq() { return Alphabet({"p", "q"}); }
}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  Alphabet b = pq();
  GroupWord w = parse_group_word("p q q^-1 p^-1 p", b);
  CHECK(render_group_word(free_reduce(w), b) == "p");
  CHECK(free_reduce(parse_group_word("p p^-1", b)).empty());
  CHECK(free_reduce({}).empty());
}

TEST_CASE("cyclic reduction trims conjugating ends") {
  Alphabet b = pq();
  GroupWord w = parse_group_word("p^-1 q q p", b);
  CHECK(render_group_word(cyclic_reduce(w), b) == "q^2");
}

TEST_CASE("group word parsing accepts powers and juxtaposition") {
  Alphabet b = pq();
  CHECK(render_group_word(parse_group_word("pqp", b), b) == "p q p");
  CHECK(render_group_word(parse_group_word("p^3", b), b) == "p^3");
  CHECK(render_group_word(parse_group_word("q^-2", b), b) == "q^-2");
  CHECK(parse_group_word("1", b).empty());
  CHECK_THROWS_AS(parse_group_word("z", b), InputError);
  CHECK_THROWS_AS(parse_group_word("p^x", b), InputError);
  CHECK_THROWS_AS(parse_group_word("", b), InputError);
}

TEST_CASE("inverse and concatenation compose correctly") {
  Alphabet b = pq();
  GroupWord u = parse_group_word("p q", b);
  GroupWord v = gw_inverse(u);
  CHECK(render_group_word(v, b) == "q^-1 p^-1");
  CHECK(free_reduce(gw_concat(u, v)).empty());
}

TEST_CASE("positive embedding and exponent vectors") {
  Alphabet b = pq();
  GroupWord w = from_positive({0, 1, 0});
  CHECK(render_group_word(w, b) == "p q p");
  auto e = exponent_vector(parse_group_word("p q^-1 p", b), 2);
  CHECK(e == std::vector<long long>{2, -1});
}
