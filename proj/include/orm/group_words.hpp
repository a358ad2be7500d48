#pragma once

#include <string>
#include <vector>

#include "orm/words.hpp"

namespace orm {

// One signed letter of a group word over some alphabet B.
struct GLetter {
  Symbol sym;
  int sign;  // +1 or -1
  bool operator==(const GLetter& o) const { return sym == o.sym && sign == o.sign; }
  bool operator!=(const GLetter& o) const { return !(*this == o); }
};

using GroupWord = std::vector<GLetter>;

GroupWord from_positive(const Word& w);
GroupWord gw_inverse(const GroupWord& w);
GroupWord gw_concat(const GroupWord& u, const GroupWord& v);

// Cancels adjacent x x^-1 pairs until none remain.
GroupWord free_reduce(GroupWord w);

// Free reduction plus stripping of matching first/last letters; the result
// is conjugate to w, so it is trivial iff w is.
GroupWord cyclic_reduce(GroupWord w);

// Letter-exponent sums, one entry per alphabet symbol.
std::vector<long long> exponent_vector(const GroupWord& w, std::size_t n_letters);

// Text form: letters joined by spaces, runs collapsed ("p^3 q^-2 p"); parse
// also accepts juxtaposed single-character positive words ("pqp").
std::string render_group_word(const GroupWord& w, const Alphabet& b);
GroupWord parse_group_word(const std::string& text, const Alphabet& b);

}  // namespace orm
