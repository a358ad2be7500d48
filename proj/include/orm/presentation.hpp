#pragma once

#include <string>

#include "orm/words.hpp"

namespace orm {

// One special relation w = 1 over an ordered alphabet.
struct SpecialPresentation {
  Alphabet alphabet;
  Word relator;
};

// Text format:  < a,b,c | abacab = 1 >
// Generators are comma-separated tokens; the relator is one or more word
// tokens (juxtaposed single letters, or '.'-separated multi-char symbols).
SpecialPresentation parse_presentation(const std::string& text);

// Bit-exact inverse of parse_presentation on its own output: single spaces
// around '|' and '=', generators joined by ',' without spaces.
std::string render_presentation(const SpecialPresentation& p);

SpecialPresentation load_presentation_file(const std::string& path);

}  // namespace orm
