#include "orm/presentation.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace orm {

namespace {

struct Token {
  std::string text;  // one of < > | = , or a symbol/word token
  int line;
  int column;
};

bool punct_char(char c) {
  return c == '<' || c == '>' || c == '|' || c == '=' || c == ',';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (punct_char(c)) {
      out.push_back({std::string(1, c), line, col});
      ++col;
      ++i;
      continue;
    }
    int start_col = col;
    std::string tok;
    while (i < text.size() && !punct_char(text[i]) && text[i] != ' ' &&
           text[i] != '\t' && text[i] != '\r' && text[i] != '\n') {
      tok += text[i];
      ++i;
      ++col;
    }
    out.push_back({tok, line, start_col});
  }
  return out;
}

[[noreturn]] void fail(const std::string& msg, const std::vector<Token>& toks,
                       std::size_t at) {
  if (at < toks.size()) throw ParseError(msg, toks[at].line, toks[at].column);
  int line = 1, col = 1;
  if (!toks.empty()) {
    line = toks.back().line;
    col = toks.back().column + static_cast<int>(toks.back().text.size());
  }
  throw ParseError(msg, line, col);
}

}  // namespace

SpecialPresentation parse_presentation(const std::string& text) {
  auto toks = lex(text);
  std::size_t i = 0;
  auto expect = [&](const std::string& t) {
    if (i >= toks.size() || toks[i].text != t)
      fail("expected '" + t + "'", toks, i);
    ++i;
  };

  SpecialPresentation p;
  expect("<");
  // gens := token (',' token)*
  while (true) {
    if (i >= toks.size()) fail("expected generator", toks, i);
    const Token& t = toks[i];
    if (punct_char(t.text[0])) fail("expected generator", toks, i);
    try {
      p.alphabet.add(t.text);
    } catch (const InputError& e) {
      throw ParseError(e.what(), t.line, t.column);
    }
    ++i;
    if (i < toks.size() && toks[i].text == ",") {
      ++i;
      continue;
    }
    break;
  }
  expect("|");
  // word := token+ | '1'; adjacent tokens concatenate.
  Word relator;
  bool saw_token = false;
  while (i < toks.size() && !punct_char(toks[i].text[0])) {
    const Token& t = toks[i];
    Word part = p.alphabet.parse_word_at(t.text, t.line, t.column);
    relator.insert(relator.end(), part.begin(), part.end());
    saw_token = true;
    ++i;
  }
  if (!saw_token) fail("expected relator word", toks, i);
  if (relator.empty()) fail("relator must be non-empty", toks, i - 1);
  expect("=");
  expect("1");
  expect(">");
  if (i != toks.size()) fail("trailing input after '>'", toks, i);
  p.relator = std::move(relator);
  return p;
}

std::string render_presentation(const SpecialPresentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
    if (i) out += ',';
    out += p.alphabet.name(static_cast<Symbol>(i));
  }
  out += " | ";
  out += p.alphabet.render_word(p.relator);
  out += " = 1 >";
  return out;
}

SpecialPresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace orm
