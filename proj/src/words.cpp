#include "orm/words.hpp"

#include <algorithm>
#include <cctype>

namespace orm {

namespace {

// Characters that can never appear inside a generator token: they are either
// grammar punctuation or whitespace.
bool reserved_char(char c) {
  switch (c) {
    case '<':
    case '>':
    case '|':
    case '=':
    case ',':
    case '.':
    case ' ':
    case '\t':
    case '\r':
    case '\n':
      return true;
    default:
      return false;
  }
}

}  // namespace

Symbol Alphabet::add(const std::string& name) {
  if (name.empty()) throw InputError("empty generator name");
  if (name == "1")
    throw InputError("'1' denotes the empty word and cannot be a generator");
  for (char c : name) {
    if (reserved_char(c) || !std::isprint(static_cast<unsigned char>(c)))
      throw InputError("generator name '" + name + "' contains a reserved or unprintable character");
  }
  if (index_.count(name))
    throw InputError("duplicate generator '" + name + "'");
  Symbol s = static_cast<Symbol>(names_.size());
  names_.push_back(name);
  index_.emplace(name, s);
  return s;
}

bool Alphabet::all_single_char() const {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

std::string Alphabet::render_word(const Word& w) const {
  if (w.empty()) return "1";
  bool dotted = false;
  for (Symbol s : w)
    if (name(s).size() != 1) dotted = true;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dotted && i) out += '.';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse_word(const std::string& text) const {
  if (text.empty()) throw InputError("empty word token");
  if (text == "1") return {};
  Word w;
  if (text.find('.') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t dot = text.find('.', pos);
      std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
      auto s = find(tok);
      if (!s) throw InputError("unknown symbol '" + tok + "'");
      w.push_back(*s);
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
    return w;
  }
  // Whole token is a symbol (covers multi-character generators given alone).
  if (auto s = find(text)) return {*s};
  // Juxtaposed single-character symbols.
  for (char c : text) {
    auto s = find(std::string(1, c));
    if (!s)
      throw InputError("unknown symbol '" + std::string(1, c) + "' in word '" + text + "'");
    w.push_back(*s);
  }
  return w;
}

Word Alphabet::parse_word_at(const std::string& text, int line, int column) const {
  try {
    return parse_word(text);
  } catch (const InputError& e) {
    throw ParseError(e.what(), line, column);
  }
}

Ordering shortlex_compare(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? Ordering::LT : Ordering::GT;
  if (u < v) return Ordering::LT;
  if (v < u) return Ordering::GT;
  return Ordering::EQ;
}

Ordering shortlex_compare(const Word& u, const Word& v, const Alphabet& a) {
  if (!a.contains_word(u) || !a.contains_word(v))
    throw InputError("word uses symbols outside the alphabet");
  return shortlex_compare(u, v);
}

bool shortlex_less(const Word& u, const Word& v) {
  return shortlex_compare(u, v) == Ordering::LT;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

bool is_proper_factor(const Word& u, const Word& v) {
  if (u.size() >= v.size()) return false;
  if (u.empty()) return true;
  auto it = std::search(v.begin(), v.end(), u.begin(), u.end());
  return it != v.end();
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

PowerDecomposition primitive_power(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return {Word{}, 1};
  // Try periods in increasing order; the first that tiles w gives the
  // maximal exponent.
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool tiles = true;
    for (std::size_t i = period; i < n && tiles; ++i)
      tiles = (w[i] == w[i - period]);
    if (tiles)
      return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period)),
              static_cast<int>(n / period)};
  }
  return {w, 1};  // unreachable: period == n always tiles
}

bool is_prefix_code(const std::vector<Word>& code) {
  for (const Word& w : code)
    if (w.empty()) return false;
  std::vector<Word> sorted = code;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) continue;  // duplicates don't break prefix-freeness
    if (is_prefix(sorted[i], sorted[i + 1])) return false;
  }
  return true;
}

std::optional<std::vector<Word>> prefix_code_factor(const Word& w,
                                                    const std::vector<Word>& code) {
  if (!is_prefix_code(code))
    throw InputError("factorization base is not a prefix code");
  std::vector<Word> factors;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const Word* hit = nullptr;
    for (const Word& c : code) {
      if (pos + c.size() <= w.size() &&
          std::equal(c.begin(), c.end(), w.begin() + pos)) {
        hit = &c;  // at most one match: prefix code
        break;
      }
    }
    if (!hit) return std::nullopt;
    factors.push_back(*hit);
    pos += hit->size();
  }
  return factors;
}

}  // namespace orm
