#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace orm {

using Symbol = std::uint32_t;

// A word is a sequence of symbol indices into some Alphabet.  The empty
// vector is the identity.  Graphical equality is plain operator==.
using Word = std::vector<Symbol>;

enum class Ordering { LT, EQ, GT };

// Error in user-supplied text, with a 1-based position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

// Violated call contract (bad word, bad piece set, rank mismatch, ...).
// Kept distinct from ParseError only so the CLI can phrase messages better;
// both map to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered set of distinct printable tokens.  Declaration order is the
// alphabet order and therefore fixes the shortlex order on words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& symbols) {
    for (const auto& s : symbols) add(s);
  }

  Symbol add(const std::string& name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& symbols() const { return names_; }

  std::optional<Symbol> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains_word(const Word& w) const {
    for (Symbol s : w)
      if (s >= names_.size()) return false;
    return true;
  }

  // All symbols are single characters; then words render without separators.
  bool all_single_char() const;

  // Renders the empty word as "1".  Multi-character symbols are joined with
  // '.'; otherwise letters are juxtaposed.
  std::string render_word(const Word& w) const;

  // Accepts the three shapes render_word can produce plus explicit '.'
  // separation, and a lone symbol name.  Throws InputError on anything else.
  Word parse_word(const std::string& text) const;

  // Same, but failure becomes a ParseError carrying the given position.
  Word parse_word_at(const std::string& text, int line, int column) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

// Shortlex: length first, then lexicographic by symbol index.
Ordering shortlex_compare(const Word& u, const Word& v);
// Checked variant: both words must be over A.
Ordering shortlex_compare(const Word& u, const Word& v, const Alphabet& a);
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const {
    return shortlex_less(u, v);
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : w) {
      h ^= s + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
// u occurs in v as a contiguous factor with u != v.
bool is_proper_factor(const Word& u, const Word& v);
Word concat(const Word& u, const Word& v);

// Largest k with w ≡ root^k, together with that root.  The empty word has
// exponent 1 and empty root.
struct PowerDecomposition {
  Word root;
  int exponent;
};
PowerDecomposition primitive_power(const Word& w);

// No element of the set is a proper prefix of another element.
bool is_prefix_code(const std::vector<Word>& code);

// Unique factorization of w over a prefix code, or nullopt when w is not in
// the code's submonoid.  The code is re-checked; a non-code input is an
// InputError rather than a wrong answer.
std::optional<std::vector<Word>> prefix_code_factor(const Word& w,
                                                    const std::vector<Word>& code);

}  // namespace orm
