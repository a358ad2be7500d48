#include "orm/group_words.hpp"

#include <sstream>

namespace orm {

GroupWord from_positive(const Word& w) {
  GroupWord g;
  g.reserve(w.size());
  for (Symbol s : w) g.push_back({s, +1});
  return g;
}

GroupWord gw_inverse(const GroupWord& w) {
  GroupWord g;
  g.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) g.push_back({it->sym, -it->sign});
  return g;
}

GroupWord gw_concat(const GroupWord& u, const GroupWord& v) {
  GroupWord g = u;
  g.insert(g.end(), v.begin(), v.end());
  return g;
}

GroupWord free_reduce(GroupWord w) {
  GroupWord out;
  for (const GLetter& l : w) {
    if (!out.empty() && out.back().sym == l.sym && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().sym == w.back().sym &&
         w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(std::move(w));
  }
  return w;
}

std::vector<long long> exponent_vector(const GroupWord& w, std::size_t n_letters) {
  std::vector<long long> v(n_letters, 0);
  for (const GLetter& l : w) v.at(l.sym) += l.sign;
  return v;
}

std::string render_group_word(const GroupWord& w, const Alphabet& b) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long run = static_cast<long long>(j - i) * w[i].sign;
    if (!first) out << ' ';
    first = false;
    out << b.name(w[i].sym);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

namespace {

void append_power(GroupWord& g, Symbol s, long long e) {
  int sign = e < 0 ? -1 : +1;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k) g.push_back({s, sign});
}

}  // namespace

GroupWord parse_group_word(const std::string& text, const Alphabet& b) {
  GroupWord g;
  std::istringstream in(text);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok == "1") continue;
    std::string base = tok;
    long long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stoll(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw InputError("bad exponent '" + e + "' in group word");
      }
    }
    if (auto s = b.find(base)) {
      append_power(g, *s, exp);
      continue;
    }
    // Juxtaposed single-character positive letters, e.g. "pqp".
    if (caret == std::string::npos) {
      GroupWord part;
      bool ok = true;
      for (char c : base) {
        auto s = b.find(std::string(1, c));
        if (!s) {
          ok = false;
          break;
        }
        part.push_back({*s, +1});
      }
      if (ok) {
        g.insert(g.end(), part.begin(), part.end());
        continue;
      }
    }
    throw InputError("unknown group letter '" + base + "'");
  }
  if (!any) throw InputError("empty group word (use \"1\" for the identity)");
  return g;
}

}  // namespace orm
