#include "orm/welc.hpp"

#include <algorithm>
#include <sstream>

namespace orm {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Lines of the directive file: ';' doubles as a line break, '#' comments.
std::vector<std::string> directive_lines(const std::string& text) {
  std::string flat = text;
  std::replace(flat.begin(), flat.end(), ';', '\n');
  std::vector<std::string> lines;
  std::istringstream in(flat);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

void check_name(const std::string& name) {
  if (name == "1" || name.find('=') != std::string::npos ||
      name.find('<') != std::string::npos)
    throw InputError("bad symbol name '" + name + "'");
}

}  // namespace

WelcSystem parse_welc(const std::string& text) {
  WelcSystem sys;
  std::vector<std::pair<bool, std::string>> bodies;  // is_constraint, rhs-of-colon
  for (const std::string& line : directive_lines(text)) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw InputError("expected a directive, got '" + line + "'");
    const std::string head = trim(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    // Declaration lists read with or without commas.
    if (head == "vars" || head == "gens" || head == "weights")
      std::replace(rest.begin(), rest.end(), ',', ' ');
    if (head == "vars" || head == "gens") {
      auto& names = head == "vars" ? sys.variables : sys.generators;
      for (const std::string& tok : tokenize(rest)) {
        check_name(tok);
        if (std::find(names.begin(), names.end(), tok) != names.end())
          throw InputError("duplicate declaration of '" + tok + "'");
        names.push_back(tok);
      }
    } else if (head == "weights") {
      for (const std::string& tok : tokenize(rest)) {
        try {
          sys.weights.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw InputError("bad weight '" + tok + "'");
        }
      }
    } else if (head == "eq" || head == "len") {
      bodies.emplace_back(head == "len", rest);
    } else {
      throw InputError("unknown directive '" + head + "'");
    }
  }
  if (sys.generators.empty()) throw InputError("no generators declared");
  if (!sys.weights.empty() && sys.weights.size() != sys.generators.size())
    throw InputError("weight count does not match generator count");
  for (const std::string& v : sys.variables)
    if (std::find(sys.generators.begin(), sys.generators.end(), v) !=
        sys.generators.end())
      throw InputError("'" + v + "' declared as both variable and generator");

  auto parse_term = [&](const std::string& s) {
    WelcTerm term;
    for (const std::string& tok : tokenize(s)) {
      if (tok == "1") continue;
      auto vi = std::find(sys.variables.begin(), sys.variables.end(), tok);
      if (vi != sys.variables.end()) {
        term.push_back({true, static_cast<std::size_t>(vi - sys.variables.begin())});
        continue;
      }
      auto gi = std::find(sys.generators.begin(), sys.generators.end(), tok);
      if (gi == sys.generators.end())
        throw InputError("undeclared symbol '" + tok + "'");
      term.push_back({false, static_cast<std::size_t>(gi - sys.generators.begin())});
    }
    return term;
  };

  for (const auto& [is_len, body] : bodies) {
    const std::string sep = is_len ? "<=" : "=";
    const std::size_t at = body.find(sep);
    if (at == std::string::npos ||
        body.find(sep, at + sep.size()) != std::string::npos)
      throw InputError("expected exactly one '" + sep + "' in '" + trim(body) + "'");
    auto sides = std::make_pair(parse_term(body.substr(0, at)),
                                parse_term(body.substr(at + sep.size())));
    (is_len ? sys.constraints : sys.equations).push_back(std::move(sides));
  }
  return sys;
}

namespace {

std::string render_term(const WelcSystem& sys, const WelcTerm& t) {
  if (t.empty()) return "1";
  std::string out;
  for (const WelcItem& it : t) {
    if (!out.empty()) out += ' ';
    out += it.is_var ? sys.variables[it.index] : sys.generators[it.index];
  }
  return out;
}

}  // namespace

std::string render_welc(const WelcSystem& sys) {
  std::ostringstream out;
  if (!sys.variables.empty()) {
    out << "vars:";
    for (const auto& v : sys.variables) out << ' ' << v;
    out << '\n';
  }
  out << "gens:";
  for (const auto& g : sys.generators) out << ' ' << g;
  out << '\n';
  if (!sys.weights.empty()) {
    out << "weights:";
    for (int w : sys.weights) out << ' ' << w;
    out << '\n';
  }
  for (const auto& [l, r] : sys.equations)
    out << "eq: " << render_term(sys, l) << " = " << render_term(sys, r) << '\n';
  for (const auto& [l, r] : sys.constraints)
    out << "len: " << render_term(sys, l) << " <= " << render_term(sys, r) << '\n';
  return out.str();
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::SAT: return "SAT";
    case SolveStatus::UNSAT_WITHIN_BOUND: return "UNSAT_WITHIN_BOUND";
    case SolveStatus::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

namespace {

WelcTerm substitute(const WelcTerm& t,
                    const std::vector<const WelcTerm*>& values) {
  WelcTerm out;
  for (const WelcItem& it : t) {
    if (!it.is_var) {
      out.push_back(it);
    } else {
      const WelcTerm& v = *values[it.index];
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

long long weighted_len(const WelcTerm& flat, const std::vector<int>& lambda) {
  long long n = 0;
  for (const WelcItem& it : flat) n += lambda[it.index];
  return n;
}

bool satisfies(const WelcSystem& sys, const std::vector<const WelcTerm*>& values,
               const std::vector<int>& lambda) {
  for (const auto& [l, r] : sys.equations)
    if (substitute(l, values) != substitute(r, values)) return false;
  for (const auto& [l, r] : sys.constraints)
    if (weighted_len(substitute(l, values), lambda) >
        weighted_len(substitute(r, values), lambda))
      return false;
  return true;
}

std::vector<int> profile(const WelcSystem& sys) {
  if (!sys.weights.empty()) return sys.weights;
  return std::vector<int>(sys.generators.size(), 1);
}

}  // namespace

WelcResult brute_force_welc(const WelcSystem& sys, int bound) {
  const std::vector<int> lambda = profile(sys);
  // All generator words up to the bound, shortest first, index-lex inside a
  // length (which is shortlex for the abstract alphabet in declared order).
  std::vector<WelcTerm> pool{WelcTerm{}};
  std::size_t prev_begin = 0;
  for (int len = 1; len <= bound; ++len) {
    const std::size_t prev_end = pool.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i)
      for (std::size_t g = 0; g < sys.generators.size(); ++g) {
        WelcTerm t = pool[i];
        t.push_back({false, g});
        pool.push_back(std::move(t));
      }
    prev_begin = prev_end;
  }

  WelcResult res;
  const std::size_t nv = sys.variables.size();
  std::vector<std::size_t> pick(nv, 0);
  std::vector<const WelcTerm*> values(nv, nullptr);
  while (true) {
    for (std::size_t i = 0; i < nv; ++i) values[i] = &pool[pick[i]];
    ++res.assignments;
    if (satisfies(sys, values, lambda)) {
      res.status = SolveStatus::SAT;
      for (std::size_t i = 0; i < nv; ++i)
        res.witness.emplace(sys.variables[i], *values[i]);
      return res;
    }
    // Declaration-order odometer: last variable spins fastest.
    std::size_t k = nv;
    while (k > 0) {
      if (++pick[k - 1] < pool.size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  res.status = SolveStatus::UNSAT_WITHIN_BOUND;
  return res;
}

bool welc_assignment_satisfies(const WelcSystem& sys,
                               const std::map<std::string, WelcTerm>& assign) {
  std::vector<const WelcTerm*> values;
  for (const std::string& v : sys.variables) {
    auto it = assign.find(v);
    if (it == assign.end())
      throw InputError("assignment is missing variable '" + v + "'");
    for (const WelcItem& item : it->second)
      if (item.is_var) throw InputError("assignment values must be generator words");
    values.push_back(&it->second);
  }
  return satisfies(sys, values, profile(sys));
}

std::pair<MonoidEqSystem, CompilationRecord> compile(const WelcSystem& sys,
                                                     const WeightedSignature& sig,
                                                     const SpecialPresentation& base,
                                                     Symbol a) {
  if (sys.rank() > sig.rank)
    throw InputError("system rank exceeds the signature rank");
  const std::vector<int> lambda = profile(sys);
  for (int i = 0; i < sys.rank(); ++i)
    if (lambda[static_cast<std::size_t>(i)] != sig.weights[static_cast<std::size_t>(i)])
      throw InputError(sys.weights.empty()
                           ? "unit weight profile needs an all-ones signature"
                           : "weight profile disagrees with the signature");
  for (const std::string& v : sys.variables)
    if (v.rfind("__", 0) == 0)
      throw InputError("variable names starting with __ are reserved");

  MonoidEqSystem out;
  out.base = base;
  CompilationRecord rec;
  for (int i = 0; i < sys.rank(); ++i) {
    rec.generator_map.push_back(sig.basis[static_cast<std::size_t>(i)]);
    rec.lambda.push_back(sig.weights[static_cast<std::size_t>(i)]);
  }

  // Companion-first variable order: a gadget equation y·x = 1 mentions both
  // early, so the solver prunes before touching later variables.
  std::vector<std::size_t> var_at;  // original index -> slot in out.variables
  for (const std::string& v : sys.variables) {
    rec.domain_gadgets.push_back("__f_" + v);
    out.variables.push_back("__f_" + v);
    var_at.push_back(out.variables.size());
    out.variables.push_back(v);
  }
  for (std::size_t c = 0; c < sys.constraints.size(); ++c) {
    rec.constraint_gadgets.push_back("__c_" + std::to_string(c));
    out.variables.push_back("__c_" + std::to_string(c));
  }

  auto letter = [](Symbol s) { return MItem{false, s, 0}; };
  auto var = [](std::size_t i) { return MItem{true, 0, i}; };
  auto subst = [&](const WelcTerm& t) {
    MTerm m;
    for (const WelcItem& it : t) {
      if (it.is_var) {
        m.push_back(var(var_at[it.index]));
      } else {
        for (Symbol s : rec.generator_map[it.index]) m.push_back(letter(s));
      }
    }
    return m;
  };

  for (std::size_t i = 0; i < sys.variables.size(); ++i) {
    const std::size_t y = var_at[i] - 1;
    out.equations.push_back({MTerm{letter(a), var(y)}, MTerm{var(y), letter(a)}});
    out.equations.push_back({MTerm{var(y), var(var_at[i])}, MTerm{}});
  }
  for (const auto& [l, r] : sys.equations)
    out.equations.push_back({subst(l), subst(r)});
  const std::size_t first_t = sys.variables.size() * 2;
  for (std::size_t c = 0; c < sys.constraints.size(); ++c) {
    const std::size_t t = first_t + c;
    const MTerm u = subst(sys.constraints[c].first);
    const MTerm v = subst(sys.constraints[c].second);
    out.equations.push_back({MTerm{letter(a), var(t)}, MTerm{var(t), letter(a)}});
    MTerm tu{var(t)};
    tu.insert(tu.end(), u.begin(), u.end());
    MTerm atu{letter(a)};
    atu.insert(atu.end(), tu.begin(), tu.end());
    MTerm tua = tu;
    tua.push_back(letter(a));
    out.equations.push_back({std::move(atu), std::move(tua)});
    MTerm tv{var(t)};
    tv.insert(tv.end(), v.begin(), v.end());
    out.equations.push_back({std::move(tv), MTerm{}});
  }
  return {std::move(out), std::move(rec)};
}

std::optional<std::map<std::string, WelcTerm>> decompile_witness(
    const std::map<std::string, Word>& witness, const WelcSystem& sys,
    const CompilationRecord& rec) {
  std::map<std::string, WelcTerm> out;
  for (std::size_t vi = 0; vi < sys.variables.size(); ++vi) {
    auto it = witness.find(sys.variables[vi]);
    if (it == witness.end()) return std::nullopt;
    const Word& w = it->second;
    const std::size_t n = w.size();
    std::vector<int> parent(n + 1, -1);
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t g = 0; g < rec.generator_map.size() && !reach[i]; ++g) {
        const Word& b = rec.generator_map[g];
        if (b.size() > i || !reach[i - b.size()]) continue;
        if (std::equal(b.begin(), b.end(),
                       w.begin() + static_cast<std::ptrdiff_t>(i - b.size()))) {
          reach[i] = 1;
          parent[i] = static_cast<int>(g);
        }
      }
    if (!reach[n]) return std::nullopt;
    WelcTerm term;
    for (std::size_t i = n; i > 0;) {
      const std::size_t g = static_cast<std::size_t>(parent[i]);
      term.push_back({false, g});
      i -= rec.generator_map[g].size();
    }
    std::reverse(term.begin(), term.end());
    out.emplace(sys.variables[vi], std::move(term));
  }
  return out;
}

MonoidEqSystem parse_eq_system(const std::string& text, SpecialPresentation base) {
  MonoidEqSystem sys;
  sys.base = std::move(base);
  std::vector<std::string> eq_bodies;
  for (const std::string& line : directive_lines(text)) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw InputError("expected a directive, got '" + line + "'");
    const std::string head = trim(line.substr(0, colon));
    const std::string rest = line.substr(colon + 1);
    if (head == "vars") {
      for (const std::string& tok : tokenize(rest)) {
        if (std::find(sys.variables.begin(), sys.variables.end(), tok) !=
            sys.variables.end())
          throw InputError("duplicate declaration of '" + tok + "'");
        sys.variables.push_back(tok);
      }
    } else if (head == "eq") {
      eq_bodies.push_back(rest);
    } else {
      throw InputError("directive '" + head + "' is not valid in an equation file");
    }
  }
  auto parse_term = [&](const std::string& s) {
    MTerm term;
    for (const std::string& tok : tokenize(s)) {
      if (tok == "1") continue;
      auto vi = std::find(sys.variables.begin(), sys.variables.end(), tok);
      if (vi != sys.variables.end()) {
        term.push_back({true, 0, static_cast<std::size_t>(vi - sys.variables.begin())});
        continue;
      }
      for (Symbol s2 : sys.base.alphabet.parse_word(tok))
        term.push_back({false, s2, 0});
    }
    return term;
  };
  for (const std::string& body : eq_bodies) {
    const std::size_t at = body.find('=');
    if (at == std::string::npos || body.find('=', at + 1) != std::string::npos)
      throw InputError("expected exactly one '=' in '" + trim(body) + "'");
    sys.equations.emplace_back(parse_term(body.substr(0, at)),
                               parse_term(body.substr(at + 1)));
  }
  return sys;
}

std::string render_eq_system(const MonoidEqSystem& sys) {
  std::ostringstream out;
  if (!sys.variables.empty()) {
    out << "vars:";
    for (const auto& v : sys.variables) out << ' ' << v;
    out << '\n';
  }
  auto render_term = [&](const MTerm& t) {
    if (t.empty()) return std::string("1");
    std::string s;
    Word run;
    auto flush = [&]() {
      if (run.empty()) return;
      if (!s.empty()) s += ' ';
      s += sys.base.alphabet.render_word(run);
      run.clear();
    };
    for (const MItem& it : t) {
      if (!it.is_var) {
        run.push_back(it.letter);
        continue;
      }
      flush();
      if (!s.empty()) s += ' ';
      s += sys.variables[it.var];
    }
    flush();
    return s;
  };
  for (const auto& [l, r] : sys.equations)
    out << "eq: " << render_term(l) << " = " << render_term(r) << '\n';
  return out.str();
}

}  // namespace orm
