#include "orm/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace orm {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::TRIVIAL: return "TRIVIAL";
    case Truth::NONTRIVIAL: return "NONTRIVIAL";
    default: return "UNKNOWN";
  }
}

const char* to_string(Method m) {
  switch (m) {
    case Method::FREE: return "FREE";
    case Method::ABELIAN: return "ABELIAN";
    case Method::DEHN: return "DEHN";
    case Method::KNUTH_BENDIX: return "KNUTH_BENDIX";
    default: return "BFS";
  }
}

const char* to_string(Eq e) {
  switch (e) {
    case Eq::EQUAL: return "EQUAL";
    case Eq::NOT_EQUAL: return "NOT_EQUAL";
    default: return "UNKNOWN";
  }
}

namespace {

// Certificate rendering that works without an alphabet (the standalone Dehn
// entry point has none): letters as s<i>, inverses with ^-1.
std::string render_raw(const GroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 's' << w[i].sym;
    if (w[i].sign < 0) out << "^-1";
  }
  return out.str();
}

std::size_t common_prefix(const GroupWord& a, std::size_t from, const GroupWord& b) {
  std::size_t n = 0;
  while (from + n < a.size() && n < b.size() && a[from + n] == b[n]) ++n;
  return n;
}

Verdict dehn_impl(const GroupWord& w, const GroupWord& relator, int exponent,
                  const Alphabet* names) {
  if (exponent < 2)
    throw UnsupportedMethod("dehn method requires a proper-power relator");
  const GroupWord r = free_reduce(relator);
  if (r.empty()) throw UnsupportedMethod("dehn method requires a nonempty relator");

  auto show = [&](const GroupWord& g) {
    return names ? render_group_word(g, *names) : render_raw(g);
  };

  const std::size_t len = r.size();
  const std::size_t majority = len / 2 + 1;
  std::vector<GroupWord> rots;
  const GroupWord rinv = gw_inverse(r);
  for (const GroupWord* base : {&r, &rinv})
    for (std::size_t i = 0; i < len; ++i) {
      GroupWord rot(base->begin() + static_cast<std::ptrdiff_t>(i), base->end());
      rot.insert(rot.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(i));
      rots.push_back(std::move(rot));
    }

  GroupWord cur = cyclic_reduce(w);
  std::ostringstream trace;
  int steps = 0;
  while (!cur.empty()) {
    std::size_t at = 0, match = 0, rot_idx = 0;
    for (std::size_t pos = 0; pos < cur.size() && match < majority; ++pos) {
      for (std::size_t ri = 0; ri < rots.size(); ++ri) {
        std::size_t n = common_prefix(cur, pos, rots[ri]);
        if (n > match) {
          at = pos;
          match = n;
          rot_idx = ri;
        }
      }
      if (match >= majority) at = pos;  // leftmost qualifying position wins
    }
    if (match < majority)
      return {Truth::NONTRIVIAL, Method::DEHN,
              "stuck at " + show(cur) + ": no factor longer than half the relator"};

    // cur = x·f·y with f·s a rotation of the relator (or its inverse), so
    // f = s⁻¹ in G and the replacement shortens the word.
    const GroupWord& rot = rots[rot_idx];
    GroupWord repl =
        gw_inverse(GroupWord(rot.begin() + static_cast<std::ptrdiff_t>(match), rot.end()));
    GroupWord next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(at));
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(at + match),
                cur.end());
    if (++steps <= 20)
      trace << "step " << steps << ": replaced " << match << " letters at " << at
            << " (rotation " << rot_idx << "); ";
    cur = cyclic_reduce(next);
  }
  return {Truth::TRIVIAL, Method::DEHN,
          trace.str() + "reduced to identity in " + std::to_string(steps) + " steps"};
}

}  // namespace

Verdict dehn_is_trivial(const GroupWord& w, const GroupWord& relator, int exponent) {
  return dehn_impl(w, relator, exponent, nullptr);
}

Verdict kb_is_trivial(const GroupWord& w, const UnitsOracle& oracle) {
  return oracle.kb_verdict(w);
}

UnitsOracle::UnitsOracle(SpecialPresentation group, OracleBudgets budgets)
    : group_(std::move(group)), budgets_(budgets) {
  relator_ = from_positive(group_.relator);
  relator_exp_ = exponent_vector(relator_, group_.alphabet.size());
  torsion_ = primitive_power(group_.relator);
}

Word UnitsOracle::to_ext(const GroupWord& w) const {
  Word out;
  out.reserve(w.size());
  for (const GLetter& l : w)
    out.push_back(2 * l.sym + (l.sign < 0 ? 1u : 0u));
  return out;
}

GroupWord UnitsOracle::from_ext(const Word& w) const {
  GroupWord out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back({s / 2, (s % 2) ? -1 : +1});
  return out;
}

std::string UnitsOracle::render(const GroupWord& w) const {
  return render_group_word(w, group_.alphabet);
}

bool UnitsOracle::abelianization_admits_trivial(const GroupWord& w) const {
  const auto e = exponent_vector(w, group_.alphabet.size());
  // e must be an integer multiple of the relator's exponent vector.
  std::size_t pivot = relator_exp_.size();
  for (std::size_t i = 0; i < relator_exp_.size(); ++i)
    if (relator_exp_[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == relator_exp_.size())
    return std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
  if (e[pivot] % relator_exp_[pivot] != 0) return false;
  const long long t = e[pivot] / relator_exp_[pivot];
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != t * relator_exp_[i]) return false;
  return true;
}

Verdict UnitsOracle::free_verdict(const GroupWord& w) const {
  GroupWord w0 = free_reduce(w);
  if (w0.empty())
    return {Truth::TRIVIAL, Method::FREE, "freely reduces to the identity"};
  if (free_reduce(relator_).empty())
    return {Truth::NONTRIVIAL, Method::FREE,
            "free group: reduced form " + render(w0) + " is nonempty"};
  return {Truth::UNKNOWN, Method::FREE, "not freely trivial"};
}

Verdict UnitsOracle::abelian_verdict(const GroupWord& w) const {
  if (!abelianization_admits_trivial(w)) {
    std::ostringstream cert;
    cert << "exponent sums (";
    const auto e = exponent_vector(w, group_.alphabet.size());
    for (std::size_t i = 0; i < e.size(); ++i) cert << (i ? "," : "") << e[i];
    cert << ") are not an integer multiple of the relator's (";
    for (std::size_t i = 0; i < relator_exp_.size(); ++i)
      cert << (i ? "," : "") << relator_exp_[i];
    cert << ")";
    return {Truth::NONTRIVIAL, Method::ABELIAN, cert.str()};
  }
  return {Truth::UNKNOWN, Method::ABELIAN, "no exponent-sum obstruction"};
}

Verdict UnitsOracle::dehn_verdict(const GroupWord& w) const {
  return dehn_impl(w, relator_, torsion_.exponent, &group_.alphabet);
}

void UnitsOracle::ensure_kb() const {
  std::call_once(kb_once_, [this] {
    std::vector<std::pair<Word, Word>> eqs;
    for (Symbol i = 0; i < group_.alphabet.size(); ++i) {
      eqs.push_back({Word{2 * i, 2 * i + 1}, Word{}});
      eqs.push_back({Word{2 * i + 1, 2 * i}, Word{}});
    }
    eqs.push_back({to_ext(relator_), Word{}});
    kb_ = kb_complete(eqs, KbBudget{budgets_.kb_inferences, budgets_.kb_seconds,
                                    budgets_.kb_max_rules});
  });
}

const KbResult& UnitsOracle::completion() const {
  ensure_kb();
  return kb_;
}

Verdict UnitsOracle::kb_verdict(const GroupWord& w) const {
  ensure_kb();
  const Word nf = kb_.reduce(to_ext(w));
  if (kb_.converged) {
    if (nf.empty())
      return {Truth::TRIVIAL, Method::KNUTH_BENDIX,
              "normal form is empty (" + std::to_string(kb_.rules.size()) +
                  " rules, convergent)"};
    return {Truth::NONTRIVIAL, Method::KNUTH_BENDIX,
            "normal form " + render(from_ext(nf)) + " under a convergent system"};
  }
  if (nf.empty())
    return {Truth::TRIVIAL, Method::KNUTH_BENDIX,
            "reduces to the identity under a partial system (" + kb_.stop_reason + ")"};
  return {Truth::UNKNOWN, Method::KNUTH_BENDIX,
          "completion stopped early: " + kb_.stop_reason};
}

void UnitsOracle::ensure_ball() const {
  std::call_once(ball_once_, [this] {
    const std::size_t radius = static_cast<std::size_t>(budgets_.bfs_radius);
    const Word rel = to_ext(relator_);
    std::vector<Word> rots;
    if (!rel.empty()) {
      Word inv;
      for (auto it = rel.rbegin(); it != rel.rend(); ++it) inv.push_back(*it ^ 1u);
      const Word* bases[2] = {&rel, &inv};
      for (const Word* base : bases)
        for (std::size_t i = 0; i < base->size(); ++i) {
          Word rot(base->begin() + static_cast<std::ptrdiff_t>(i), base->end());
          rot.insert(rot.end(), base->begin(),
                     base->begin() + static_cast<std::ptrdiff_t>(i));
          rots.push_back(std::move(rot));
        }
    }

    // Everything reachable from the empty word by inserting or deleting a
    // relator rotation or an adjacent inverse pair, within the radius.  Every
    // member represents the identity; membership proves triviality, absence
    // proves nothing.
    std::deque<Word> todo;
    ball_.insert(Word{});
    todo.push_back(Word{});
    auto visit = [&](Word w) {
      if (w.size() > radius) return;
      if (ball_.insert(w).second) todo.push_back(std::move(w));
    };
    while (!todo.empty()) {
      const Word w = std::move(todo.front());
      todo.pop_front();
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (const Word& rot : rots) {
          if (w.size() + rot.size() <= radius) {
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            nw.insert(nw.end(), rot.begin(), rot.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
            visit(std::move(nw));
          }
          if (pos + rot.size() <= w.size() &&
              std::equal(rot.begin(), rot.end(),
                         w.begin() + static_cast<std::ptrdiff_t>(pos))) {
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rot.size()),
                      w.end());
            visit(std::move(nw));
          }
        }
        if (w.size() + 2 <= radius) {
          for (Symbol s = 0; s < 2 * group_.alphabet.size(); ++s) {
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            nw.push_back(s);
            nw.push_back(s ^ 1u);
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
            visit(std::move(nw));
          }
        }
        if (pos + 2 <= w.size() && w[pos + 1] == (w[pos] ^ 1u)) {
          Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
          visit(std::move(nw));
        }
      }
    }
  });
}

Verdict UnitsOracle::bfs_verdict(const GroupWord& w) const {
  ensure_ball();
  const Word probe = to_ext(free_reduce(w));
  if (probe.size() <= static_cast<std::size_t>(budgets_.bfs_radius) &&
      ball_.count(probe))
    return {Truth::TRIVIAL, Method::BFS,
            "derivable within the radius-" + std::to_string(budgets_.bfs_radius) +
                " insertion ball"};
  return {Truth::UNKNOWN, Method::BFS, "outside the bounded derivation ball"};
}

Verdict UnitsOracle::chain(const GroupWord& w) const {
  Verdict v = free_verdict(w);
  if (v.value != Truth::UNKNOWN) return v;
  v = abelian_verdict(w);
  if (v.value != Truth::UNKNOWN) return v;
  auto checked = [this, &w](Verdict out) {
    if (out.value == Truth::TRIVIAL && !abelianization_admits_trivial(w))
      throw std::logic_error("oracle inconsistency: trivial verdict fails the "
                             "abelianization check");
    return out;
  };
  if (torsion_.exponent >= 2) return checked(dehn_verdict(w));
  v = kb_verdict(w);
  if (v.value != Truth::UNKNOWN) return checked(v);
  v = bfs_verdict(w);
  if (v.value != Truth::UNKNOWN) return checked(v);
  return {Truth::UNKNOWN, Method::BFS,
          "undecided: free, abelian, knuth-bendix and ball methods exhausted"};
}

Verdict UnitsOracle::is_trivial(const GroupWord& w) const {
  ++queries_;
  return chain(w);
}

EqVerdict UnitsOracle::equal(const GroupWord& u, const GroupWord& v) const {
  ++queries_;
  const Verdict t = chain(free_reduce(gw_concat(u, gw_inverse(v))));
  Eq e = t.value == Truth::TRIVIAL    ? Eq::EQUAL
         : t.value == Truth::NONTRIVIAL ? Eq::NOT_EQUAL
                                        : Eq::UNKNOWN;
  return {e, t.method, t.certificate};
}

}  // namespace orm
