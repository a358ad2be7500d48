#include "orm/kb.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

namespace orm {

namespace {

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

void splice(Word& w, std::size_t pos, std::size_t len, const Word& repl) {
  Word out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  w = std::move(out);
}

}  // namespace

Word reduce_with_rules(Word w, const std::vector<RewriteRule>& rules) {
  if (rules.empty()) return w;
  std::size_t max_lhs = 0;
  for (const auto& r : rules) max_lhs = std::max(max_lhs, r.lhs.size());
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool fired = false;
    for (const auto& r : rules) {
      if (r.lhs.empty() || !matches_at(w, pos, r.lhs)) continue;
      splice(w, pos, r.lhs.size(), r.rhs);
      // A new redex can reach back at most one lhs-length across the seam.
      pos = pos >= max_lhs ? pos - max_lhs + 1 : 0;
      fired = true;
      break;
    }
    if (!fired) ++pos;
  }
  return w;
}

namespace {

// Superpositions of the ordered pair (a, b): suffix-prefix overlaps of a.lhs
// with b.lhs, plus b.lhs occurring inside a.lhs (identical lhs counts as
// containment when the rules differ).  Emitting ordered pairs both ways
// covers the symmetric cases.
void superpose(const RewriteRule& a, const RewriteRule& b, bool same_rule,
               std::vector<std::pair<Word, Word>>& out) {
  const Word& la = a.lhs;
  const Word& lb = b.lhs;
  const std::size_t min_len = std::min(la.size(), lb.size());
  for (std::size_t k = 1; k < min_len; ++k) {
    if (!std::equal(lb.begin(), lb.begin() + static_cast<std::ptrdiff_t>(k),
                    la.end() - static_cast<std::ptrdiff_t>(k)))
      continue;
    // Superposed word la · lb[k..]; rewrite with a at 0 or with b at |la|-k.
    Word left = a.rhs;
    left.insert(left.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    Word right(la.begin(), la.end() - static_cast<std::ptrdiff_t>(k));
    right.insert(right.end(), b.rhs.begin(), b.rhs.end());
    out.emplace_back(std::move(left), std::move(right));
  }
  if (same_rule || lb.size() > la.size()) return;
  for (std::size_t i = 0; i + lb.size() <= la.size(); ++i) {
    if (!matches_at(la, i, lb)) continue;
    Word right(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(i));
    right.insert(right.end(), b.rhs.begin(), b.rhs.end());
    right.insert(right.end(), la.begin() + static_cast<std::ptrdiff_t>(i + lb.size()),
                 la.end());
    out.emplace_back(a.rhs, std::move(right));
  }
}

}  // namespace

std::vector<std::pair<Word, Word>> superposition_pairs(
    const std::vector<RewriteRule>& rules) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j)
      superpose(rules[i], rules[j], i == j, out);
  return out;
}

KbResult kb_complete(const std::vector<std::pair<Word, Word>>& equations,
                     const KbBudget& budget) {
  using clock = std::chrono::steady_clock;
  const auto deadline =
      clock::now() + std::chrono::duration_cast<clock::duration>(
                         std::chrono::duration<double>(budget.max_seconds));

  KbResult res;
  std::vector<RewriteRule> rules;       // slot list; inactive slots have empty lhs
  std::vector<bool> active;
  std::deque<std::pair<Word, Word>> agenda(equations.begin(), equations.end());

  auto active_rules = [&]() {
    std::vector<RewriteRule> out;
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (active[i]) out.push_back(rules[i]);
    return out;
  };
  auto normalize = [&](Word w) {
    // Inline variant of reduce_with_rules over the slot list.
    std::size_t max_lhs = 1;
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (active[i]) max_lhs = std::max(max_lhs, rules[i].lhs.size());
    std::size_t pos = 0;
    while (pos < w.size()) {
      bool fired = false;
      for (std::size_t i = 0; i < rules.size() && !fired; ++i) {
        if (!active[i] || !matches_at(w, pos, rules[i].lhs)) continue;
        splice(w, pos, rules[i].lhs.size(), rules[i].rhs);
        pos = pos >= max_lhs ? pos - max_lhs + 1 : 0;
        fired = true;
      }
      if (!fired) ++pos;
    }
    return w;
  };

  // Lazy pair cursor: superpositions of rule j against rules 0..j are
  // scheduled by walking (j, i) forward; new rules only extend the walk.
  std::size_t cursor_j = 0, cursor_i = 0;

  auto out_of_budget = [&](const char* why) {
    res.stop_reason = why;
    res.rules = active_rules();
    res.converged = false;
    return res;
  };

  while (true) {
    if (res.inferences >= budget.max_inferences)
      return out_of_budget("inference budget");
    if (clock::now() >= deadline) return out_of_budget("time budget");

    std::pair<Word, Word> eq;
    if (!agenda.empty()) {
      eq = std::move(agenda.front());
      agenda.pop_front();
    } else if (cursor_j < rules.size()) {
      // Materialize the next batch of superpositions and loop around.
      if (active[cursor_j] && active[cursor_i]) {
        std::vector<std::pair<Word, Word>> pairs;
        superpose(rules[cursor_j], rules[cursor_i], cursor_j == cursor_i, pairs);
        if (cursor_i != cursor_j)
          superpose(rules[cursor_i], rules[cursor_j], false, pairs);
        for (auto& p : pairs) agenda.push_back(std::move(p));
      }
      if (++cursor_i > cursor_j) {
        cursor_i = 0;
        ++cursor_j;
      }
      continue;
    } else {
      res.stop_reason = "converged";
      res.converged = true;
      res.rules = active_rules();
      return res;
    }

    ++res.inferences;
    Word u = normalize(std::move(eq.first));
    Word v = normalize(std::move(eq.second));
    if (u == v) continue;
    if (shortlex_less(u, v)) std::swap(u, v);
    RewriteRule fresh{std::move(u), std::move(v)};

    if (rules.size() >= budget.max_rules) return out_of_budget("rule budget");

    // Interreduce: any rule whose lhs contains the new lhs goes back to the
    // agenda as an equation; surviving rhs sides are renormalized later by
    // normalize() on demand (rhs staleness never breaks soundness, only
    // canonicity, and the final pass below tidies it).
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!active[i]) continue;
      bool contains = false;
      for (std::size_t p = 0; p + fresh.lhs.size() <= rules[i].lhs.size() && !contains;
           ++p)
        contains = matches_at(rules[i].lhs, p, fresh.lhs);
      if (contains) {
        active[i] = false;
        agenda.emplace_back(rules[i].lhs, rules[i].rhs);
      }
    }
    rules.push_back(std::move(fresh));
    active.push_back(true);
  }
}

}  // namespace orm
