#include "orm/inverses.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace orm {

namespace {

std::size_t leading_run(const Word& w, Symbol a) {
  std::size_t r = 0;
  while (r < w.size() && w[r] == a) ++r;
  return r;
}

// Shortlex-least product of pieces whose image inverts `target_letter` in the
// group of units.  Enumerates the piece submonoid by flattened shortlex via a
// heap (unique generation: pieces form a prefix code, so each product has a
// unique final piece).  Absent when the length cap is hit first; `certified`
// goes false if an undecided triviality query was skipped on the way.
std::optional<Word> find_inverse_word(const PieceDecomposition& d,
                                      Symbol target_letter,
                                      const UnitsOracle& oracle,
                                      std::size_t max_len, bool& certified) {
  using Item = std::pair<Word, Word>;  // flattened, image
  auto greater = [](const Item& x, const Item& y) {
    return shortlex_less(y.first, x.first);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> heap(greater);
  heap.push({Word{}, Word{}});
  while (!heap.empty()) {
    Item cur = heap.top();
    heap.pop();
    if (cur.first.size() > max_len) break;
    Word probe;
    probe.push_back(target_letter);
    probe.insert(probe.end(), cur.second.begin(), cur.second.end());
    const GroupWord gw = from_positive(probe);
    if (oracle.abelianization_admits_trivial(gw)) {
      const Verdict v = oracle.is_trivial(gw);
      if (v.value == Truth::TRIVIAL) return cur.first;
      if (v.value == Truth::UNKNOWN) certified = false;
    }
    for (const Word& piece : d.delta) {
      if (cur.first.size() + piece.size() > max_len) continue;
      Word flat = cur.first;
      flat.insert(flat.end(), piece.begin(), piece.end());
      Word img = cur.second;
      img.push_back(d.piece_letter.at(piece));
      heap.push({std::move(flat), std::move(img)});
    }
  }
  return std::nullopt;
}

}  // namespace

InverseTable compute_X(const PieceDecomposition& d, Symbol a, ReductionContext& ctx,
                       bool require_witness) {
  std::size_t starters = 0;
  for (const Word& piece : d.delta)
    if (!piece.empty() && piece.front() == a) ++starters;
  if (require_witness && starters < 2)
    throw InputError("chosen letter does not start two distinct pieces");

  InverseTable table;
  table.a = a;
  std::size_t rel_len = 0;
  for (const Word& p : d.pieces) rel_len += p.size();
  const std::size_t eta_cap = 2 * d.pieces.size() * rel_len;

  std::size_t max_run = 0;
  for (const Word& piece : d.delta)
    max_run = std::max(max_run, leading_run(piece, a));
  table.m = static_cast<int>(max_run);

  // One inverse search per piece; every j-layer of that piece reuses it.
  std::unordered_map<Word, std::pair<std::optional<Word>, bool>, WordHash> eta_of;
  for (const Word& piece : d.delta) {
    if (leading_run(piece, a) == 0) continue;
    bool cert = true;
    auto eta = find_inverse_word(d, d.piece_letter.at(piece), ctx.oracle(),
                                 eta_cap, cert);
    eta_of.emplace(piece, std::make_pair(std::move(eta), cert));
  }

  for (int j = 1; j <= table.m; ++j) {
    for (const Word& piece : d.delta) {
      if (leading_run(piece, a) < static_cast<std::size_t>(j)) continue;
      InverseEntry entry;
      entry.j = j;
      entry.beta.assign(piece.begin() + j, piece.end());
      const auto& [eta, cert] = eta_of.at(piece);
      if (!eta) {
        entry.certified = false;  // search exhausted; nothing usable
        table.certified = false;
        table.entries.push_back(std::move(entry));
        continue;
      }
      entry.eta = *eta;
      entry.certified = cert;
      entry.x_word = concat(entry.beta, entry.eta);
      const ReductionResult r = ctx.reduce(entry.x_word);
      if (r.word != entry.x_word) {
        // A fired rewrite is sound, so this contradicts irreducibility of the
        // inverse words — impossible under the rank-two hypotheses.
        if (require_witness)
          throw std::logic_error("right-inverse word is reducible");
        entry.certified = false;
      } else if (!r.certified) {
        entry.certified = false;
      }
      if (!entry.certified) table.certified = false;
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

std::optional<int> weight(const Word& w, const InverseTable& table,
                          ReductionContext& ctx, bool* certified) {
  if (certified) *certified = true;
  if (w.empty()) return 0;
  bool saw_unknown = false;
  const std::size_t bound = static_cast<std::size_t>(table.m) * w.size();
  Word probe;
  for (std::size_t i = 1; i <= bound; ++i) {
    probe.assign(i, table.a);
    probe.insert(probe.end(), w.begin(), w.end());
    const EqualityResult eq = ctx.equal(probe, Word{});
    if (eq.value == Eq::EQUAL) return static_cast<int>(i);
    if (eq.value == Eq::UNKNOWN) saw_unknown = true;
  }
  if (certified) *certified = !saw_unknown;
  return std::nullopt;
}

WeightedSignature compute_basis(InverseTable& table,
                                const ConditionReport* conditions) {
  std::vector<Word> xs;
  std::unordered_map<Word, int, WordHash> j_of;
  for (const InverseEntry& e : table.entries) {
    if (e.x_word.empty()) continue;
    auto [it, fresh] = j_of.emplace(e.x_word, e.j);
    if (fresh)
      xs.push_back(e.x_word);
    else if (it->second != e.j)
      throw std::logic_error("one inverse word with two distinct weights");
  }
  std::unordered_set<Word, WordHash> xset(xs.begin(), xs.end());

  table.basis.clear();
  table.weights.clear();
  for (const Word& x : xs) {
    const std::size_t n = x.size();
    // pre[i]: x[0..i) is a nonempty product of table words; suf[i] likewise
    // for x[i..n).  x is composite iff some interior cut satisfies both.
    std::vector<char> pre(n + 1, 0), suf(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      for (const Word& y : xs) {
        if (y.size() > i) continue;
        if (!std::equal(y.begin(), y.end(),
                        x.begin() + static_cast<std::ptrdiff_t>(i - y.size())))
          continue;
        if (i == y.size() || pre[i - y.size()]) {
          pre[i] = 1;
          break;
        }
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      for (const Word& y : xs) {
        if (y.size() > n - i) continue;
        if (!std::equal(y.begin(), y.end(),
                        x.begin() + static_cast<std::ptrdiff_t>(i)))
          continue;
        if (i + y.size() == n || suf[i + y.size()]) {
          suf[i] = 1;
          break;
        }
      }
    }
    bool composite = false;
    for (std::size_t cut = 1; cut < n && !composite; ++cut)
      composite = pre[cut] && suf[cut];
    if (!composite) table.basis.push_back(x);
  }
  std::sort(table.basis.begin(), table.basis.end(), ShortlexLess{});
  for (const Word& b : table.basis) table.weights.emplace(b, j_of.at(b));

  if (conditions && conditions->c1 && conditions->c2() && table.basis.size() < 2)
    throw std::logic_error("basis rank below two despite the rank hypotheses");

  WeightedSignature sig;
  sig.rank = static_cast<int>(table.basis.size());
  sig.basis = table.basis;
  for (const Word& b : table.basis) sig.weights.push_back(table.weights.at(b));
  return sig;
}

std::optional<std::vector<Word>> factor_over_basis(const Word& w,
                                                   const InverseTable& table) {
  const std::size_t n = w.size();
  std::vector<int> parent(n + 1, -1);  // basis index ending a block at i
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t bi = 0; bi < table.basis.size(); ++bi) {
      const Word& b = table.basis[bi];
      if (b.size() > i || !reach[i - b.size()]) continue;
      if (!std::equal(b.begin(), b.end(),
                      w.begin() + static_cast<std::ptrdiff_t>(i - b.size())))
        continue;
      reach[i] = 1;
      parent[i] = static_cast<int>(bi);
      break;  // factorization is unique, first hit is the hit
    }
  }
  if (!reach[n]) return std::nullopt;
  std::vector<Word> factors;
  for (std::size_t i = n; i > 0;) {
    const Word& b = table.basis[static_cast<std::size_t>(parent[i])];
    factors.push_back(b);
    i -= b.size();
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

PowerOfAChecks is_power_of_a(const Word& u, ReductionContext& ctx, Symbol a,
                             bool assert_agreement) {
  PowerOfAChecks out;
  out.graphical = std::all_of(u.begin(), u.end(), [&](Symbol s) { return s == a; });
  Word ua = u, au;
  ua.push_back(a);
  au.push_back(a);
  au.insert(au.end(), u.begin(), u.end());
  out.equational = ctx.equal(ua, au).value;
  if (assert_agreement && out.equational != Eq::UNKNOWN &&
      out.graphical != (out.equational == Eq::EQUAL))
    throw std::logic_error("commutation test disagrees with the literal test");
  return out;
}

NBicyclicReport n_bicyclic_view(const InverseTable& table, ReductionContext& ctx,
                                int radius) {
  NBicyclicReport rep;
  std::vector<Word> images;
  for (const InverseEntry& e : table.entries)
    if (e.j == 1 && !e.x_word.empty()) images.push_back(e.x_word);
  std::sort(images.begin(), images.end(), ShortlexLess{});
  images.erase(std::unique(images.begin(), images.end()), images.end());
  rep.generator_images = images;
  const std::size_t q = images.size();

  Alphabet na;
  const Symbol n_a = na.add("a");
  std::vector<Symbol> ds;
  for (std::size_t i = 0; i < q; ++i)
    ds.push_back(na.add("d" + std::to_string(i + 1)));
  std::vector<RewriteRule> rules;
  for (Symbol d : ds) rules.push_back({Word{n_a, d}, Word{}});
  rep.system = make_finite_system(na, rules);

  // Normal forms of the finite system: a d-word followed by an a-run.
  std::vector<Word> forms;
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= radius; ++len) {
    std::vector<Word> next;
    for (const Word& alpha : layer) {
      for (int j = 0; j + len <= radius; ++j) {
        Word f = alpha;
        f.insert(f.end(), static_cast<std::size_t>(j), n_a);
        forms.push_back(std::move(f));
      }
      for (Symbol d : ds) {
        Word g = alpha;
        g.push_back(d);
        next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  rep.forms_checked = static_cast<int>(forms.size());

  auto psi = [&](const Word& nw) {
    Word out;
    for (Symbol s : nw) {
      if (s == n_a) {
        out.push_back(table.a);
      } else {
        const Word& g = images[s - 1];  // d_i has symbol id i
        out.insert(out.end(), g.begin(), g.end());
      }
    }
    return out;
  };

  std::unordered_set<Word, WordHash> seen;
  rep.injective = true;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Word img = psi(forms[i]);
    if (!seen.insert(img).second) {
      rep.injective = false;
      rep.counterexamples.push_back("form " + std::to_string(i) +
                                    " shares its image with an earlier form");
    }
    const ReductionResult r = ctx.reduce(img);
    if (r.word != img)
      rep.counterexamples.push_back("image of form " + std::to_string(i) +
                                    " is not irreducible");
    if (!r.certified) rep.certified = false;
  }

  rep.homomorphic = true;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t k = 0; k < forms.size(); ++k) {
      const Word prod = concat(forms[i], forms[k]);
      const Word nf = reduce_with_rules(prod, rep.system.rules);
      const EqualityResult eq = ctx.equal(psi(prod), psi(nf));
      ++rep.pairs_checked;
      if (eq.value == Eq::NOT_EQUAL) {
        rep.homomorphic = false;
        if (rep.counterexamples.size() < 8)
          rep.counterexamples.push_back(
              "product of forms " + std::to_string(i) + "," + std::to_string(k) +
              " does not match its normal form's image");
      } else if (eq.value == Eq::UNKNOWN) {
        rep.certified = false;
      }
    }
  }
  return rep;
}

}  // namespace orm
