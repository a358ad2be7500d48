#include "orm/rewriting.hpp"

#include <algorithm>
#include <queue>

namespace orm {

namespace {

// Enumerates flattened Δ*-words in shortlex order, carrying the φ-image
// along.  Generation is unique: Δ is a prefix code, so every Δ*-word has a
// unique last piece and hence a unique parent.
class DeltaStarEnumerator {
 public:
  explicit DeltaStarEnumerator(const PieceDecomposition& d) : d_(d) {
    heap_.push({Word{}, Word{}});
  }

  // Returns words in strictly increasing shortlex order, starting with ε.
  std::pair<Word, Word> next() {
    auto top = heap_.top();
    heap_.pop();
    for (const Word& piece : d_.delta) {
      Word flat = top.first;
      flat.insert(flat.end(), piece.begin(), piece.end());
      Word phi = top.second;
      phi.push_back(d_.piece_letter.at(piece));
      heap_.push({std::move(flat), std::move(phi)});
    }
    return top;
  }

 private:
  struct HeapGreater {
    bool operator()(const std::pair<Word, Word>& a,
                    const std::pair<Word, Word>& b) const {
      return shortlex_less(b.first, a.first);
    }
  };
  const PieceDecomposition& d_;
  std::priority_queue<std::pair<Word, Word>, std::vector<std::pair<Word, Word>>,
                      HeapGreater>
      heap_;
};

void splice(Word& w, std::size_t pos, std::size_t len, const Word& repl) {
  Word out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  w = std::move(out);
}

}  // namespace

ReductionContext::ReductionContext(PieceDecomposition d,
                                   std::shared_ptr<const UnitsOracle> oracle,
                                   bool enable_memo)
    : d_(std::move(d)), oracle_(std::move(oracle)), memo_(enable_memo) {
  if (!oracle_) throw InputError("reduction context requires an oracle");
}

ReductionContext::Discovery ReductionContext::discover(const Word& sub) {
  if (sub.empty() || !d_.factors_over_delta(sub))
    throw InputError("rule discovery needs a nonempty product of pieces");
  if (memo_) {
    auto it = discoveries_.find(sub);
    if (it != discoveries_.end()) return it->second;
  }

  const GroupWord phi_sub = from_positive(d_.phi(sub));
  Discovery out;
  DeltaStarEnumerator candidates(d_);
  while (true) {
    auto [flat, phi] = candidates.next();
    if (shortlex_compare(flat, sub) != Ordering::LT) break;
    // Exponent-sum prefilter: a mismatch settles NOT_EQUAL without touching
    // the oracle, and keeps certification intact.
    const GroupWord diff =
        gw_concat(phi_sub, gw_inverse(from_positive(phi)));
    if (!oracle_->abelianization_admits_trivial(diff)) continue;
    const EqVerdict v = oracle_->equal(phi_sub, from_positive(phi));
    if (v.value == Eq::EQUAL) {
      out.rule = RewriteRule{sub, flat};
      break;
    }
    if (v.value == Eq::UNKNOWN) out.certified = false;
  }
  if (memo_) discoveries_.emplace(sub, out);
  return out;
}

ReductionResult ReductionContext::reduce(const Word& w, ScanPolicy policy) {
  const bool memoizable = memo_ && policy == ScanPolicy::LONGEST_LEFTMOST;
  if (memoizable) {
    auto it = reductions_.find(w);
    if (it != reductions_.end()) return it->second;
  }

  ReductionResult res;
  res.word = w;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    // Maximal piece chain from every start position; prefix-code uniqueness
    // makes each chain, and so the candidate list, canonical.
    struct Candidate {
      std::size_t pos;
      std::size_t len;
    };
    std::vector<Candidate> candidates;
    const Word& cur = res.word;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::size_t t = i;
      while (t < cur.size()) {
        const Word* matched = nullptr;
        for (const Word& piece : d_.delta) {
          if (t + piece.size() <= cur.size() &&
              std::equal(piece.begin(), piece.end(),
                         cur.begin() + static_cast<std::ptrdiff_t>(t))) {
            matched = &piece;
            break;
          }
        }
        if (!matched) break;
        t += matched->size();
        candidates.push_back({i, t - i});
      }
    }
    switch (policy) {
      case ScanPolicy::LONGEST_LEFTMOST:
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) {
                           if (a.len != b.len) return a.len > b.len;
                           return a.pos < b.pos;
                         });
        break;
      case ScanPolicy::SHORTEST_LEFTMOST:
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) {
                           if (a.len != b.len) return a.len < b.len;
                           return a.pos < b.pos;
                         });
        break;
      case ScanPolicy::RIGHTMOST_LONGEST:
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) {
                           if (a.pos != b.pos) return a.pos > b.pos;
                           return a.len > b.len;
                         });
        break;
    }
    for (const Candidate& c : candidates) {
      const Word sub(cur.begin() + static_cast<std::ptrdiff_t>(c.pos),
                     cur.begin() + static_cast<std::ptrdiff_t>(c.pos + c.len));
      Discovery disc = discover(sub);
      if (!disc.certified) res.certified = false;
      if (disc.rule) {
        res.trace.push_back({c.pos, disc.rule->lhs, disc.rule->rhs});
        splice(res.word, c.pos, c.len, disc.rule->rhs);
        progressed = true;
        break;
      }
    }
  }
  if (memoizable) reductions_.emplace(w, res);
  return res;
}

EqualityResult ReductionContext::equal(const Word& u, const Word& v) {
  const ReductionResult ru = reduce(u);
  const ReductionResult rv = reduce(v);
  if (ru.word == rv.word)
    return {Eq::EQUAL, "common reduced form reached"};
  if (ru.certified && rv.certified)
    return {Eq::NOT_EQUAL, "distinct certified normal forms"};
  return {Eq::UNKNOWN, "reductions not fully certified"};
}

std::optional<RewriteRule> discover_rule(const Word& sub, ReductionContext& ctx) {
  return ctx.discover(sub).rule;
}

ReductionResult reduce_in_M(const Word& w, ReductionContext& ctx, ScanPolicy policy) {
  return ctx.reduce(w, policy);
}

EqualityResult equal_in_M(const Word& u, const Word& v, ReductionContext& ctx) {
  return ctx.equal(u, v);
}

EqVerdict delta_equal_in_M(const Word& u, const Word& v, const PieceDecomposition& d,
                           const UnitsOracle& oracle) {
  if (!d.factors_over_delta(u) || !d.factors_over_delta(v))
    throw InputError("delta equality is only defined on products of pieces");
  return oracle.equal(from_positive(d.phi(u)), from_positive(d.phi(v)));
}

InvertibilityResult is_invertible_in_M(const Word& u, ReductionContext& ctx) {
  const ReductionResult r = ctx.reduce(u);
  if (ctx.decomposition().factors_over_delta(r.word))
    return {Ternary::YES, r.word, true};
  if (r.certified) return {Ternary::NO, r.word, true};
  return {Ternary::UNKNOWN, r.word, false};
}

DecompositionCertificate certify_decomposition(const PieceDecomposition& d,
                                               ReductionContext& ctx) {
  DecompositionCertificate cert;
  for (const Word& piece : d.delta) {
    for (std::size_t len = 1; len < piece.size(); ++len) {
      const Word prefix(piece.begin(), piece.begin() + static_cast<std::ptrdiff_t>(len));
      const ReductionResult r = ctx.reduce(prefix);
      if (d.factors_over_delta(r.word)) {
        cert.consistent = false;
        cert.notes.push_back("proper prefix of a piece reduces into the piece "
                             "submonoid (piece length " +
                             std::to_string(piece.size()) + ", prefix length " +
                             std::to_string(len) + ")");
      } else if (!r.certified) {
        cert.certified = false;
        cert.notes.push_back("prefix check undecided (piece length " +
                             std::to_string(piece.size()) + ", prefix length " +
                             std::to_string(len) + ")");
      }
    }
  }
  return cert;
}

FiniteSystem make_finite_system(Alphabet alphabet, std::vector<RewriteRule> rules) {
  for (const RewriteRule& r : rules) {
    if (!alphabet.contains_word(r.lhs) || !alphabet.contains_word(r.rhs))
      throw InputError("rule uses a symbol outside the alphabet");
    if (shortlex_compare(r.rhs, r.lhs) != Ordering::LT)
      throw InputError("rules must be shortlex-decreasing");
  }
  return {std::move(alphabet), std::move(rules)};
}

ConfluenceReport critical_pairs(const FiniteSystem& s) {
  ConfluenceReport rep;
  rep.pairs = superposition_pairs(s.rules);
  for (const auto& [left, right] : rep.pairs) {
    const Word nl = reduce_with_rules(left, s.rules);
    const Word nr = reduce_with_rules(right, s.rules);
    if (nl != nr) rep.unjoined.emplace_back(nl, nr);
  }
  // Every rule is shortlex-decreasing, so the system terminates and local
  // confluence is the whole story.
  rep.verdict = rep.unjoined.empty() ? Confluence::CONFLUENT : Confluence::NOT_CONFLUENT;
  return rep;
}

}  // namespace orm
