#include "orm/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <unordered_set>
#ifdef _OPENMP
#include <omp.h>
#endif

namespace orm {

BallResult reduced_ball(ReductionContext& ctx, const Alphabet& base, int radius) {
  BallResult res;
  std::unordered_set<Word, WordHash> seen;
  std::unordered_set<Word, WordHash> flagged;
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= radius; ++len) {
    for (const Word& w : layer) {
      const ReductionResult r = ctx.reduce(w);
      if (seen.insert(r.word).second) res.words.push_back(r.word);
      if (!r.certified && flagged.insert(r.word).second)
        res.uncertified.push_back(r.word);
    }
    if (len == radius) break;
    std::vector<Word> next;
    next.reserve(layer.size() * base.size());
    for (const Word& w : layer)
      for (Symbol s = 0; s < base.size(); ++s) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  res.degraded = !res.uncertified.empty();
  std::sort(res.words.begin(), res.words.end(), ShortlexLess{});
  return res;
}

namespace {

Word substitute(const MTerm& t, const std::vector<Word>& vals) {
  Word w;
  for (const MItem& it : t) {
    if (it.is_var) {
      const Word& v = vals[it.var];
      w.insert(w.end(), v.begin(), v.end());
    } else {
      w.push_back(it.letter);
    }
  }
  return w;
}

struct SearchPlan {
  std::vector<std::vector<std::size_t>> fire_at;  // per variable depth
  std::vector<std::size_t> constants;             // variable-free equations
};

SearchPlan make_plan(const MonoidEqSystem& sys) {
  SearchPlan plan;
  plan.fire_at.resize(sys.variables.size());
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    std::size_t max_var = 0;
    bool has_var = false;
    for (const MTerm* side : {&sys.equations[e].first, &sys.equations[e].second})
      for (const MItem& it : *side)
        if (it.is_var) {
          has_var = true;
          max_var = std::max(max_var, it.var);
        }
    if (has_var)
      plan.fire_at[max_var].push_back(e);
    else
      plan.constants.push_back(e);
  }
  return plan;
}

struct DfsOutcome {
  bool sat = false;
  bool unknown = false;
  std::vector<Word> witness;
  long long bindings = 0;
};

// One backtracking pass.  fixed_first pins the first variable's value (the
// parallel partition point); sort_fired orders each depth's equations by
// substituted size so cheap mismatches reject early.
DfsOutcome run_dfs(const MonoidEqSystem& sys, ReductionContext& ctx,
                   const std::vector<Word>& ball, const SearchPlan& plan,
                   bool sort_fired, std::optional<std::size_t> fixed_first) {
  const std::size_t nv = sys.variables.size();
  std::vector<Word> vals(nv);
  DfsOutcome out;

  std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
    if (depth == nv) {
      out.sat = true;
      out.witness = vals;
      return true;
    }
    auto attempt = [&](const Word& w) -> bool {
      vals[depth] = w;
      ++out.bindings;
      std::vector<std::size_t> fired = plan.fire_at[depth];
      std::vector<std::pair<Word, Word>> sides(fired.size());
      for (std::size_t i = 0; i < fired.size(); ++i)
        sides[i] = {substitute(sys.equations[fired[i]].first, vals),
                    substitute(sys.equations[fired[i]].second, vals)};
      std::vector<std::size_t> order(fired.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      if (sort_fired)
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) {
                           return sides[x].first.size() + sides[x].second.size() <
                                  sides[y].first.size() + sides[y].second.size();
                         });
      for (std::size_t i : order) {
        const EqualityResult eq = ctx.equal(sides[i].first, sides[i].second);
        if (eq.value == Eq::NOT_EQUAL) return false;
        if (eq.value == Eq::UNKNOWN) {
          out.unknown = true;
          return false;
        }
      }
      return descend(depth + 1);
    };
    if (depth == 0 && fixed_first) return attempt(ball[*fixed_first]);
    for (const Word& w : ball)
      if (attempt(w)) return true;
    return false;
  };
  descend(0);
  return out;
}

SolverResult finish(const MonoidEqSystem& sys, ReductionContext& ctx,
                    const DfsOutcome& out, SolverResult res) {
  if (out.sat) {
    res.status = SolveStatus::SAT;
    for (std::size_t i = 0; i < sys.variables.size(); ++i)
      res.witness.emplace(sys.variables[i], out.witness[i]);
    for (const auto& [l, r] : sys.equations)
      if (ctx.equal(substitute(l, out.witness), substitute(r, out.witness)).value !=
          Eq::EQUAL)
        throw std::logic_error("witness failed re-verification");
  } else {
    res.status = out.unknown ? SolveStatus::UNKNOWN : SolveStatus::UNSAT_WITHIN_BOUND;
  }
  res.stats.bindings = out.bindings;
  return res;
}

}  // namespace

SolverResult solve(const MonoidEqSystem& sys, ReductionContext& ctx, int radius,
                   int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  SolverResult res;
  BallResult ball = reduced_ball(ctx, sys.base.alphabet, radius);
  res.degraded_ball = ball.degraded;
  const SearchPlan plan = make_plan(sys);
  const long long q0 = ctx.oracle().query_count();

  auto wrap_up = [&](SolverResult r) {
    r.stats.oracle_calls = ctx.oracle().query_count() - q0;
    r.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  for (std::size_t e : plan.constants) {
    const EqualityResult eq = ctx.equal(substitute(sys.equations[e].first, {}),
                                        substitute(sys.equations[e].second, {}));
    if (eq.value == Eq::NOT_EQUAL) return wrap_up(std::move(res));
    if (eq.value == Eq::UNKNOWN) {
      res.status = SolveStatus::UNKNOWN;
      return wrap_up(std::move(res));
    }
  }

  DfsOutcome out;
  const std::size_t nv = sys.variables.size();
#ifdef _OPENMP
  if (jobs != 1 && nv >= 1 && ball.words.size() > 1) {
    if (jobs > 1) omp_set_num_threads(jobs);
    const std::size_t nvals = ball.words.size();
    std::vector<DfsOutcome> outs(nvals);
    std::atomic<std::size_t> best{nvals};
#pragma omp parallel
    {
      ReductionContext local(ctx);  // private memo, shared oracle
#pragma omp for schedule(dynamic)
      for (long i = 0; i < static_cast<long>(nvals); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        if (idx > best.load()) continue;  // a smaller SAT already exists
        DfsOutcome o = run_dfs(sys, local, ball.words, plan, true, idx);
        if (o.sat) {
          std::size_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
        }
        outs[idx] = std::move(o);
      }
    }
    const std::size_t hit = best.load();
    if (hit < nvals) {
      out = outs[hit];
    } else {
      for (const DfsOutcome& o : outs) {
        out.unknown = out.unknown || o.unknown;
        out.bindings += o.bindings;
      }
    }
    return wrap_up(finish(sys, ctx, out, std::move(res)));
  }
#else
  (void)jobs;
#endif
  out = run_dfs(sys, ctx, ball.words, plan, true, std::nullopt);
  return wrap_up(finish(sys, ctx, out, std::move(res)));
}

SolverResult solve_reference(const MonoidEqSystem& sys, ReductionContext& ctx,
                             int radius) {
  const auto t0 = std::chrono::steady_clock::now();
  SolverResult res;
  // The ball is shared plumbing: build it with the caller's warm context so
  // the baseline measures the search itself, then run cold and memo-free.
  BallResult ball = reduced_ball(ctx, sys.base.alphabet, radius);
  res.degraded_ball = ball.degraded;
  const SearchPlan plan = make_plan(sys);
  ReductionContext cold(ctx.decomposition(), ctx.oracle_ptr(), false);
  const long long q0 = cold.oracle().query_count();

  auto wrap_up = [&](SolverResult r) {
    r.stats.oracle_calls = cold.oracle().query_count() - q0;
    r.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  for (std::size_t e : plan.constants) {
    const EqualityResult eq = cold.equal(substitute(sys.equations[e].first, {}),
                                         substitute(sys.equations[e].second, {}));
    if (eq.value == Eq::NOT_EQUAL) return wrap_up(std::move(res));
    if (eq.value == Eq::UNKNOWN) {
      res.status = SolveStatus::UNKNOWN;
      return wrap_up(std::move(res));
    }
  }

  const DfsOutcome out = run_dfs(sys, cold, ball.words, plan, false, std::nullopt);
  return wrap_up(finish(sys, cold, out, std::move(res)));
}

}  // namespace orm
