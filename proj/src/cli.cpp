#include "orm/cli.hpp"

#include "orm/analysis.hpp"
#include "orm/inverses.hpp"
#include "orm/json_io.hpp"
#include "orm/solver.hpp"
#include "orm/welc.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace orm {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ORM_ORACLE_BUDGET=inferences[,seconds[,rules[,ball-radius]]]
OracleBudgets budgets_from_env() {
  OracleBudgets b;
  const char* env = std::getenv("ORM_ORACLE_BUDGET");
  if (!env || !*env) return b;
  std::stringstream ss(env);
  std::string part;
  int field = 0;
  try {
    while (std::getline(ss, part, ',')) {
      switch (field++) {
        case 0: b.kb_inferences = std::stoll(part); break;
        case 1: b.kb_seconds = std::stod(part); break;
        case 2: b.kb_max_rules = static_cast<std::size_t>(std::stoll(part)); break;
        case 3: b.bfs_radius = std::stoi(part); break;
        default: throw InputError("ORM_ORACLE_BUDGET takes at most four fields");
      }
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError(
        "ORM_ORACLE_BUDGET must read inferences[,seconds[,rules[,radius]]]");
  }
  return b;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string file;
  std::string word;
  std::string welc_file;
  std::string system_file;
  std::string format;  // empty = the subcommand's default
  int radius = 0;
  int jobs = 1;
};

bool want_json(const Options& o, bool default_json) {
  if (o.format.empty()) return default_json;
  return o.format == "json";
}

MonoidContext context_for(const Options& o) {
  return make_context(load_presentation_file(o.file), budgets_from_env());
}

std::string join_words(const std::vector<Word>& ws, const Alphabet& a) {
  std::string out;
  for (const Word& w : ws) {
    if (!out.empty()) out += ' ';
    out += a.render_word(w);
  }
  return out;
}

int run_analyze(const Options& o) {
  AnalysisReport rep = analyze(load_presentation_file(o.file), budgets_from_env());
  const Alphabet& al = rep.presentation.alphabet;
  if (want_json(o, true)) {
    std::cout << analysis_json(rep).dump(2) << "\n";
  } else {
    std::cout << "presentation: " << render_presentation(rep.presentation) << "\n";
    std::cout << "pieces: " << join_words(rep.decomposition.pieces, al) << "\n";
    std::cout << "delta: " << join_words(rep.decomposition.delta, al) << "\n";
    std::cout << "phi:";
    for (std::size_t i = 0; i < rep.decomposition.delta.size(); ++i)
      std::cout << ' ' << al.render_word(rep.decomposition.delta[i]) << "->"
                << rep.decomposition.units_alphabet.name(static_cast<Symbol>(i));
    std::cout << "\n";
    std::cout << "units: " << render_presentation(rep.units) << "\n";
    const ConditionReport& c = rep.conditions;
    std::cout << "conditions: C1 " << yes_no(c.c1) << ", C2 " << yes_no(c.c2());
    if (c.chosen_a) std::cout << " (witness " << al.name(*c.chosen_a) << ")";
    std::cout << ", C3 " << yes_no(c.c3()) << ", m = " << c.m << "\n";
    const StructureReport& s = rep.structure;
    std::cout << "structure: torsion " << s.torsion_exponent << ", root "
              << al.render_word(s.torsion_root) << ", all letters invertible: "
              << yes_no(s.all_letters_invertible);
    std::cout << ", complement:";
    if (s.free_product_complement.empty()) {
      std::cout << " -";
    } else {
      for (Symbol x : s.free_product_complement) std::cout << ' ' << al.name(x);
    }
    if (s.hyperbolic_units_flag) std::cout << ", hyperbolic units";
    std::cout << "\n";
    std::cout << "certificate: "
              << (rep.certificate.consistent ? "consistent" : "INCONSISTENT")
              << ", " << (rep.certificate.certified ? "certified" : "uncertified")
              << "\n";
    for (const std::string& n : rep.certificate.notes)
      std::cout << "  note: " << n << "\n";
  }
  if (!rep.certificate.consistent) return 1;
  return rep.certificate.certified ? 0 : 2;
}

int run_units(const Options& o) {
  MonoidContext mc = context_for(o);
  GroupWord w = parse_group_word(o.word, mc.units.alphabet);
  Verdict v = mc.oracle->is_trivial(w);
  if (want_json(o, false)) {
    nlohmann::json j = verdict_json(v);
    j["word"] = render_group_word(w, mc.units.alphabet);
    j["group"] = render_presentation(mc.units);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << render_presentation(mc.units) << "\n";
    std::cout << "word: " << render_group_word(w, mc.units.alphabet) << "\n";
    std::cout << "verdict: " << to_string(v.value) << "\n";
    std::cout << "method: " << to_string(v.method) << "\n";
    if (!v.certificate.empty())
      std::cout << "certificate: " << v.certificate << "\n";
  }
  return v.value == Truth::UNKNOWN ? 2 : 0;
}

int run_reduce(const Options& o) {
  MonoidContext mc = context_for(o);
  const Alphabet& al = mc.presentation.alphabet;
  Word w = al.parse_word(o.word);
  ReductionResult r = mc.reduction->reduce(w);
  if (want_json(o, false)) {
    std::cout << reduction_json(w, r, al).dump(2) << "\n";
  } else {
    std::cout << "input: " << al.render_word(w) << "\n";
    std::cout << "reduced: " << al.render_word(r.word) << "\n";
    std::cout << "certified: " << yes_no(r.certified) << "\n";
    for (const RewriteStep& st : r.trace)
      std::cout << "  at " << st.pos << ": " << al.render_word(st.lhs) << " -> "
                << al.render_word(st.rhs) << "\n";
  }
  return r.certified ? 0 : 2;
}

int run_ball(const Options& o) {
  MonoidContext mc = context_for(o);
  const Alphabet& al = mc.presentation.alphabet;
  BallResult ball = reduced_ball(*mc.reduction, al, o.radius);
  if (want_json(o, false)) {
    std::cout << ball_json(ball, al, o.radius).dump(2) << "\n";
  } else {
    std::cout << "radius: " << o.radius << "\n";
    std::cout << "size: " << ball.words.size() << "\n";
    for (const Word& w : ball.words) std::cout << al.render_word(w) << "\n";
    if (ball.degraded)
      std::cout << "degraded: " << ball.uncertified.size()
                << " uncertified reductions\n";
  }
  return ball.degraded ? 2 : 0;
}

int run_inverses(const Options& o) {
  MonoidContext mc = context_for(o);
  const Alphabet& al = mc.presentation.alphabet;
  if (!mc.conditions.chosen_a)
    throw InputError("no letter starts two distinct relator pieces");
  InverseTable t = compute_X(mc.decomposition, *mc.conditions.chosen_a,
                             *mc.reduction);
  compute_basis(t, &mc.conditions);
  if (want_json(o, true)) {
    std::cout << inverses_json(t, al).dump(2) << "\n";
  } else {
    std::cout << "a: " << al.name(t.a) << "\n";
    std::cout << "m: " << t.m << "\n";
    for (const InverseEntry& e : t.entries) {
      std::cout << "  j=" << e.j << " beta=" << al.render_word(e.beta)
                << " eta=" << al.render_word(e.eta)
                << " x=" << al.render_word(e.x_word);
      if (!e.certified) std::cout << " (uncertified)";
      std::cout << "\n";
    }
    std::cout << "basis: " << join_words(t.basis, al) << "\n";
    std::cout << "weights:";
    for (const auto& [w, j] : t.weights)
      std::cout << ' ' << al.render_word(w) << "=" << j;
    std::cout << "\n";
    std::cout << "certified: " << yes_no(t.certified) << "\n";
  }
  return t.certified ? 0 : 2;
}

int run_embed(const Options& o) {
  MonoidContext mc = context_for(o);
  const Alphabet& al = mc.presentation.alphabet;
  // Without a two-starter letter the weight-1 layer can still be a singleton;
  // fall back to the first letter of the least piece.
  Symbol a = mc.conditions.chosen_a ? *mc.conditions.chosen_a
                                    : mc.decomposition.delta.front().front();
  InverseTable t =
      compute_X(mc.decomposition, a, *mc.reduction, /*require_witness=*/false);
  NBicyclicReport rep = n_bicyclic_view(t, *mc.reduction, o.radius);
  if (want_json(o, false)) {
    std::cout << embed_json(rep, al).dump(2) << "\n";
  } else {
    std::cout << "q: " << rep.generator_images.size() << "\n";
    std::cout << "images: " << join_words(rep.generator_images, al) << "\n";
    std::cout << "forms checked: " << rep.forms_checked << "\n";
    std::cout << "pairs checked: " << rep.pairs_checked << "\n";
    std::cout << "injective: " << yes_no(rep.injective) << "\n";
    std::cout << "homomorphic: " << yes_no(rep.homomorphic) << "\n";
    std::cout << "certified: " << yes_no(rep.certified) << "\n";
    for (const std::string& c : rep.counterexamples)
      std::cout << "  counterexample: " << c << "\n";
  }
  if (!rep.certified) return 2;
  // Certified failure means a broken invariant, not an undecided run.
  return (rep.injective && rep.homomorphic) ? 0 : 1;
}

int run_compile_welc(const Options& o) {
  MonoidContext mc = context_for(o);
  const Alphabet& al = mc.presentation.alphabet;
  if (!mc.conditions.chosen_a)
    throw InputError(
        "no letter starts two distinct relator pieces; nothing to compile onto");
  WelcSystem sys = parse_welc(slurp(o.welc_file));
  InverseTable t = compute_X(mc.decomposition, *mc.conditions.chosen_a,
                             *mc.reduction);
  WeightedSignature sig = compute_basis(t, &mc.conditions);
  auto [msys, rec] = compile(sys, sig, mc.presentation, t.a);
  std::string eq_text = render_eq_system(msys);
  if (!eq_text.empty() && eq_text.back() != '\n') eq_text += '\n';
  if (want_json(o, false)) {
    nlohmann::json j;
    j["eq_file"] = eq_text;
    j["record"] = record_json(rec, al);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << eq_text;
    std::cout << record_json(rec, al).dump(2) << "\n";
  }
  return 0;
}

int run_solve(const Options& o) {
  MonoidContext mc = context_for(o);
  const Alphabet& al = mc.presentation.alphabet;
  MonoidEqSystem sys = parse_eq_system(slurp(o.system_file), mc.presentation);
  SolverResult res = solve(sys, *mc.reduction, o.radius, o.jobs);
  if (want_json(o, false)) {
    std::cout << solve_json(res, al).dump(2) << "\n";
  } else {
    std::cout << "status: " << to_string(res.status) << "\n";
    for (const auto& [name, value] : res.witness)
      std::cout << name << " = " << al.render_word(value) << "\n";
    std::cout << "bindings: " << res.stats.bindings << "\n";
    std::cout << "oracle calls: " << res.stats.oracle_calls << "\n";
    std::cout << "seconds: " << res.stats.seconds << "\n";
    if (res.degraded_ball) std::cout << "degraded ball: yes\n";
  }
  return res.status == SolveStatus::UNKNOWN ? 2 : 0;
}

int run_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& label) {
    if (ok) {
      std::cout << "ok - " << label << "\n";
    } else {
      ++failures;
      std::cout << "FAILED - " << label << "\n";
    }
  };

  MonoidContext abacab = make_context(parse_presentation("< a,b,c | abacab = 1 >"));
  const Alphabet& al = abacab.presentation.alphabet;
  check(abacab.decomposition.delta ==
            std::vector<Word>{al.parse_word("ab"), al.parse_word("ac")},
        "two distinct pieces of the base example");
  check(render_presentation(abacab.units) == "< p,q | pqp = 1 >",
        "unit-group presentation text");
  check(abacab.conditions.c1 && abacab.conditions.c2() && abacab.conditions.c3() &&
            abacab.conditions.m == 1,
        "rank conditions on the base example");

  MonoidContext ex12 =
      make_context(parse_presentation("< a,b,c,d | abcdcdabab = 1 >"));
  const Alphabet& al12 = ex12.presentation.alphabet;
  check(ex12.decomposition.pieces ==
            std::vector<Word>{al12.parse_word("ab"), al12.parse_word("cd"),
                              al12.parse_word("cd"), al12.parse_word("ab"),
                              al12.parse_word("ab")},
        "piece sequence of the ten-letter example");
  check(!ex12.conditions.c2(), "ten-letter example fails the overlap condition");

  ReductionResult r = abacab.reduction->reduce(al.parse_word("bacab"));
  check(r.certified && al.render_word(r.word) == "babac",
        "normal form of bacab");

  MonoidContext bicyclic = make_context(parse_presentation("< a,b | ab = 1 >"));
  BallResult ball =
      reduced_ball(*bicyclic.reduction, bicyclic.presentation.alphabet, 2);
  check(ball.words.size() == 6 && !ball.degraded, "bicyclic ball of radius two");

  InverseTable t =
      compute_X(abacab.decomposition, *abacab.conditions.chosen_a,
                *abacab.reduction);
  WeightedSignature sig = compute_basis(t, &abacab.conditions);
  check(sig.rank == 2 && t.basis.size() == 2 &&
            al.render_word(t.basis[0]) == "babac" &&
            al.render_word(t.basis[1]) == "cabab" &&
            sig.weights == std::vector<int>{1, 1},
        "weight-one right-inverse basis");

  MonoidContext aba = make_context(parse_presentation("< a,b,c,d | aba = 1 >"));
  check(aba.structure.all_letters_invertible &&
            aba.structure.free_product_complement.size() == 2,
        "group-and-free-part split of the three-letter relator");
  check(aba.reduction->equal(aba.presentation.alphabet.parse_word("ba"),
                             aba.presentation.alphabet.parse_word("ab"))
                .value == Eq::EQUAL,
        "commutation inside the invertible part");

  MonoidEqSystem sys =
      parse_eq_system("vars: x\neq: a x = 1\n", abacab.presentation);
  SolverResult sr = solve(sys, *abacab.reduction, 5);
  check(sr.status == SolveStatus::SAT && sr.witness.count("x") &&
            al.render_word(sr.witness.at("x")) == "babac",
        "least right inverse of the distinguished letter");

  WelcResult wr = brute_force_welc(parse_welc("vars: X\ngens: d1,d2\neq: X = d1"), 2);
  check(wr.status == SolveStatus::SAT, "free-monoid equation with a solution");
  wr = brute_force_welc(parse_welc("vars: X\ngens: d1,d2\neq: X d1 = d2 X"), 2);
  check(wr.status == SolveStatus::UNSAT_WITHIN_BOUND,
        "free-monoid equation with no bounded solution");

  if (failures == 0) {
    std::cout << "selftest: all checks passed\n";
    return 0;
  }
  std::cout << "selftest: " << failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"one-relator special monoid toolbox"};
  app.require_subcommand(1);
  Options o;
  int rc = 0;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "presentation file, e.g. < a,b | ab = 1 >")
        ->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* c = app.add_subcommand(
      "analyze", "factor the relator and report the derived invariants");
  add_file(c);
  add_format(c);
  c->callback([&] { rc = run_analyze(o); });

  c = app.add_subcommand("units", "decide triviality in the group of units");
  add_file(c);
  c->add_option("--word", o.word,
                "group word over the unit letters, e.g. \"p q^-1\" or \"pqp\"")
      ->required();
  add_format(c);
  c->callback([&] { rc = run_units(o); });

  c = app.add_subcommand("reduce", "rewrite a word to its normal form");
  add_file(c);
  c->add_option("--word", o.word, "word over the presentation alphabet")
      ->required();
  add_format(c);
  c->callback([&] { rc = run_reduce(o); });

  c = app.add_subcommand("ball", "list the reduced words up to a length bound");
  add_file(c);
  c->add_option("--radius", o.radius, "maximal input length")->required();
  add_format(c);
  c->callback([&] { rc = run_ball(o); });

  c = app.add_subcommand(
      "inverses", "right-inverse table of the distinguished letter");
  add_file(c);
  add_format(c);
  c->callback([&] { rc = run_inverses(o); });

  c = app.add_subcommand(
      "embed", "verify the defining-relations submonoid picture up to a radius");
  add_file(c);
  c->add_option("--radius", o.radius, "maximal normal-form size checked")
      ->required();
  add_format(c);
  c->callback([&] { rc = run_embed(o); });

  c = app.add_subcommand(
      "compile-welc",
      "compile word equations with length constraints into monoid equations");
  add_file(c);
  c->add_option("--welc", o.welc_file, "system file (vars:/gens:/eq:/len: lines)")
      ->required();
  add_format(c);
  c->callback([&] { rc = run_compile_welc(o); });

  c = app.add_subcommand("solve", "search a monoid equation system for solutions");
  add_file(c);
  c->add_option("--system", o.system_file, "equation file (vars:/eq: lines)")
      ->required();
  c->add_option("--radius", o.radius, "value ball radius")->required();
  c->add_option("--jobs", o.jobs, "worker threads (<=0 lets OpenMP pick)");
  add_format(c);
  c->callback([&] { rc = run_solve(o); });

  c = app.add_subcommand("selftest", "run the built-in sanity checks");
  c->callback([&] { rc = run_selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's many exit codes onto the 0/1 contract.
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedMethod& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace orm
