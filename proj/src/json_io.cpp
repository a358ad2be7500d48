#include "orm/json_io.hpp"

namespace orm {

using nlohmann::json;

namespace {

json words_json(const std::vector<Word>& ws, const Alphabet& a) {
  json arr = json::array();
  for (const Word& w : ws) arr.push_back(a.render_word(w));
  return arr;
}

}  // namespace

json presentation_json(const SpecialPresentation& p) {
  return {{"text", render_presentation(p)},
          {"alphabet", p.alphabet.symbols()},
          {"relator", p.alphabet.render_word(p.relator)}};
}

json conditions_json(const ConditionReport& c, const Alphabet& a) {
  json witnesses = json::array();
  for (const auto& w : c.c2_witnesses)
    witnesses.push_back({{"letter", a.name(w.letter)},
                         {"gamma", a.render_word(w.gamma)},
                         {"delta_word", a.render_word(w.delta_word)}});
  json c3w = json::object();
  for (const auto& [letter, ok] : c.c3_by_witness) c3w[a.name(letter)] = ok;
  json out{{"c1", c.c1},
           {"c2", c.c2()},
           {"c3", c.c3()},
           {"c2_witnesses", witnesses},
           {"c3_by_witness", c3w},
           {"m", c.m}};
  if (c.chosen_a)
    out["chosen_a"] = a.name(*c.chosen_a);
  else
    out["chosen_a"] = nullptr;
  return out;
}

json structure_json(const StructureReport& s, const Alphabet& a) {
  json complement = json::array();
  for (Symbol sym : s.free_product_complement) complement.push_back(a.name(sym));
  return {{"torsion_exponent", s.torsion_exponent},
          {"torsion_root", a.render_word(s.torsion_root)},
          {"all_letters_invertible", s.all_letters_invertible},
          {"free_product_complement", complement},
          {"hyperbolic_units", s.hyperbolic_units_flag}};
}

json analysis_json(const AnalysisReport& rep) {
  const Alphabet& a = rep.presentation.alphabet;
  json phi = json::object();
  for (const Word& piece : rep.decomposition.delta)
    phi[a.render_word(piece)] =
        rep.decomposition.units_alphabet.name(rep.decomposition.piece_letter.at(piece));
  return {{"presentation", presentation_json(rep.presentation)},
          {"pieces", words_json(rep.decomposition.pieces, a)},
          {"delta", words_json(rep.decomposition.delta, a)},
          {"phi", phi},
          {"conditions", conditions_json(rep.conditions, a)},
          {"structure", structure_json(rep.structure, a)},
          {"units", presentation_json(rep.units)},
          {"certificate",
           {{"consistent", rep.certificate.consistent},
            {"certified", rep.certificate.certified},
            {"notes", rep.certificate.notes}}}};
}

json verdict_json(const Verdict& v) {
  return {{"value", to_string(v.value)},
          {"method", to_string(v.method)},
          {"certificate", v.certificate}};
}

json reduction_json(const Word& input, const ReductionResult& r, const Alphabet& a) {
  json steps = json::array();
  for (const RewriteStep& s : r.trace)
    steps.push_back({{"pos", s.pos},
                     {"lhs", a.render_word(s.lhs)},
                     {"rhs", a.render_word(s.rhs)}});
  return {{"input", a.render_word(input)},
          {"reduced", a.render_word(r.word)},
          {"certified", r.certified},
          {"steps", steps}};
}

json ball_json(const BallResult& ball, const Alphabet& a, int radius) {
  return {{"radius", radius},
          {"size", ball.words.size()},
          {"words", words_json(ball.words, a)},
          {"uncertified", words_json(ball.uncertified, a)},
          {"degraded", ball.degraded}};
}

json inverses_json(const InverseTable& t, const Alphabet& a) {
  json entries = json::array();
  for (const InverseEntry& e : t.entries)
    entries.push_back({{"j", e.j},
                       {"beta", a.render_word(e.beta)},
                       {"eta", a.render_word(e.eta)},
                       {"x", a.render_word(e.x_word)},
                       {"certified", e.certified}});
  json weights = json::object();
  for (const auto& [w, j] : t.weights) weights[a.render_word(w)] = j;
  return {{"a", a.name(t.a)},
          {"m", t.m},
          {"entries", entries},
          {"basis", words_json(t.basis, a)},
          {"weights", weights},
          {"certified", t.certified}};
}

json embed_json(const NBicyclicReport& rep, const Alphabet& base) {
  json rules = json::array();
  for (const RewriteRule& r : rep.system.rules)
    rules.push_back({{"lhs", rep.system.alphabet.render_word(r.lhs)},
                     {"rhs", rep.system.alphabet.render_word(r.rhs)}});
  return {{"q", rep.generator_images.size()},
          {"system",
           {{"alphabet", rep.system.alphabet.symbols()}, {"rules", rules}}},
          {"generator_images", words_json(rep.generator_images, base)},
          {"forms_checked", rep.forms_checked},
          {"pairs_checked", rep.pairs_checked},
          {"injective", rep.injective},
          {"homomorphic", rep.homomorphic},
          {"certified", rep.certified},
          {"counterexamples", rep.counterexamples}};
}

json record_json(const CompilationRecord& rec, const Alphabet& a) {
  return {{"generator_map", words_json(rec.generator_map, a)},
          {"lambda", rec.lambda},
          {"domain_gadgets", rec.domain_gadgets},
          {"constraint_gadgets", rec.constraint_gadgets}};
}

json solve_json(const SolverResult& res, const Alphabet& a) {
  json witness = json::object();
  for (const auto& [name, w] : res.witness) witness[name] = a.render_word(w);
  return {{"status", to_string(res.status)},
          {"witness", witness},
          {"stats",
           {{"bindings", res.stats.bindings},
            {"oracle_calls", res.stats.oracle_calls},
            {"seconds", res.stats.seconds}}},
          {"degraded_ball", res.degraded_ball}};
}

}  // namespace orm
