#pragma once

#include "orm/analysis.hpp"
#include "orm/inverses.hpp"
#include "orm/solver.hpp"
#include "orm/welc.hpp"

#include "json.hpp"

namespace orm {

// Builders, not to_json hooks: every word needs an alphabet to render.
nlohmann::json presentation_json(const SpecialPresentation& p);
nlohmann::json conditions_json(const ConditionReport& c, const Alphabet& a);
nlohmann::json structure_json(const StructureReport& s, const Alphabet& a);
nlohmann::json analysis_json(const AnalysisReport& rep);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json reduction_json(const Word& input, const ReductionResult& r,
                              const Alphabet& a);
nlohmann::json ball_json(const BallResult& ball, const Alphabet& a, int radius);
nlohmann::json inverses_json(const InverseTable& t, const Alphabet& a);
nlohmann::json embed_json(const NBicyclicReport& rep, const Alphabet& base);
nlohmann::json record_json(const CompilationRecord& rec, const Alphabet& a);
nlohmann::json solve_json(const SolverResult& res, const Alphabet& a);

}  // namespace orm
