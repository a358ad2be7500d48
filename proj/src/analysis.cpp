#include "orm/analysis.hpp"

namespace orm {

MonoidContext make_context(SpecialPresentation p, const OracleBudgets& budgets) {
  MonoidContext ctx;
  ctx.presentation = std::move(p);
  ctx.decomposition = minimal_pieces(ctx.presentation);
  ctx.conditions = check_conditions(ctx.decomposition);
  ctx.structure = structure_report(ctx.presentation, ctx.decomposition);
  ctx.units = units_presentation(ctx.decomposition);
  ctx.oracle = std::make_shared<UnitsOracle>(ctx.units, budgets);
  ctx.reduction = std::make_shared<ReductionContext>(ctx.decomposition, ctx.oracle);
  return ctx;
}

AnalysisReport analyze(const SpecialPresentation& p, const OracleBudgets& budgets) {
  MonoidContext ctx = make_context(p, budgets);
  AnalysisReport rep;
  rep.presentation = ctx.presentation;
  rep.decomposition = ctx.decomposition;
  rep.conditions = ctx.conditions;
  rep.structure = ctx.structure;
  rep.units = ctx.units;
  rep.certificate = certify_decomposition(ctx.decomposition, *ctx.reduction);
  return rep;
}

}  // namespace orm
