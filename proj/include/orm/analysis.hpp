#pragma once

#include "orm/adjan.hpp"
#include "orm/oracle.hpp"
#include "orm/presentation.hpp"
#include "orm/rewriting.hpp"

#include <memory>

namespace orm {

// Everything downstream work needs about one presentation, built once.
// Copies share the oracle and the reduction memo.
struct MonoidContext {
  SpecialPresentation presentation;
  PieceDecomposition decomposition;
  ConditionReport conditions;
  StructureReport structure;
  SpecialPresentation units;
  std::shared_ptr<UnitsOracle> oracle;
  std::shared_ptr<ReductionContext> reduction;
};

MonoidContext make_context(SpecialPresentation p, const OracleBudgets& budgets = {});

struct AnalysisReport {
  SpecialPresentation presentation;
  PieceDecomposition decomposition;
  ConditionReport conditions;
  StructureReport structure;
  SpecialPresentation units;
  DecompositionCertificate certificate;
};

AnalysisReport analyze(const SpecialPresentation& p,
                       const OracleBudgets& budgets = {});

}  // namespace orm
