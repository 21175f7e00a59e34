#pragma once

#include <optional>
#include <string>

#include "oirep/module.hpp"

namespace oirep {

// Witness search is sound for TORSION and inconclusive otherwise: a witness
// may always exist beyond the budget.
struct TorsionVerdict {
  enum Kind { TORSION, NOT_TORSION_UP_TO } kind = NOT_TORSION_UP_TO;
  OrdMorphism witness;  // annihilating morphism when kind == TORSION
  int budget = 0;
};

// Searches all morphisms out of the level with target <= budget, in target
// order then lexicographically; first hit wins.
TorsionVerdict torsion_witness(const TruncatedModule& v, int level, const Vec& x,
                               int budget);

struct TorsionLowerBound {
  std::vector<Matrix> subspaces;  // action-closed, always inside the true torsion part
  int budget = 0;

  bool is_zero() const {
    for (const auto& m : subspaces)
      if (m.cols() > 0) return false;
    return true;
  }
};

// The submodule generated by every witnessed kernel vector within budget.
TorsionLowerBound torsion_submodule_lower(const TruncatedModule& v, int budget);

enum class ModuleTorsionVerdict { TORSION, NOT_TORSION, UNKNOWN };

struct TorsionReport {
  ModuleTorsionVerdict verdict = ModuleTorsionVerdict::UNKNOWN;
  std::string detail;
  // one witness per generator when the verdict is TORSION
  std::vector<std::pair<int, OrdMorphism>> witnesses;
};

// Generator-wise test: torsion generators make the whole module torsion.
// NOT_TORSION needs a certificate; the one implemented is the free-module
// certificate (no relations). Everything else is UNKNOWN with the bound.
TorsionReport is_torsion_module(const PresentedModule& p, int budget);

}  // namespace oirep
