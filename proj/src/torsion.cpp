#include "oirep/torsion.hpp"

namespace oirep {

TorsionVerdict torsion_witness(const TruncatedModule& v, int level, const Vec& x,
                               int budget) {
  if (level > v.truncation || budget > v.truncation)
    throw TruncationError("torsion witness search beyond the truncation");
  if (int(x.size()) != v.dim(level)) throw DimensionError("torsion witness length mismatch");
  TorsionVerdict out;
  out.budget = budget;
  for (int m = level; m <= budget; ++m) {
    for (const auto& f : enumerate_morphisms(level, m)) {
      if (vec_is_zero(act(v, f, x))) {
        out.kind = TorsionVerdict::TORSION;
        out.witness = f;
        return out;
      }
    }
  }
  out.kind = TorsionVerdict::NOT_TORSION_UP_TO;
  return out;
}

TorsionLowerBound torsion_submodule_lower(const TruncatedModule& v, int budget) {
  if (budget > v.truncation)
    throw TruncationError("torsion budget beyond the truncation");
  std::vector<std::pair<int, Vec>> seeds;
  for (int n = 0; n <= budget; ++n) {
    if (v.dim(n) == 0) continue;
    for (int m = n; m <= budget; ++m)
      for (const auto& f : enumerate_morphisms(n, m)) {
        Matrix k = kernel_basis(act_matrix(v, f));
        for (int j = 0; j < k.cols(); ++j) seeds.push_back({n, k.col(j)});
      }
  }
  TorsionLowerBound out;
  out.budget = budget;
  out.subspaces = generated_subspaces(v, seeds);
  return out;
}

TorsionReport is_torsion_module(const PresentedModule& p, int budget) {
  TorsionReport rep;
  if (p.max_degree() > budget)
    throw TruncationError("presentation degrees exceed the torsion budget");
  auto e = evaluate_presentation(p, budget);
  bool all_torsion = true;
  bool any_nonzero_generator = false;
  std::string missing;
  for (size_t j = 0; j < p.gens.size(); ++j) {
    Vec g = e.generator_class(int(j));
    if (!vec_is_zero(g)) any_nonzero_generator = true;
    auto verdict = torsion_witness(e.module, p.gens[j], g, budget);
    if (verdict.kind == TorsionVerdict::TORSION) {
      rep.witnesses.push_back({p.gens[j], verdict.witness});
    } else {
      all_torsion = false;
      missing += (missing.empty() ? "" : ", ") + std::to_string(j);
    }
  }
  if (all_torsion) {
    rep.verdict = ModuleTorsionVerdict::TORSION;
    rep.detail = "every generator is witnessed within budget " + std::to_string(budget);
    return rep;
  }
  bool relations_trivial = true;
  for (const auto& row : p.rel_matrix)
    for (const auto& entry : row)
      if (!entry.is_zero()) relations_trivial = false;
  if (relations_trivial && any_nonzero_generator) {
    rep.verdict = ModuleTorsionVerdict::NOT_TORSION;
    rep.detail = "free module certificate: no relations, so generators are non-torsion";
    return rep;
  }
  rep.verdict = ModuleTorsionVerdict::UNKNOWN;
  rep.detail = "generators {" + missing + "} not witnessed up to budget " +
               std::to_string(budget);
  return rep;
}

}  // namespace oirep
