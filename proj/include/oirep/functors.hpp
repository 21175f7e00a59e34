#pragma once

#include <optional>
#include <string_view>

#include "oirep/module.hpp"

namespace oirep {

// The operations on modules induced by adding/removing an extreme element.
// Truncation bookkeeping is explicit: shift/kernel/derivative consume one
// level, the coinduction right adjoint consumes two (its top level would
// need an annihilator beyond the window), the degree-raising functors
// consume none.
enum class FunctorName { Sa, Sb, Ka, Kb, Da, Db, Ga, Gb, Qa, Qb, Ba, Bb, Ra, Rb, PsiA, PsiB };

Side functor_side(FunctorName f);
const char* functor_name_str(FunctorName f);
std::optional<FunctorName> parse_functor_name(std::string_view text);

struct PsiDiagnostics {
  std::vector<int> r0;                      // stabilization onset per output level
  std::vector<std::vector<int>> dim_trace;  // quotient dimensions along each chain
  bool mirror_construction = false;         // side b is the mirrored formula
};

struct FunctorResult {
  TruncatedModule module;
  // provenance maps; occupancy depends on the functor:
  //   shift:          map_a = natural map V -> SV
  //   kernel:         map_a = inclusion KV -> V
  //   derivative:     map_a = projection SV -> DV, lifts = its sections
  //   coinduction:    map_a = BV -> QV, map_b = QV -> V
  //   negative shift: none
  //   r-functor:      map_a = V -> RV, map_b = RV -> SKV
  ModuleMap map_a;
  ModuleMap map_b;
  std::vector<Matrix> lifts;
  PsiDiagnostics psi;
};

// (S V)_n = V_{n+1}, restriction along the self-embedding.
FunctorResult shift(Side s, const TruncatedModule& v);
// (K V)_n = kernel of the natural map into the shift; equals the levelwise
// annihilator of the extreme-missing ideal.
FunctorResult kernel_functor(Side s, const TruncatedModule& v);
// (D V)_n = cokernel of the natural map into the shift.
FunctorResult derivative(Side s, const TruncatedModule& v);
// (G V)_n = V_0 + ... + V_{n-1} with block actions; left adjoint of shift.
FunctorResult gamma_functor(Side s, const TruncatedModule& v);
// (Q V)_n = V_n + V_{n-1}; right adjoint of shift.
FunctorResult coinduction(Side s, const TruncatedModule& v);
// (B V)_n = V_{n-1} with the guard: a morphism acts through its restriction
// when it preserves the extreme point and by zero otherwise.
FunctorResult negative_shift(Side s, const TruncatedModule& v);
// Pull-back along the self-submerging functor (no guard). Kept separate:
// the two restrictions have different kernels and are genuinely different
// functors; their comparison is a test, not an identification.
FunctorResult pullback_negative_shift(Side s, const TruncatedModule& v);
// (R V)_n = V_n + (K V)_{n+1}; right adjoint of coinduction.
FunctorResult r_functor(Side s, const TruncatedModule& v);
// Colimit-of-quotients left adjoint of gamma_functor; out_truncation = -1
// picks the largest window whose stabilization certificates hold.
FunctorResult psi_functor(Side s, const TruncatedModule& v, int out_truncation = -1);

FunctorResult apply_functor(FunctorName f, const TruncatedModule& v);

struct MappedFunctor {
  FunctorResult dom;
  FunctorResult cod;
  ModuleMap map;
};

// Functorial action on a module map, with the functor applied to both ends.
MappedFunctor apply_functor_to_map(FunctorName f, const TruncatedModule& vdom,
                                   const TruncatedModule& vcod, const ModuleMap& h);

// Levelwise span of (difference ideal) * module, computed by the degree-1
// recursion; the direct all-parallel-pairs span is a test oracle against it.
std::vector<Matrix> augmentation_action_subspaces(const TruncatedModule& v);

struct ColimitTrace {
  std::vector<int> dims;  // quotient dimension per level
  int r0 = 0;             // first level from which all connecting maps are iso
  bool stabilized = false;
};

// The chain V/AV with its connecting maps along the canonical degree-1
// morphisms of the given side; the colimit value is the stabilized top.
ColimitTrace augmentation_colimit_trace(Side chain_side, const TruncatedModule& v);

// Levelwise annihilator of the Ia/Ib slices acting on v (independent route
// to the kernel functor's subspaces; used as a cross-check).
std::vector<Matrix> annihilator_subspaces(Side s, const TruncatedModule& v);

}  // namespace oirep
