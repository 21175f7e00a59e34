#pragma once

#include <optional>
#include <string>

#include "oirep/module.hpp"
#include "oirep/torsion.hpp"

namespace oirep {

// A genuinely finite-dimensional module: the stored window is the whole
// module, extended by zero beyond the support.
struct FiniteDimModule {
  int support = 0;
  TruncatedModule data;  // truncation == support
};

FiniteDimModule finite_dim(TruncatedModule data);
TruncatedModule as_truncated(const FiniteDimModule& x, int truncation);

// Right modules, graded by the source level; gen[m][i-1] is the right action
// of the degree-1 morphism [m] -> [m+1] missing i, of shape dims[m] x dims[m+1].
struct RightModule {
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> gen;

  int top() const { return int(dims.size()) - 1; }
  int dim(int m) const { return dims.at(m); }
  const Matrix& gen_matrix(int m, int i) const { return gen.at(m).at(i - 1); }
};

// e_n kC: the free right module on [n]; finite, levelwise spanned by the
// morphisms into [n].
RightModule right_free(int n);
// the dual of a finite-dimensional left module
RightModule dual_right(const FiniteDimModule& x);
// transposed exchange relations
std::vector<RelationViolation> validate_right(const RightModule& x);
// the dual of e_n kC as a left module (levelwise transposes)
FiniteDimModule dual_of_right_free(int n);

// brute-force right-module intertwiners (dense kernel); the production path
// goes through the dual left modules, and this is its independent oracle
std::vector<std::vector<Matrix>> right_intertwiner_basis(const RightModule& a,
                                                         const RightModule& b);

// Dual of Hom into the category algebra. Exact because the domain is
// presented; the output support is bounded by the top generator degree.
struct NakayamaResult {
  FiniteDimModule module;
  std::vector<PresentedHom> homs;  // Hom(V, M(m)) bases per level
};

NakayamaResult nakayama(const PresentedModule& p, int out_levels = -1);

// Right-module homomorphisms from the dual of x into e_n kC, computed
// through the dual left modules; left action by postcomposition with left
// multiplication.
struct InverseNakayamaResult {
  TruncatedModule module;
  // basis of Hom(dual free, x) per level, as levelwise stacked columns
  std::vector<Matrix> hom_bases;
};

InverseNakayamaResult inverse_nakayama(const FiniteDimModule& x, int out_truncation);

// A map of presented modules: entries[jd][jc] has source cod.gens[jc] and
// target dom.gens[jd]; the generator jd of dom is sent to the sum of the
// entries acting on the generators of cod.
struct PresentedMap {
  PresentedModule dom;
  PresentedModule cod;
  std::vector<std::vector<AlgebraElement>> entries;
};

ModuleMap realize_presented_map(const PresentedMap& h, const EvaluatedPresentation& edom,
                                const EvaluatedPresentation& ecod);

// Covariant action of the Nakayama functor on a presented map.
std::vector<Matrix> nakayama_map(const PresentedMap& h, const NakayamaResult& nu_dom,
                                 const NakayamaResult& nu_cod);

// Precomposition by the degree-1 morphism missing i: the map whose kernels
// cut out the simple saturated submodules.
ModuleMap f_map(int n, int i, int truncation);

struct SimpleSaturated {
  Submodule sub;        // inside the free module on [n]
  int gen_level = -1;   // minimal level with a nonzero vector; -1 if none
  Vec generator;        // integer-normalized, in ambient coordinates
  bool generates = false;
};

// Intersection of the kernels of all f_i inside the free module on [n].
SimpleSaturated simple_saturated(int n, int truncation);

struct SaturationEvidence {
  bool sequence_exact = false;
  bool image_torsion_free = false;
  int hom_to_own_free = -1;    // expected 1
  int hom_to_lower_free = -1;  // expected 0
  bool hom_stable = false;
  int hom_quotient = -1;  // expected n
  bool pass = false;
  std::string detail;
};

SaturationEvidence saturation_evidence(int n, int truncation, int budget);

// Generators and relations read off a truncated module, with saturation
// flags: reliable only when no fresh generator or relation appears near the
// window top.
struct InferredPresentation {
  PresentedModule pres;
  bool gens_saturated = false;
  bool rels_saturated = false;
  int top_gen_level = -1;
  int top_rel_level = -1;
};

InferredPresentation infer_presentation(const TruncatedModule& y);

// Nakayama of a truncated module under the stabilization policy: the Hom
// dimensions into the free modules must agree at the window and two levels
// higher, else a StabilizationError is thrown. Used by the round-trip check,
// where the inverse image carries no presentation.
struct TruncatedNakayama {
  FiniteDimModule module;
  int window = 0;
  std::vector<int> dims_low;   // at the window
  std::vector<int> dims_high;  // two levels higher
};

TruncatedNakayama nakayama_truncated(const TruncatedModule& y, int out_levels, int window);

}  // namespace oirep
