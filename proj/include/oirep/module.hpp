#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oirep/algebra.hpp"
#include "oirep/homsolve.hpp"
#include "oirep/matrix.hpp"
#include "oirep/morphism.hpp"
#include "oirep/rng.hpp"

namespace oirep {

// A representation given levelwise up to a truncation: dimensions d_0..d_N
// and one matrix per irreducible morphism. gen[n][i-1] is the action of the
// degree-1 morphism [n] -> [n+1] missing i, of shape d_{n+1} x d_n.
struct TruncatedModule {
  int truncation = 0;
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> gen;

  int dim(int n) const { return dims.at(n); }
  const Matrix& gen_matrix(int n, int i) const { return gen.at(n).at(i - 1); }
  Matrix& gen_matrix(int n, int i) { return gen.at(n).at(i - 1); }

  bool operator==(const TruncatedModule& o) const = default;
};

// All-zero action matrices of the right shapes.
TruncatedModule make_module(std::vector<int> dims);
TruncatedModule zero_module(int truncation);
// The representable module at [n]: level m spanned by the morphisms
// [n] -> [m], irreducibles acting by postcomposition.
TruncatedModule free_module(int n, int truncation);

struct RelationViolation {
  int level = 0;  // relation couples gen[level] and gen[level+1]
  int p = 0;
  int q = 0;
};

// Empty iff all exchange-relation instances hold, which is exactly what
// makes arbitrary-morphism action independent of the factorization order.
std::vector<RelationViolation> validate(const TruncatedModule& v);
void require_valid(const TruncatedModule& v);

Matrix act_matrix(const TruncatedModule& v, const OrdMorphism& f);
Vec act(const TruncatedModule& v, const OrdMorphism& f, const Vec& x);

// Levelwise matrices of a natural transformation; level[n]: W_n x V_n.
struct ModuleMap {
  std::vector<Matrix> level;
  int top_level() const { return int(level.size()) - 1; }
};

bool is_module_map(const TruncatedModule& v, const TruncatedModule& w, const ModuleMap& f);
ModuleMap identity_map(const TruncatedModule& v);
ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f);

struct Submodule {
  TruncatedModule module;
  std::vector<Matrix> inclusion;  // ambient_dim x sub_dim per level
};

// Wraps levelwise subspaces as a module; throws InvariantError if the
// subspaces are not closed under the action.
Submodule submodule_from_subspaces(const TruncatedModule& v, const std::vector<Matrix>& bases);
// Smallest action-closed family containing the seeds.
Submodule submodule_generate(const TruncatedModule& v,
                             const std::vector<std::pair<int, Vec>>& seeds);
std::vector<Matrix> generated_subspaces(const TruncatedModule& v,
                                        const std::vector<std::pair<int, Vec>>& seeds);

struct QuotientModule {
  TruncatedModule module;
  std::vector<Matrix> projection;  // quot_dim x ambient_dim per level
  std::vector<Matrix> lift;        // ambient_dim x quot_dim, projection*lift = 1
};

QuotientModule quotient(const TruncatedModule& v, const std::vector<Matrix>& subspaces);

TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b);

// Forget levels above the new truncation.
TruncatedModule truncate_to(const TruncatedModule& v, int new_truncation);
// Append zero levels; only lawful as an extension of the original module
// when the module genuinely vanishes beyond its window.
TruncatedModule extend_by_zero(const TruncatedModule& v, int new_truncation);

// Levelwise exactness of 0 -> A -> B -> C -> 0 on the common window.
bool short_exact_check(const TruncatedModule& a, const TruncatedModule& b,
                       const TruncatedModule& c, const ModuleMap& f, const ModuleMap& g);

enum class Exactness { exact, truncated };

// A basis of homomorphisms V -> W computed up to the truncation. Flagged
// exact when the codomain vanishes at the top level, so no constraint can
// be lost beyond the window; acceptance-grade comparisons only consume
// exact spaces.
struct HomSpace {
  Exactness flag = Exactness::truncated;
  std::vector<ModuleMap> basis;
  int dim() const { return int(basis.size()); }
};

HomSpace hom_truncated(const TruncatedModule& v, const TruncatedModule& w);

// A finitely presented module: cokernel of the map between free modules
// induced by right multiplication with the relation matrix. Entry (i, j)
// has source gens[j] and target rels[i].
struct PresentedModule {
  std::vector<int> gens;
  std::vector<int> rels;
  std::vector<std::vector<AlgebraElement>> rel_matrix;

  int max_degree() const;
};

PresentedModule free_presentation(int n);

struct EvaluatedPresentation {
  TruncatedModule module;
  std::vector<Matrix> projection;  // from the free cover, per level
  std::vector<Matrix> lift;
  std::vector<int> gen_degrees;

  // class of the j-th generator in the evaluated module
  Vec generator_class(int j) const;
};

EvaluatedPresentation evaluate_presentation(const PresentedModule& p, int truncation);

// Hom out of a presented module is the exact solution set of a finite
// linear system: tuples of generator images annihilated by the relations.
struct PresentedHom {
  Exactness flag = Exactness::exact;
  std::vector<int> gen_degrees;
  Matrix gen_images;  // stacked blocks W_{b_j}; one column per basis element
  int dim() const { return gen_images.cols(); }
};

PresentedHom hom_from_presentation(const PresentedModule& p, const TruncatedModule& w);

ModuleMap realize_presented_hom(const PresentedModule& p, const EvaluatedPresentation& e,
                                const TruncatedModule& w, const Vec& stacked_images);

struct IsoResult {
  enum Kind { ISO, NOT_ISO, UNKNOWN } kind = UNKNOWN;
  ModuleMap witness;
  std::string reason;
};

// NOT_ISO on a dimension mismatch or a vanishing Hom space; ISO with an
// explicit invertible intertwiner when one is found; UNKNOWN when the
// randomized search fails (never claims NOT_ISO in that case).
IsoResult is_isomorphic(const TruncatedModule& v, const TruncatedModule& w,
                        std::uint64_t seed = 1, int trials = 25);

// Random lawful module: dimensions <= max_dim are sampled, the first layer
// of matrices is free, and each next layer is a random point of the linear
// variety cut out by the exchange relations against the previous layer.
TruncatedModule random_module(Rng& rng, int truncation, int max_dim);
TruncatedModule random_module_with_dims(Rng& rng, std::vector<int> dims);
TruncatedModule random_finite_support_module(Rng& rng, int truncation, int support,
                                             int max_dim);

struct SesSample {
  TruncatedModule sub, total, quot;
  ModuleMap inclusion, projection;
};

SesSample random_ses(Rng& rng, int truncation, int max_dim);

}  // namespace oirep
