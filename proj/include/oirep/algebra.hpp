#pragma once

#include <map>
#include <utility>
#include <vector>

#include "oirep/matrix.hpp"
#include "oirep/morphism.hpp"

namespace oirep {

// A finitely supported element of one (source, target) slice of the category
// algebra; coefficients indexed by enumerate_morphisms order.
struct AlgebraElement {
  int source = 0;
  int target = 0;
  Vec coeffs;

  bool is_zero() const { return vec_is_zero(coeffs); }
  bool operator==(const AlgebraElement& o) const = default;
};

AlgebraElement algebra_zero(int m, int n);
AlgebraElement algebra_element(const OrdMorphism& f);
AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
// Algebra product g.f (composition order); slices must be composable.
AlgebraElement algebra_product(const AlgebraElement& g, const AlgebraElement& f);
std::string to_text(const AlgebraElement& a);

// The level-(m, n) component of an ideal: a subspace of the morphism span,
// held as a canonical column basis.
struct IdealSlice {
  int source = 0;
  int target = 0;
  Matrix basis;

  int dim() const { return basis.cols(); }
};

enum class IdealName { Ia, Ib, Aug };

// Ia: span of morphisms missing the minimum; Ib: missing the maximum
// (both ideals of the positive part, source >= 1). Aug: span of differences
// of parallel morphisms.
IdealSlice named_ideal_slice(IdealName name, int m, int n);

// Structural maps on morphism spans.
// postcompose: span C([m],[g.source]) -> span C([m],[g.target]), b -> g.b
Matrix postcompose_matrix(const OrdMorphism& g, int m);
// precompose: span C([f.target],[r]) -> span C([f.source],[r]), b -> b.f
Matrix precompose_matrix(const OrdMorphism& f, int r);
// full submerging map on spans: a -> submerge(s, a)
Matrix submerge_matrix(Side s, int m, int n);
// guarded map: a -> submerge(s, a) when a keeps the extreme point, else 0
Matrix guarded_submerge_matrix(Side s, int m, int n);

// Kernel of the submerging-induced algebra map at level (m, n).
IdealSlice submerge_kernel_slice(Side s, int m, int n);
// Kernel of the guarded algebra map at level (m, n); coincides with the
// named Ia/Ib slice (tested, not assumed).
IdealSlice guarded_kernel_slice(Side s, int m, int n);

enum class ClosureKind { left, right, two_sided };
// Which algebra the closure happens in: the whole category algebra or its
// positive part (sources >= 1).
enum class Ambient { full, positive };

using SliceKey = std::pair<int, int>;  // (source, target)
using SliceFamily = std::map<SliceKey, IdealSlice>;

// Smallest family of slices containing the generators and closed under the
// requested compositions with morphisms of target/source level <= max_level.
SliceFamily ideal_closure(const std::vector<AlgebraElement>& generators,
                          ClosureKind kind, int max_level, Ambient ambient);

// Difference generators alpha - beta spanning the augmentation ideal slicewise
// (lex-consecutive pairs), for feeding the closure operator.
std::vector<AlgebraElement> augmentation_generators(int max_level);

}  // namespace oirep
