#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oirep/errors.hpp"

namespace oirep {

// Every min/max-parameterized construction comes in two flavours related by
// the mirror symmetry i -> n+1-i; side b is implemented independently and the
// symmetry is a test, not an implementation.
enum class Side { a, b };

inline const char* side_name(Side s) { return s == Side::a ? "a" : "b"; }

long long binom(int n, int k);

// A strictly increasing function [m] -> [n], stored by its value sequence
// (1-based, empty when m = 0). The image bitmask is only a hash key.
struct OrdMorphism {
  int source = 0;
  int target = 0;
  std::vector<int> values;

  bool is_identity() const { return source == target; }
  int degree() const { return target - source; }
  int operator()(int i) const { return values[i - 1]; }  // 1-based

  bool operator==(const OrdMorphism& o) const = default;
  bool operator<(const OrdMorphism& o) const;

  std::uint64_t image_mask() const;
};

OrdMorphism identity_morphism(int n);
// alpha_{n,i}: the degree-1 morphism [n] -> [n+1] whose image omits i.
OrdMorphism irreducible(int n, int i);
OrdMorphism make_morphism(int m, int n, std::vector<int> values);
// The canonical inclusion [m] -> [n], i -> i.
OrdMorphism canonical_inclusion(int m, int n);

bool hits_min(const OrdMorphism& f);  // 1 in the image
bool hits_max(const OrdMorphism& f);  // target in the image

OrdMorphism compose(const OrdMorphism& g, const OrdMorphism& f);

// All binom(n, m) strictly increasing maps [m] -> [n] in lexicographic order
// of value sequences; empty for m > n; the unique empty-source morphism for
// m = 0.
std::vector<OrdMorphism> enumerate_morphisms(int m, int n);

// Position of f in enumerate_morphisms(f.source, f.target).
int morphism_index(const OrdMorphism& f);

// Canonical factorization into degree-1 morphisms, largest missing target
// element outermost; empty exactly for identities; composing the returned
// list left to right reproduces f.
std::vector<OrdMorphism> factorize(const OrdMorphism& f);

// Self-embedding on morphisms: side a prepends a new fixed minimum
// (f~(1) = 1, f~(i) = f(i-1)+1), side b appends a new fixed maximum.
OrdMorphism embed(Side s, const OrdMorphism& f);

// Self-submerging on morphisms (source must be positive): side a deletes the
// minimum and shifts down, side b restricts away the maximum.
OrdMorphism submerge(Side s, const OrdMorphism& f);

enum class BoundaryDir { lower, raise };

// The four boundary constructions on a morphism f: [n] -> [l].
//   lower/a: [n]   -> [l-1], i -> f(i)-1,   needs 1 not in the image;
//   lower/b: [n]   -> [l-1], i -> f(i),     needs l not in the image;
//   raise/a: [n+1] -> [l],   1 -> 1 then f shifted, needs 1 not in the image;
//   raise/b: [n+1] -> [l],   f then n+1 -> l,       needs l not in the image.
OrdMorphism boundary(Side s, BoundaryDir d, const OrdMorphism& f);

// Conjugation by the order-reversing bijection of [n].
OrdMorphism mirror(const OrdMorphism& f);

// Textual form "m->n:[v1,...,vm]"; identities render as "n->n:id".
std::string to_text(const OrdMorphism& f);

}  // namespace oirep
