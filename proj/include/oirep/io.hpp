#pragma once

#include <iosfwd>
#include <string>

#include "oirep/module.hpp"
#include "oirep/nakayama.hpp"

namespace oirep {

// Textual morphism form "m->n:[v1,...,vm]"; identities as "n->n:id".
OrdMorphism parse_morphism(const std::string& text);

// Sums of rational multiples of morphisms, e.g. "1->2:[2] - 1->2:[1]" or
// "3/2*2->3:[1,3] + 2->3:[2,3]"; "0" for the zero element of a slice.
AlgebraElement parse_algebra_element(const std::string& text, int source, int target);

// Module files: a "truncation:"/"dims:" header followed by one labeled
// row-major matrix block per irreducible generator.
void write_module(std::ostream& os, const TruncatedModule& v);
TruncatedModule read_module(std::istream& is);
std::string module_to_text(const TruncatedModule& v);
TruncatedModule module_from_text(const std::string& text);

// Finite-dimensional modules use a "support:" header, same body.
void write_finite_dim(std::ostream& os, const FiniteDimModule& x);
FiniteDimModule read_finite_dim(std::istream& is);

// Presented modules: generator/relation degree lists plus one labeled
// algebra element per relation matrix entry.
void write_presentation(std::ostream& os, const PresentedModule& p);
PresentedModule read_presentation(std::istream& is);
std::string presentation_to_text(const PresentedModule& p);
PresentedModule presentation_from_text(const std::string& text);

}  // namespace oirep
