#pragma once

#include <vector>

#include "oirep/matrix.hpp"

namespace oirep {

// A chain of unknown maps phi_n: k^{dims_w[n]} -> ... wired by constraints
//   phi_{n+1} * edges[n][k].first == edges[n][k].second * phi_n.
// intertwiner_basis solves for all families (phi_0..phi_N) at once.
//
// The solver propagates level by level instead of assembling one global
// kernel: at each step the constraint determines phi_{n+1} on the column
// space of the stacked domain matrices, imposes linear consistency
// conditions on the parameters found so far, and leaves fresh parameters
// on a complement. This keeps every elimination at the size of a single
// level, which is what makes the larger Hom computations feasible.
struct ChainSpec {
  std::vector<int> dims_v;  // size N+1
  std::vector<int> dims_w;  // size N+1
  // edges[n][k] = (D, W): D is dims_v[n+1] x dims_v[n], W is dims_w[n+1] x dims_w[n]
  std::vector<std::vector<std::pair<Matrix, Matrix>>> edges;  // size N
};

// Each solution is returned as its levelwise matrices phi_0..phi_N.
std::vector<std::vector<Matrix>> intertwiner_basis(const ChainSpec& spec);

}  // namespace oirep
