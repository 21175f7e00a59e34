#pragma once

#include <optional>
#include <string>

#include "oirep/functors.hpp"

namespace oirep {

// The six adjacent pairs: four from the quintuple
// (colimit, gamma, shift, coinduction, R) and two from the triple
// (derivative, negative shift, shift-of-kernel).
enum class AdjointPair { PsiGamma, GammaS, SQ, QR, DB, BSK };

const char* pair_name(AdjointPair p);

struct AdjunctionRow {
  std::string v_desc;
  std::string w_desc;
  int dim_lhs = -1;
  int dim_rhs = -1;
  bool lhs_exact = false;
  bool rhs_exact = false;

  bool pass() const { return dim_lhs == dim_rhs && lhs_exact && rhs_exact; }
};

struct AdjunctionReport {
  AdjointPair pair = AdjointPair::SQ;
  Side side = Side::a;
  std::vector<AdjunctionRow> rows;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass()) return false;
    return !rows.empty();
  }
};

// A sample entry: a module, its description, and (when available) a finite
// presentation. The colimit/gamma pair requires the presentation.
struct SampleEntry {
  std::string desc;
  TruncatedModule module;
  std::optional<PresentedModule> pres;
};

// free modules, their quotients by the extreme-missing ideal images, the
// standing torsion module, and seeded random modules (count of them)
std::vector<SampleEntry> module_sample(Side s, int truncation, std::uint64_t seed, int count);
// same skeleton but every entry carries a presentation; randoms are random
// finite presentations
std::vector<SampleEntry> presented_sample(Side s, int truncation, std::uint64_t seed,
                                          int count);
PresentedModule random_presentation(Rng& rng);

// One Hom-cell comparison dim Hom(F V, W) = dim Hom(V, G W), both sides
// computed exactly under the finite-support / presented-domain policy.
AdjunctionRow check_adjoint_pair(AdjointPair pair, Side s, const SampleEntry& v,
                                 const TruncatedModule& w, int truncation);

AdjunctionReport check_pair_on_sample(AdjointPair pair, Side s, int truncation,
                                      std::uint64_t seed, int cells);

std::vector<AdjunctionReport> verify_all_adjunctions(Side s, int truncation,
                                                     std::uint64_t seed, int cells);

struct CompositeIsoReport {
  std::string name;
  std::vector<std::string> checked;
  bool pass = true;
};

// S.B = Id with the identity witness, D.Gamma = Id with the top-block
// witness, K.Q = B with the second-component witness.
std::vector<CompositeIsoReport> check_composite_isos(Side s, int truncation,
                                                     std::uint64_t seed, int count);

// Explicit transposition of the shift/coinduction adjunction and its
// inverse; the bijection and its naturality are tested, not assumed.
ModuleMap sq_transpose(Side s, const TruncatedModule& v, const TruncatedModule& w,
                       const ModuleMap& phi);
ModuleMap sq_untranspose(Side s, const TruncatedModule& v, const TruncatedModule& w,
                         const ModuleMap& psi);

}  // namespace oirep
