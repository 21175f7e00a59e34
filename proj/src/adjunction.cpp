#include "oirep/adjunction.hpp"

#include <algorithm>

namespace oirep {

namespace {

int rho_index(Side s, int n) { return s == Side::a ? 1 : n + 1; }

HomSpace hom_at(const TruncatedModule& v, const TruncatedModule& w, int top) {
  return hom_truncated(truncate_to(v, top), truncate_to(w, top));
}

PresentedModule quotient_presentation(Side s, int n) {
  PresentedModule p;
  p.gens = {n + 1};
  p.rels = {n + 2};
  p.rel_matrix = {{algebra_element(irreducible(n + 1, s == Side::a ? 1 : n + 2))}};
  return p;
}

}  // namespace

const char* pair_name(AdjointPair p) {
  switch (p) {
    case AdjointPair::PsiGamma: return "(Psi, Gamma)";
    case AdjointPair::GammaS: return "(Gamma, S)";
    case AdjointPair::SQ: return "(S, Q)";
    case AdjointPair::QR: return "(Q, R)";
    case AdjointPair::DB: return "(D, B)";
    case AdjointPair::BSK: return "(B, SK)";
  }
  return "?";
}

PresentedModule random_presentation(Rng& rng) {
  PresentedModule p;
  int ngens = 1 + rng.below(2);
  for (int j = 0; j < ngens; ++j) p.gens.push_back(rng.below(3));
  int nrels = rng.below(3);
  int maxgen = *std::max_element(p.gens.begin(), p.gens.end());
  for (int i = 0; i < nrels; ++i) {
    int deg = maxgen + 1 + rng.below(2);
    p.rels.push_back(deg);
    std::vector<AlgebraElement> row;
    for (int j = 0; j < ngens; ++j) {
      AlgebraElement e = algebra_zero(p.gens[j], deg);
      for (auto& c : e.coeffs) c = Scalar(rng.small_int(1));
      row.push_back(std::move(e));
    }
    p.rel_matrix.push_back(std::move(row));
  }
  return p;
}

std::vector<SampleEntry> module_sample(Side s, int truncation, std::uint64_t seed,
                                       int count) {
  std::vector<SampleEntry> out;
  for (int n = 0; n <= 3; ++n)
    out.push_back({"M(" + std::to_string(n) + ")", free_module(n, truncation),
                   free_presentation(n)});
  for (int n = 0; n <= 3; ++n) {
    auto p = quotient_presentation(s, n);
    out.push_back({"M(" + std::to_string(n + 1) + ")/ideal",
                   evaluate_presentation(p, truncation).module, p});
  }
  {
    PresentedModule wp;
    wp.gens = {1};
    wp.rels = {2};
    wp.rel_matrix = {{algebra_element(irreducible(1, 1))}};
    out.push_back({"W", evaluate_presentation(wp, truncation).module, wp});
  }
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    Rng sub = rng.fork();
    out.push_back({"random#" + std::to_string(k), random_module(sub, truncation, 3),
                   std::nullopt});
  }
  return out;
}

std::vector<SampleEntry> presented_sample(Side s, int truncation, std::uint64_t seed,
                                          int count) {
  std::vector<SampleEntry> out = module_sample(s, truncation, seed, 0);
  Rng rng(seed + 1);
  for (int k = 0; k < count; ++k) {
    Rng sub = rng.fork();
    auto p = random_presentation(sub);
    out.push_back({"random-pres#" + std::to_string(k),
                   evaluate_presentation(p, truncation).module, p});
  }
  return out;
}

AdjunctionRow check_adjoint_pair(AdjointPair pair, Side s, const SampleEntry& v,
                                 const TruncatedModule& w, int truncation) {
  const int n_top = truncation;
  AdjunctionRow row;
  row.v_desc = v.desc;
  row.w_desc = "w";
  switch (pair) {
    case AdjointPair::SQ: {
      auto lhs = hom_at(shift(s, v.module).module, w, n_top - 1);
      auto rhs = hom_at(v.module, coinduction(s, w).module, n_top);
      row.dim_lhs = lhs.dim();
      row.dim_rhs = rhs.dim();
      row.lhs_exact = lhs.flag == Exactness::exact;
      row.rhs_exact = rhs.flag == Exactness::exact;
      return row;
    }
    case AdjointPair::QR: {
      auto lhs = hom_at(coinduction(s, v.module).module, w, n_top);
      auto rw = r_functor(s, w);
      auto rhs = hom_at(v.module, rw.module, rw.module.truncation);
      row.dim_lhs = lhs.dim();
      row.dim_rhs = rhs.dim();
      row.lhs_exact = lhs.flag == Exactness::exact;
      row.rhs_exact = rhs.flag == Exactness::exact;
      return row;
    }
    case AdjointPair::GammaS: {
      auto lhs = hom_at(gamma_functor(s, v.module).module, w, n_top);
      auto rhs = hom_at(v.module, shift(s, w).module, n_top - 1);
      row.dim_lhs = lhs.dim();
      row.dim_rhs = rhs.dim();
      row.lhs_exact = lhs.flag == Exactness::exact;
      row.rhs_exact = rhs.flag == Exactness::exact;
      return row;
    }
    case AdjointPair::DB: {
      auto lhs = hom_at(derivative(s, v.module).module, w, n_top - 1);
      auto bw = truncate_to(negative_shift(s, w).module, n_top);
      auto rhs = hom_at(v.module, bw, n_top);
      row.dim_lhs = lhs.dim();
      row.dim_rhs = rhs.dim();
      row.lhs_exact = lhs.flag == Exactness::exact;
      row.rhs_exact = rhs.flag == Exactness::exact;
      return row;
    }
    case AdjointPair::BSK: {
      auto bv = truncate_to(negative_shift(s, v.module).module, n_top);
      auto lhs = hom_at(bv, w, n_top);
      auto sk = shift(s, kernel_functor(s, w).module);
      auto rhs = hom_at(v.module, sk.module, n_top - 2);
      row.dim_lhs = lhs.dim();
      row.dim_rhs = rhs.dim();
      row.lhs_exact = lhs.flag == Exactness::exact;
      row.rhs_exact = rhs.flag == Exactness::exact;
      return row;
    }
    case AdjointPair::PsiGamma: {
      if (!v.pres) throw DomainError("policy error: colimit pair needs a presented domain");
      auto psi = psi_functor(s, v.module);
      const int t = psi.module.truncation;
      if (truncate_to(w, t).dim(t) != 0)
        throw DomainError("policy error: codomain support exceeds the colimit window");
      auto lhs = hom_at(psi.module, w, t);
      auto gw = gamma_functor(s, w);
      auto rhs = hom_from_presentation(*v.pres, gw.module);
      row.dim_lhs = lhs.dim();
      row.dim_rhs = rhs.dim();
      row.lhs_exact = lhs.flag == Exactness::exact;
      row.rhs_exact = rhs.flag == Exactness::exact;
      return row;
    }
  }
  throw DomainError("unknown pair");
}

AdjunctionReport check_pair_on_sample(AdjointPair pair, Side s, int truncation,
                                      std::uint64_t seed, int cells) {
  AdjunctionReport rep;
  rep.pair = pair;
  rep.side = s;
  auto sample = pair == AdjointPair::PsiGamma
                    ? presented_sample(s, truncation, seed, cells)
                    : module_sample(s, truncation, seed, cells);
  Rng wrng(seed ^ 0x9e3779b97f4a7c15ULL);
  int used = 0;
  for (const auto& v : sample) {
    if (used >= cells + 9) break;
    Rng sub = wrng.fork();
    // support bound keeping every Hom cell exact under the pair's windows;
    // the colimit pair must fit inside the stabilized window of this domain
    int support = truncation - 3;
    if (pair == AdjointPair::PsiGamma) {
      int window = psi_functor(s, v.module).module.truncation;
      if (window < 1) continue;
      support = std::min(2, window - 1);
    }
    TruncatedModule w = random_finite_support_module(sub, truncation, support, 2);
    auto row = check_adjoint_pair(pair, s, v, w, truncation);
    row.w_desc = "fs-random#" + std::to_string(used);
    rep.rows.push_back(row);
    ++used;
  }
  return rep;
}

std::vector<AdjunctionReport> verify_all_adjunctions(Side s, int truncation,
                                                     std::uint64_t seed, int cells) {
  std::vector<AdjunctionReport> out;
  for (AdjointPair p : {AdjointPair::PsiGamma, AdjointPair::GammaS, AdjointPair::SQ,
                        AdjointPair::QR, AdjointPair::DB, AdjointPair::BSK})
    out.push_back(check_pair_on_sample(p, s, truncation, seed, cells));
  return out;
}

namespace {

bool iso_with_witness(const TruncatedModule& from, const TruncatedModule& to,
                      const ModuleMap& witness) {
  if (!is_module_map(from, to, witness)) return false;
  for (const auto& m : witness.level)
    if (!is_invertible(m)) return false;
  return true;
}

}  // namespace

std::vector<CompositeIsoReport> check_composite_isos(Side s, int truncation,
                                                     std::uint64_t seed, int count) {
  std::vector<CompositeIsoReport> out(3);
  out[0].name = "S.B = Id";
  out[1].name = "D.Gamma = Id";
  out[2].name = "K.Q = B";
  auto sample = module_sample(s, truncation, seed, count);
  for (const auto& entry : sample) {
    const TruncatedModule& v = entry.module;
    {
      auto sb = shift(s, negative_shift(s, v).module);
      bool ok = sb.module == v;  // the identity is the witness
      out[0].pass = out[0].pass && ok;
      out[0].checked.push_back(entry.desc + (ok ? ": identity witness" : ": FAIL"));
    }
    {
      auto g = gamma_functor(s, v);
      auto d = derivative(s, g.module);
      // witness: include V_n as the top block of (Gamma V)_{n+1}, then project
      ModuleMap witness;
      bool ok = true;
      for (int n = 0; n <= d.module.truncation; ++n) {
        int off = 0;
        for (int t = 0; t < n; ++t) off += v.dim(t);
        Matrix inc(g.module.dim(n + 1), v.dim(n));
        for (int j = 0; j < v.dim(n); ++j) inc.at(off + j, j) = Scalar(1);
        witness.level.push_back(d.map_a.level[n] * inc);
      }
      ok = iso_with_witness(truncate_to(v, d.module.truncation), d.module, witness);
      out[1].pass = out[1].pass && ok;
      out[1].checked.push_back(entry.desc + (ok ? ": top-block witness" : ": FAIL"));
    }
    {
      auto q = coinduction(s, v);
      auto kq = kernel_functor(s, q.module);
      auto b = negative_shift(s, v);
      const int top = kq.module.truncation;
      // witness: w -> (0, w), landing inside the annihilator
      ModuleMap witness;
      bool ok = true;
      for (int n = 0; n <= top; ++n) {
        Matrix embed(q.module.dim(n), v.dim(n - 1 >= 0 ? n - 1 : 0));
        if (n >= 1)
          embed.paste(v.dim(n), 0, Matrix::identity(v.dim(n - 1)));
        else
          embed = Matrix(q.module.dim(0), 0);
        auto coords = solve_matrix(kq.map_a.level[n], embed);
        if (!coords || !(kq.map_a.level[n] * *coords == embed)) {
          ok = false;
          break;
        }
        witness.level.push_back(*coords);
      }
      ok = ok && iso_with_witness(truncate_to(b.module, top), kq.module, witness);
      out[2].pass = out[2].pass && ok;
      out[2].checked.push_back(entry.desc + (ok ? ": second-component witness" : ": FAIL"));
    }
  }
  return out;
}

ModuleMap sq_transpose(Side s, const TruncatedModule& v, const TruncatedModule& w,
                       const ModuleMap& phi) {
  // phi: shift(V) -> W levelwise; psi_n(x) = (phi_n(nat x), phi_{n-1}(x))
  ModuleMap psi;
  const int top = phi.top_level();
  for (int n = 0; n <= top; ++n) {
    Matrix topblock = phi.level[n] * v.gen_matrix(n, rho_index(s, n));
    Matrix m(w.dim(n) + (n >= 1 ? w.dim(n - 1) : 0), v.dim(n));
    m.paste(0, 0, topblock);
    if (n >= 1) m.paste(w.dim(n), 0, phi.level[n - 1]);
    psi.level.push_back(std::move(m));
  }
  return psi;
}

ModuleMap sq_untranspose(Side s, const TruncatedModule& v, const TruncatedModule& w,
                         const ModuleMap& psi) {
  (void)s;
  ModuleMap phi;
  for (int n = 1; n <= psi.top_level(); ++n) {
    Matrix bottom(w.dim(n - 1), v.dim(n));
    for (int i = 0; i < w.dim(n - 1); ++i)
      for (int j = 0; j < v.dim(n); ++j) bottom.at(i, j) = psi.level[n].at(w.dim(n) + i, j);
    phi.level.push_back(std::move(bottom));
  }
  return phi;
}

}  // namespace oirep
