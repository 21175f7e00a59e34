#include "oirep/functors.hpp"

#include <algorithm>

namespace oirep {

namespace {

int rho_index(Side s, int n) { return s == Side::a ? 1 : n + 1; }

int shifted_index(Side s, int i) { return s == Side::a ? i + 1 : i; }

Side opposite(Side s) { return s == Side::a ? Side::b : Side::a; }

// The level-u component of the map of iterated shifts induced by alpha:
// chain side b fixes the bottom u points, the mirror fixes the top u points.
OrdMorphism bifunctor_tau(Side chain_side, const OrdMorphism& alpha, int u) {
  const int n = alpha.source, n2 = alpha.target;
  std::vector<int> vals(n + u);
  if (chain_side == Side::b) {
    for (int j = 1; j <= u; ++j) vals[j - 1] = j;
    for (int j = 1; j <= n; ++j) vals[u + j - 1] = alpha(j) + u;
  } else {
    for (int j = 1; j <= n; ++j) vals[j - 1] = alpha(j);
    for (int j = 1; j <= u; ++j) vals[n + j - 1] = n2 + j;
  }
  return make_morphism(n + u, n2 + u, std::move(vals));
}

}  // namespace

Side functor_side(FunctorName f) {
  switch (f) {
    case FunctorName::Sa:
    case FunctorName::Ka:
    case FunctorName::Da:
    case FunctorName::Ga:
    case FunctorName::Qa:
    case FunctorName::Ba:
    case FunctorName::Ra:
    case FunctorName::PsiA:
      return Side::a;
    default:
      return Side::b;
  }
}

const char* functor_name_str(FunctorName f) {
  switch (f) {
    case FunctorName::Sa: return "Sa";
    case FunctorName::Sb: return "Sb";
    case FunctorName::Ka: return "Ka";
    case FunctorName::Kb: return "Kb";
    case FunctorName::Da: return "Da";
    case FunctorName::Db: return "Db";
    case FunctorName::Ga: return "Ga";
    case FunctorName::Gb: return "Gb";
    case FunctorName::Qa: return "Qa";
    case FunctorName::Qb: return "Qb";
    case FunctorName::Ba: return "Ba";
    case FunctorName::Bb: return "Bb";
    case FunctorName::Ra: return "Ra";
    case FunctorName::Rb: return "Rb";
    case FunctorName::PsiA: return "PsiA";
    case FunctorName::PsiB: return "PsiB";
  }
  return "?";
}

std::optional<FunctorName> parse_functor_name(std::string_view text) {
  for (FunctorName f : {FunctorName::Sa, FunctorName::Sb, FunctorName::Ka, FunctorName::Kb,
                        FunctorName::Da, FunctorName::Db, FunctorName::Ga, FunctorName::Gb,
                        FunctorName::Qa, FunctorName::Qb, FunctorName::Ba, FunctorName::Bb,
                        FunctorName::Ra, FunctorName::Rb, FunctorName::PsiA,
                        FunctorName::PsiB})
    if (text == functor_name_str(f)) return f;
  return std::nullopt;
}

FunctorResult shift(Side s, const TruncatedModule& v) {
  if (v.truncation < 1) throw TruncationError("shift: truncation exhausted");
  const int out = v.truncation - 1;
  FunctorResult r;
  std::vector<int> dims(out + 1);
  for (int n = 0; n <= out; ++n) dims[n] = v.dim(n + 1);
  r.module = make_module(std::move(dims));
  for (int n = 0; n < out; ++n)
    for (int i = 1; i <= n + 1; ++i)
      r.module.gen_matrix(n, i) = v.gen_matrix(n + 1, shifted_index(s, i));
  for (int n = 0; n <= out; ++n) r.map_a.level.push_back(v.gen_matrix(n, rho_index(s, n)));
  return r;
}

FunctorResult kernel_functor(Side s, const TruncatedModule& v) {
  if (v.truncation < 1) throw TruncationError("kernel functor: truncation exhausted");
  const int out = v.truncation - 1;
  std::vector<Matrix> kers(out + 1);
  for (int n = 0; n <= out; ++n)
    kers[n] = column_space(kernel_basis(v.gen_matrix(n, rho_index(s, n))));
  Submodule sub = submodule_from_subspaces(truncate_to(v, out), kers);
  FunctorResult r;
  r.module = std::move(sub.module);
  r.map_a.level = std::move(sub.inclusion);
  return r;
}

FunctorResult derivative(Side s, const TruncatedModule& v) {
  FunctorResult sh = shift(s, v);
  const int out = sh.module.truncation;
  std::vector<Matrix> images(out + 1);
  for (int n = 0; n <= out; ++n) images[n] = column_space(sh.map_a.level[n]);
  QuotientModule q = quotient(sh.module, images);
  FunctorResult r;
  r.module = std::move(q.module);
  r.map_a.level = std::move(q.projection);
  r.lifts = std::move(q.lift);
  return r;
}

FunctorResult gamma_functor(Side s, const TruncatedModule& v) {
  const int out = v.truncation;
  std::vector<int> dims(out + 1, 0);
  std::vector<std::vector<int>> offset(out + 1);
  for (int m = 0; m <= out; ++m) {
    offset[m].resize(m + 1, 0);
    for (int t = 0; t < m; ++t) {
      offset[m][t] = dims[m];
      dims[m] += v.dim(t);
    }
  }
  FunctorResult r;
  r.module = make_module(dims);
  for (int m = 0; m < out; ++m)
    for (int i = 1; i <= m + 1; ++i) {
      OrdMorphism alpha = irreducible(m, i);
      Matrix& g = r.module.gen_matrix(m, i);
      for (int t = 0; t < m; ++t) {
        int spos = (s == Side::a) ? m - t : t + 1;
        int t2 = (s == Side::a) ? (m + 1) - alpha(spos) : alpha(spos) - 1;
        std::vector<int> vals(t);
        for (int j = 1; j <= t; ++j)
          vals[j - 1] = (s == Side::a) ? alpha(spos + j) - alpha(spos) : alpha(j);
        OrdMorphism block_mor = make_morphism(t, t2, std::move(vals));
        g.paste(offset[m + 1][t2], offset[m][t], act_matrix(v, block_mor));
      }
    }
  return r;
}

FunctorResult coinduction(Side s, const TruncatedModule& v) {
  const int out = v.truncation;
  auto below = [&](int n) { return n >= 1 ? v.dim(n - 1) : 0; };
  std::vector<int> dims(out + 1);
  for (int n = 0; n <= out; ++n) dims[n] = v.dim(n) + below(n);
  FunctorResult r;
  r.module = make_module(std::move(dims));
  for (int n = 0; n < out; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      Matrix& g = r.module.gen_matrix(n, i);
      g.paste(0, 0, v.gen_matrix(n, i));
      const bool guard = n >= 1 && (s == Side::a ? i >= 2 : i <= n);
      if (guard) {
        g.paste(v.dim(n + 1), v.dim(n),
                v.gen_matrix(n - 1, s == Side::a ? i - 1 : i));
      } else {
        g.paste(v.dim(n + 1), 0, Matrix::identity(v.dim(n)));
      }
    }
  for (int n = 0; n <= out; ++n) {
    Matrix inc(r.module.dim(n), below(n));
    if (below(n) > 0) inc.paste(v.dim(n), 0, Matrix::identity(below(n)));
    r.map_a.level.push_back(std::move(inc));
    Matrix pr(v.dim(n), r.module.dim(n));
    pr.paste(0, 0, Matrix::identity(v.dim(n)));
    r.map_b.level.push_back(std::move(pr));
  }
  return r;
}

namespace {

FunctorResult negative_shift_impl(Side s, const TruncatedModule& v, bool guarded) {
  const int out = v.truncation + 1;
  std::vector<int> dims(out + 1, 0);
  for (int n = 1; n <= out; ++n) dims[n] = v.dim(n - 1);
  FunctorResult r;
  r.module = make_module(std::move(dims));
  for (int n = 1; n < out; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      const bool keeps_extreme = (s == Side::a) ? i >= 2 : i <= n;
      if (keeps_extreme) {
        r.module.gen_matrix(n, i) = v.gen_matrix(n - 1, s == Side::a ? i - 1 : i);
      } else if (!guarded) {
        // submerging the extreme irreducible lands on the nearest
        // irreducible of the same side
        r.module.gen_matrix(n, i) = v.gen_matrix(n - 1, s == Side::a ? 1 : n);
      }
    }
  return r;
}

// Kernel subspaces of the natural map, with the top one available exactly
// when the module is visibly zero there.
std::vector<Matrix> r_kernel_bases(Side s, const TruncatedModule& v, int top_needed) {
  std::vector<Matrix> kb(top_needed + 1);
  for (int m = 0; m <= top_needed; ++m) {
    if (m <= v.truncation - 1) {
      kb[m] = column_space(kernel_basis(v.gen_matrix(m, rho_index(s, m))));
    } else {
      if (v.dim(m) != 0)
        throw TruncationError("r functor: annihilator not computable at the window top");
      kb[m] = Matrix(0, 0);
    }
  }
  return kb;
}

}  // namespace

FunctorResult negative_shift(Side s, const TruncatedModule& v) {
  return negative_shift_impl(s, v, true);
}

FunctorResult pullback_negative_shift(Side s, const TruncatedModule& v) {
  return negative_shift_impl(s, v, false);
}

FunctorResult r_functor(Side s, const TruncatedModule& v) {
  const int n_top = v.truncation;
  const int out = v.dim(n_top) == 0 ? n_top - 1 : n_top - 2;
  if (out < 0) throw TruncationError("r functor: truncation exhausted");
  auto kb = r_kernel_bases(s, v, out + 1);
  std::vector<int> dims(out + 1);
  for (int n = 0; n <= out; ++n) dims[n] = v.dim(n) + kb[n + 1].cols();
  FunctorResult r;
  r.module = make_module(std::move(dims));
  for (int n = 0; n < out; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      Matrix& g = r.module.gen_matrix(n, i);
      g.paste(0, 0, v.gen_matrix(n, i));
      // annihilator block moves by the embedded morphism
      Matrix amb = v.gen_matrix(n + 1, shifted_index(s, i)) * kb[n + 1];
      auto coords = solve_matrix(kb[n + 2], amb);
      if (!coords || !(kb[n + 2] * *coords == amb))
        throw InvariantError("annihilator subspaces not closed under embedding");
      g.paste(v.dim(n + 1), v.dim(n), *coords);
      const bool guard = n >= 1 && (s == Side::a ? i >= 2 : i <= n);
      if (!guard) {
        // the raised boundary of the extreme irreducible is the identity
        g.paste(0, v.dim(n), -kb[n + 1]);
      }
    }
  for (int n = 0; n <= out; ++n) {
    Matrix into(r.module.dim(n), v.dim(n));
    into.paste(0, 0, Matrix::identity(v.dim(n)));
    r.map_a.level.push_back(std::move(into));
    Matrix onto(kb[n + 1].cols(), r.module.dim(n));
    onto.paste(0, v.dim(n), Matrix::identity(kb[n + 1].cols()));
    r.map_b.level.push_back(std::move(onto));
  }
  return r;
}

std::vector<Matrix> augmentation_action_subspaces(const TruncatedModule& v) {
  std::vector<Matrix> out(v.truncation + 1);
  out[0] = Matrix(v.dim(0), 0);
  for (int r = 1; r <= v.truncation; ++r) {
    SpanBuilder sb(v.dim(r));
    for (int i = 1; i <= r - 1; ++i) {
      Matrix diff = v.gen_matrix(r - 1, i) - v.gen_matrix(r - 1, i + 1);
      for (int j = 0; j < diff.cols(); ++j) sb.insert(diff.col(j));
    }
    for (int i = 1; i <= r; ++i) {
      Matrix pushed = v.gen_matrix(r - 1, i) * out[r - 1];
      for (int j = 0; j < pushed.cols(); ++j) sb.insert(pushed.col(j));
    }
    out[r] = column_space(sb.basis());
  }
  return out;
}

namespace {

struct Chain {
  QuotientModule q;
  std::vector<int> dims;
  int r0 = 0;
  bool stabilized = false;

  Matrix connecting(Side chain_side, int r) const {
    return q.module.gen_matrix(r, rho_index(chain_side, r));
  }
};

Chain aug_quotient_chain(Side chain_side, const TruncatedModule& w) {
  Chain c;
  c.q = quotient(w, augmentation_action_subspaces(w));
  for (int r = 0; r <= w.truncation; ++r) c.dims.push_back(c.q.module.dim(r));
  const int top = w.truncation;
  c.r0 = top;
  for (int j = top - 1; j >= 0; --j) {
    if (is_invertible(c.connecting(chain_side, j)))
      c.r0 = j;
    else
      break;
  }
  c.stabilized = top >= 1 && c.r0 <= top - 1;
  return c;
}

// Everything needed to evaluate one output level of the colimit functor and
// to build maps in and out of it.
struct PsiLevel {
  FunctorResult deriv;  // projection + lifts from the iterated shift
  Chain chain;
  int edge = 0;  // truncation of the quotient chain

  Matrix project(int r) const { return chain.q.projection[r] * deriv.map_a.level[r]; }
  Matrix lift(int r) const { return deriv.lifts[r] * chain.q.lift[r]; }
};

PsiLevel build_psi_level(Side chain_side, const TruncatedModule& v, int n) {
  TruncatedModule x = v;
  for (int k = 0; k < n; ++k) x = shift(chain_side, x).module;
  if (x.truncation < 1)
    throw TruncationError("colimit functor: no window left at output level " +
                          std::to_string(n));
  PsiLevel lvl;
  lvl.deriv = derivative(chain_side, x);
  lvl.chain = aug_quotient_chain(chain_side, lvl.deriv.module);
  lvl.edge = lvl.deriv.module.truncation;
  return lvl;
}

std::string trace_string(const Chain& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.dims.size(); ++i)
    s += (i ? "," : "") + std::to_string(c.dims[i]);
  return s + "]";
}

}  // namespace

FunctorResult psi_functor(Side s, const TruncatedModule& v, int out_truncation) {
  const Side chain_side = opposite(s);
  const int n_top = v.truncation;
  int want = out_truncation >= 0 ? out_truncation : n_top - 2;
  if (want < 0 || want > n_top - 2)
    throw TruncationError("colimit functor: requested window not available");

  std::vector<PsiLevel> levels;
  int usable = -1;
  for (int n = 0; n <= want; ++n) {
    levels.push_back(build_psi_level(chain_side, v, n));
    const auto& c = levels.back().chain;
    if (!c.stabilized) {
      if (out_truncation >= 0)
        throw StabilizationError("colimit chain did not stabilize at output level " +
                                 std::to_string(n) + ", dims " + trace_string(c));
      break;
    }
    usable = n;
  }
  if (usable < 0)
    throw StabilizationError("colimit chain did not stabilize at output level 0, dims " +
                             trace_string(levels.front().chain));
  const int out = out_truncation >= 0 ? want : usable;

  FunctorResult r;
  r.psi.mirror_construction = s == Side::b;
  std::vector<int> dims(out + 1);
  for (int n = 0; n <= out; ++n) {
    dims[n] = levels[n].chain.dims[levels[n].edge];
    r.psi.r0.push_back(levels[n].chain.r0);
    r.psi.dim_trace.push_back(levels[n].chain.dims);
  }
  r.module = make_module(std::move(dims));
  for (int n = 0; n < out; ++n) {
    const int rep = levels[n + 1].edge;  // one below this level's edge
    Matrix down = inverse(levels[n].chain.connecting(chain_side, rep));
    for (int i = 1; i <= n + 1; ++i) {
      OrdMorphism tau = bifunctor_tau(chain_side, irreducible(n, i), rep + 1);
      Matrix mid = levels[n + 1].project(rep) * act_matrix(v, tau) * levels[n].lift(rep);
      r.module.gen_matrix(n, i) = mid * down;
    }
  }
  return r;
}

FunctorResult apply_functor(FunctorName f, const TruncatedModule& v) {
  Side s = functor_side(f);
  switch (f) {
    case FunctorName::Sa:
    case FunctorName::Sb:
      return shift(s, v);
    case FunctorName::Ka:
    case FunctorName::Kb:
      return kernel_functor(s, v);
    case FunctorName::Da:
    case FunctorName::Db:
      return derivative(s, v);
    case FunctorName::Ga:
    case FunctorName::Gb:
      return gamma_functor(s, v);
    case FunctorName::Qa:
    case FunctorName::Qb:
      return coinduction(s, v);
    case FunctorName::Ba:
    case FunctorName::Bb:
      return negative_shift(s, v);
    case FunctorName::Ra:
    case FunctorName::Rb:
      return r_functor(s, v);
    case FunctorName::PsiA:
    case FunctorName::PsiB:
      return psi_functor(s, v);
  }
  throw DomainError("unknown functor");
}

MappedFunctor apply_functor_to_map(FunctorName f, const TruncatedModule& vdom,
                                   const TruncatedModule& vcod, const ModuleMap& h) {
  Side s = functor_side(f);
  MappedFunctor out;
  switch (f) {
    case FunctorName::Sa:
    case FunctorName::Sb: {
      out.dom = shift(s, vdom);
      out.cod = shift(s, vcod);
      for (int n = 0; n <= out.dom.module.truncation; ++n)
        out.map.level.push_back(h.level[n + 1]);
      return out;
    }
    case FunctorName::Ka:
    case FunctorName::Kb: {
      out.dom = kernel_functor(s, vdom);
      out.cod = kernel_functor(s, vcod);
      for (int n = 0; n <= out.dom.module.truncation; ++n) {
        Matrix image = h.level[n] * out.dom.map_a.level[n];
        auto coords = solve_matrix(out.cod.map_a.level[n], image);
        if (!coords || !(out.cod.map_a.level[n] * *coords == image))
          throw InvariantError("map does not preserve the annihilator");
        out.map.level.push_back(*coords);
      }
      return out;
    }
    case FunctorName::Da:
    case FunctorName::Db: {
      out.dom = derivative(s, vdom);
      out.cod = derivative(s, vcod);
      for (int n = 0; n <= out.dom.module.truncation; ++n)
        out.map.level.push_back(out.cod.map_a.level[n] * h.level[n + 1] * out.dom.lifts[n]);
      return out;
    }
    case FunctorName::Ga:
    case FunctorName::Gb: {
      out.dom = gamma_functor(s, vdom);
      out.cod = gamma_functor(s, vcod);
      for (int m = 0; m <= out.dom.module.truncation; ++m) {
        Matrix g(out.cod.module.dim(m), out.dom.module.dim(m));
        int off_d = 0, off_c = 0;
        for (int t = 0; t < m; ++t) {
          g.paste(off_c, off_d, h.level[t]);
          off_d += vdom.dim(t);
          off_c += vcod.dim(t);
        }
        out.map.level.push_back(std::move(g));
      }
      return out;
    }
    case FunctorName::Qa:
    case FunctorName::Qb: {
      out.dom = coinduction(s, vdom);
      out.cod = coinduction(s, vcod);
      for (int n = 0; n <= out.dom.module.truncation; ++n) {
        Matrix g(out.cod.module.dim(n), out.dom.module.dim(n));
        g.paste(0, 0, h.level[n]);
        if (n >= 1) g.paste(vcod.dim(n), vdom.dim(n), h.level[n - 1]);
        out.map.level.push_back(std::move(g));
      }
      return out;
    }
    case FunctorName::Ba:
    case FunctorName::Bb: {
      out.dom = negative_shift(s, vdom);
      out.cod = negative_shift(s, vcod);
      for (int n = 0; n <= out.dom.module.truncation; ++n) {
        if (n == 0) {
          out.map.level.push_back(Matrix(0, 0));
        } else {
          out.map.level.push_back(h.level[n - 1]);
        }
      }
      return out;
    }
    case FunctorName::Ra:
    case FunctorName::Rb: {
      out.dom = r_functor(s, vdom);
      out.cod = r_functor(s, vcod);
      auto kbd = r_kernel_bases(s, vdom, out.dom.module.truncation + 1);
      auto kbc = r_kernel_bases(s, vcod, out.cod.module.truncation + 1);
      int top = std::min(out.dom.module.truncation, out.cod.module.truncation);
      for (int n = 0; n <= top; ++n) {
        Matrix image = h.level[n + 1] * kbd[n + 1];
        auto coords = solve_matrix(kbc[n + 1], image);
        if (!coords || !(kbc[n + 1] * *coords == image))
          throw InvariantError("map does not preserve the annihilator");
        Matrix g(out.cod.module.dim(n), out.dom.module.dim(n));
        g.paste(0, 0, h.level[n]);
        g.paste(vcod.dim(n), vdom.dim(n), *coords);
        out.map.level.push_back(std::move(g));
      }
      return out;
    }
    case FunctorName::PsiA:
    case FunctorName::PsiB: {
      FunctorResult probe_d = psi_functor(s, vdom);
      FunctorResult probe_c = psi_functor(s, vcod);
      int top = std::min(probe_d.module.truncation, probe_c.module.truncation);
      out.dom = psi_functor(s, vdom, top);
      out.cod = psi_functor(s, vcod, top);
      Side chain_side = opposite(s);
      for (int n = 0; n <= top; ++n) {
        PsiLevel ld = build_psi_level(chain_side, vdom, n);
        PsiLevel lc = build_psi_level(chain_side, vcod, n);
        int rep = ld.edge;
        out.map.level.push_back(lc.project(rep) * h.level[rep + 1 + n] * ld.lift(rep));
      }
      return out;
    }
  }
  throw DomainError("unknown functor");
}

ColimitTrace augmentation_colimit_trace(Side chain_side, const TruncatedModule& v) {
  Chain c = aug_quotient_chain(chain_side, v);
  ColimitTrace t;
  t.dims = c.dims;
  t.r0 = c.r0;
  t.stabilized = c.stabilized;
  return t;
}

std::vector<Matrix> annihilator_subspaces(Side s, const TruncatedModule& v) {
  const int n_top = v.truncation;
  std::vector<Matrix> out(n_top);
  IdealName name = s == Side::a ? IdealName::Ia : IdealName::Ib;
  for (int n = 0; n < n_top; ++n) {
    if (n == 0) {
      // the named ideals live in the positive part; at level 0 the
      // natural-map kernel is cut out by the degree-1 morphism directly
      out[0] = column_space(kernel_basis(v.gen_matrix(0, rho_index(s, 0))));
      continue;
    }
    std::vector<Vec> rows;
    for (int r = n; r <= n_top; ++r) {
      auto slice = named_ideal_slice(name, n, r);
      auto fs = enumerate_morphisms(n, r);
      for (int j = 0; j < slice.basis.cols(); ++j) {
        Matrix m(v.dim(r), v.dim(n));
        for (size_t k = 0; k < fs.size(); ++k)
          if (!slice.basis.at(int(k), j).is_zero())
            m = m + act_matrix(v, fs[k]).scaled(slice.basis.at(int(k), j));
        for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
      }
    }
    Matrix stacked = Matrix::from_rows(rows, v.dim(n));
    out[n] = column_space(kernel_basis(stacked));
  }
  return out;
}

}  // namespace oirep
