#include "oirep/nakayama.hpp"

#include <algorithm>

namespace oirep {

FiniteDimModule finite_dim(TruncatedModule data) {
  FiniteDimModule x;
  x.support = data.truncation;
  x.data = std::move(data);
  return x;
}

TruncatedModule as_truncated(const FiniteDimModule& x, int truncation) {
  if (truncation <= x.support) return truncate_to(x.data, truncation);
  return extend_by_zero(x.data, truncation);
}

RightModule right_free(int n) {
  RightModule r;
  r.dims.resize(n + 1);
  for (int m = 0; m <= n; ++m) r.dims[m] = int(binom(n, m));
  r.gen.resize(n);
  for (int m = 0; m < n; ++m)
    for (int i = 1; i <= m + 1; ++i)
      r.gen[m].push_back(precompose_matrix(irreducible(m, i), n));
  return r;
}

RightModule dual_right(const FiniteDimModule& x) {
  RightModule r;
  r.dims = x.data.dims;
  r.gen.resize(x.support);
  for (int m = 0; m < x.support; ++m)
    for (int i = 1; i <= m + 1; ++i)
      r.gen[m].push_back(x.data.gen_matrix(m, i).transpose());
  return r;
}

std::vector<RelationViolation> validate_right(const RightModule& x) {
  std::vector<RelationViolation> out;
  for (int n = 0; n + 1 < x.top(); ++n)
    for (int p = 1; p <= n + 2; ++p)
      for (int q = p + 1; q <= n + 2; ++q)
        if (x.gen_matrix(n, p) * x.gen_matrix(n + 1, q) !=
            x.gen_matrix(n, q - 1) * x.gen_matrix(n + 1, p))
          out.push_back({n, p, q});
  return out;
}

FiniteDimModule dual_of_right_free(int n) {
  RightModule rf = right_free(n);
  std::vector<int> dims = rf.dims;
  TruncatedModule v = make_module(dims);
  for (int m = 0; m < n; ++m)
    for (int i = 1; i <= m + 1; ++i)
      v.gen_matrix(m, i) = rf.gen_matrix(m, i).transpose();
  return finite_dim(std::move(v));
}

std::vector<std::vector<Matrix>> right_intertwiner_basis(const RightModule& a,
                                                         const RightModule& b) {
  // unknowns psi_m: a.dim(m) -> b.dim(m); constraints
  // psi_m . R^a_{m,i} = R^b_{m,i} . psi_{m+1}
  const int top = std::min(a.top(), b.top());
  std::vector<int> offset(top + 1);
  int total = 0;
  for (int m = 0; m <= top; ++m) {
    offset[m] = total;
    total += a.dim(m) * b.dim(m);
  }
  std::vector<Vec> rows;
  for (int m = 0; m < top; ++m)
    for (int i = 1; i <= m + 1; ++i)
      for (int r = 0; r < b.dim(m); ++r)
        for (int c = 0; c < a.dim(m + 1); ++c) {
          Vec row(total);
          for (int s = 0; s < a.dim(m); ++s)
            row[offset[m] + r * a.dim(m) + s] += a.gen_matrix(m, i).at(s, c);
          for (int s = 0; s < b.dim(m + 1); ++s)
            row[offset[m + 1] + s * a.dim(m + 1) + c] -= b.gen_matrix(m, i).at(r, s);
          if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
  Matrix sys = Matrix::from_rows(rows, total);
  Matrix null = kernel_basis(sys);
  std::vector<std::vector<Matrix>> out;
  for (int k = 0; k < null.cols(); ++k) {
    std::vector<Matrix> psi;
    for (int m = 0; m <= top; ++m) {
      Matrix p(b.dim(m), a.dim(m));
      for (int r = 0; r < b.dim(m); ++r)
        for (int c = 0; c < a.dim(m); ++c)
          p.at(r, c) = null.at(offset[m] + r * a.dim(m) + c, k);
      psi.push_back(std::move(p));
    }
    out.push_back(std::move(psi));
  }
  return out;
}

NakayamaResult nakayama(const PresentedModule& p, int out_levels) {
  int top_gen = 0;
  for (int b : p.gens) top_gen = std::max(top_gen, b);
  if (out_levels < 0) out_levels = top_gen;
  NakayamaResult out;
  for (int m = 0; m <= out_levels; ++m) {
    int trunc = std::max(p.max_degree(), m);
    out.homs.push_back(hom_from_presentation(p, free_module(m, trunc)));
  }
  std::vector<int> dims(out_levels + 1);
  for (int m = 0; m <= out_levels; ++m) dims[m] = out.homs[m].dim();
  TruncatedModule v = make_module(dims);
  for (int m = 0; m < out_levels; ++m)
    for (int i = 1; i <= m + 1; ++i) {
      // right action on Hom(V, kC): precompose the generator images
      int rows = 0;
      for (int b : p.gens) rows += int(binom(b, m));
      Matrix precomposed(rows, out.homs[m + 1].dim());
      int roff = 0, coff = 0;
      Matrix blockmap(rows, out.homs[m + 1].gen_images.rows());
      for (int b : p.gens) {
        blockmap.paste(roff, coff, precompose_matrix(irreducible(m, i), b));
        roff += int(binom(b, m));
        coff += int(binom(b, m + 1));
      }
      precomposed = blockmap * out.homs[m + 1].gen_images;
      auto coords = solve_matrix(out.homs[m].gen_images, precomposed);
      if (!coords || !(out.homs[m].gen_images * *coords == precomposed))
        throw InvariantError("precomposed homomorphism left the hom space");
      v.gen_matrix(m, i) = coords->transpose();
    }
  out.module = finite_dim(std::move(v));
  return out;
}

namespace {

// stacked vector of a levelwise family, for coordinate solves
Vec stack_family(const std::vector<Matrix>& fam) {
  Vec v;
  for (const auto& m : fam)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace

InverseNakayamaResult inverse_nakayama(const FiniteDimModule& x, int out_truncation) {
  InverseNakayamaResult out;
  std::vector<int> dims(out_truncation + 1, 0);
  std::vector<HomSpace> homs(out_truncation + 1);
  std::vector<int> ext(out_truncation + 1, 0);
  auto xdim = [&](int m) { return m <= x.support ? x.data.dim(m) : 0; };
  for (int n = 0; n <= out_truncation; ++n) {
    // window comfortably past both supports so the hom space is exact
    const int t = std::max(n, x.support) + 1;
    auto dom = as_truncated(dual_of_right_free(n), t);
    auto cod = as_truncated(x, t);
    homs[n] = hom_truncated(dom, cod);
    if (homs[n].flag != Exactness::exact)
      throw InvariantError("finite-dimensional hom unexpectedly inexact");
    ext[n] = t;
  }

  // canonical coordinates per level: stacked hom families, echelonized once;
  // rows beyond the support of x are zero, so window cuts only trim zeros
  std::vector<Matrix> basis(out_truncation + 1);
  std::vector<std::vector<int>> pivot_rows(out_truncation + 1);
  for (int n = 0; n <= out_truncation; ++n) {
    int rows = 0;
    for (int m = 0; m <= ext[n]; ++m) rows += xdim(m) * int(binom(n, m));
    Matrix s(rows, homs[n].dim());
    for (int k = 0; k < homs[n].dim(); ++k)
      s.set_col(k, stack_family(homs[n].basis[k].level));
    basis[n] = column_space(s);
    rref(basis[n].transpose(), &pivot_rows[n]);
    dims[n] = basis[n].cols();
  }

  TruncatedModule v = make_module(dims);
  for (int n = 0; n < out_truncation; ++n) {
    const int t = std::min(ext[n], ext[n + 1]);
    int rows_t = 0;
    for (int m = 0; m <= t; ++m) rows_t += xdim(m) * int(binom(n + 1, m));
    // the level-n canonical basis realized as hom families, for composition
    std::vector<std::vector<Matrix>> can_fams(v.dim(n));
    {
      // express canonical columns in the solver basis once
      int rows_n = basis[n].rows();
      Matrix s(rows_n, homs[n].dim());
      for (int k = 0; k < homs[n].dim(); ++k)
        s.set_col(k, stack_family(homs[n].basis[k].level));
      auto coords = solve_matrix(s, basis[n]);
      if (!coords) throw InvariantError("canonical basis escaped the hom space");
      for (int k = 0; k < v.dim(n); ++k) {
        std::vector<Matrix> fam;
        for (int m = 0; m <= t; ++m) {
          Matrix acc(xdim(m), int(binom(n, m)));
          for (int j = 0; j < homs[n].dim(); ++j)
            if (!coords->at(j, k).is_zero())
              acc = acc + homs[n].basis[j].level[m].scaled(coords->at(j, k));
          fam.push_back(std::move(acc));
        }
        can_fams[k] = std::move(fam);
      }
    }
    for (int i = 1; i <= n + 1; ++i) {
      std::vector<Matrix> dual_mul(t + 1);
      for (int m = 0; m <= t; ++m) {
        if (xdim(m) == 0) continue;
        dual_mul[m] = (m <= n) ? postcompose_matrix(irreducible(n, i), m).transpose()
                               : Matrix(int(binom(n, m)), int(binom(n + 1, m)));
      }
      Matrix moved_all(rows_t, v.dim(n));
      for (int k = 0; k < v.dim(n); ++k) {
        std::vector<Matrix> moved;
        for (int m = 0; m <= t; ++m) {
          if (xdim(m) == 0) {
            moved.push_back(Matrix(0, 0));
            continue;
          }
          moved.push_back(can_fams[k][m] * dual_mul[m]);
        }
        moved_all.set_col(k, stack_family(moved));
      }
      // coordinates in the canonical level-(n+1) basis are pivot-row reads
      Matrix action(v.dim(n + 1), v.dim(n));
      for (int r = 0; r < v.dim(n + 1); ++r)
        for (int c = 0; c < v.dim(n); ++c)
          action.at(r, c) = moved_all.at(pivot_rows[n + 1][r], c);
      Matrix bcut(rows_t, v.dim(n + 1));
      for (int r = 0; r < rows_t; ++r)
        for (int c = 0; c < v.dim(n + 1); ++c) bcut.at(r, c) = basis[n + 1].at(r, c);
      if (!(bcut * action == moved_all))
        throw InvariantError("postcomposed homomorphism left the hom space");
      v.gen_matrix(n, i) = std::move(action);
    }
  }
  out.module = std::move(v);
  out.hom_bases = basis;
  return out;
}

ModuleMap realize_presented_map(const PresentedMap& h, const EvaluatedPresentation& edom,
                                const EvaluatedPresentation& ecod) {
  // image of each domain generator inside the evaluated codomain
  Vec stacked;
  for (size_t jd = 0; jd < h.dom.gens.size(); ++jd) {
    Vec img(ecod.module.dim(h.dom.gens[jd]));
    for (size_t jc = 0; jc < h.cod.gens.size(); ++jc) {
      const auto& entry = h.entries[jd][jc];
      if (entry.source != h.cod.gens[jc] || entry.target != h.dom.gens[jd])
        throw DimensionError("presented map entry slice mismatch");
      auto fs = enumerate_morphisms(entry.source, entry.target);
      Vec gc = ecod.generator_class(int(jc));
      for (size_t k = 0; k < fs.size(); ++k)
        if (!entry.coeffs[k].is_zero())
          img = vec_add(img, vec_scale(entry.coeffs[k], act(ecod.module, fs[k], gc)));
    }
    for (const auto& c : img) stacked.push_back(c);
  }
  return realize_presented_hom(h.dom, edom, ecod.module, stacked);
}

std::vector<Matrix> nakayama_map(const PresentedMap& h, const NakayamaResult& nu_dom,
                                 const NakayamaResult& nu_cod) {
  const int top = std::min(nu_dom.module.support, nu_cod.module.support);
  std::vector<Matrix> out;
  for (int m = 0; m <= top; ++m) {
    // Hom(cod, M(m)) -> Hom(dom, M(m)): phi -> phi . h, on generator images
    const auto& hc = nu_cod.homs[m];
    const auto& hd = nu_dom.homs[m];
    auto mfree = free_module(
        m, std::max({h.cod.max_degree(), h.dom.max_degree(), m}));
    Matrix images(hd.gen_images.rows(), hc.dim());
    for (int k = 0; k < hc.dim(); ++k) {
      Vec col;
      for (size_t jd = 0; jd < h.dom.gens.size(); ++jd) {
        Vec img(binom(h.dom.gens[jd], m));
        int off = 0;
        for (size_t jc = 0; jc < h.cod.gens.size(); ++jc) {
          const auto& entry = h.entries[jd][jc];
          auto fs = enumerate_morphisms(entry.source, entry.target);
          int w = int(binom(h.cod.gens[jc], m));
          Vec wvec(w);
          for (int r = 0; r < w; ++r) wvec[r] = hc.gen_images.at(off + r, k);
          off += w;
          for (size_t q = 0; q < fs.size(); ++q)
            if (!entry.coeffs[q].is_zero())
              img = vec_add(img, vec_scale(entry.coeffs[q], act(mfree, fs[q], wvec)));
        }
        for (const auto& c : img) col.push_back(c);
      }
      images.set_col(k, col);
    }
    auto coords = solve_matrix(hd.gen_images, images);
    if (!coords || !(hd.gen_images * *coords == images))
      throw InvariantError("pulled-back homomorphism left the hom space");
    out.push_back(coords->transpose());
  }
  return out;
}

ModuleMap f_map(int n, int i, int truncation) {
  if (n < 1 || i < 1 || i > n) throw DomainError("f map index out of range");
  ModuleMap f;
  for (int m = 0; m <= truncation; ++m)
    f.level.push_back(precompose_matrix(irreducible(n - 1, i), m));
  return f;
}

SimpleSaturated simple_saturated(int n, int truncation) {
  auto mn = free_module(n, truncation);
  std::vector<Matrix> subspaces;
  if (n == 0) {
    for (int m = 0; m <= truncation; ++m) subspaces.push_back(Matrix::identity(mn.dim(m)));
  } else {
    std::vector<ModuleMap> fs;
    for (int i = 1; i <= n; ++i) fs.push_back(f_map(n, i, truncation));
    for (int m = 0; m <= truncation; ++m) {
      Matrix cur = Matrix::identity(mn.dim(m));
      for (int i = 0; i < n; ++i)
        cur = intersect_subspaces(cur, kernel_basis(fs[i].level[m]));
      subspaces.push_back(cur);
    }
  }
  SimpleSaturated out;
  out.sub = submodule_from_subspaces(mn, subspaces);
  for (int m = 0; m <= truncation; ++m)
    if (out.sub.module.dim(m) > 0) {
      out.gen_level = m;
      break;
    }
  if (out.gen_level >= 0) {
    Vec g = out.sub.inclusion[out.gen_level].col(0);
    // normalize to coprime integers with positive leading coefficient
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : g) {
      mpz_class d = c.denominator(), gg;
      mpz_gcd(gg.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      den_lcm = den_lcm / gg * d;
    }
    for (auto& c : g) c *= Scalar(mpq_class(den_lcm));
    for (const auto& c : g)
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    if (num_gcd != 0)
      for (auto& c : g) c /= Scalar(mpq_class(num_gcd));
    for (const auto& c : g) {
      if (c.is_zero()) continue;
      if (c.value() < 0)
        for (auto& d : g) d = -d;
      break;
    }
    out.generator = g;
    auto gen = generated_subspaces(mn, {{out.gen_level, out.generator}});
    out.generates = true;
    for (int m = 0; m <= truncation; ++m)
      out.generates = out.generates && subspace_equal(gen[m], subspaces[m]);
  }
  return out;
}

SaturationEvidence saturation_evidence(int n, int truncation, int budget) {
  SaturationEvidence ev;
  if (n == 0) {
    ev.sequence_exact = ev.image_torsion_free = ev.hom_stable = true;
    ev.hom_to_own_free = 1;
    ev.hom_to_lower_free = 0;
    ev.hom_quotient = 0;
    ev.pass = true;
    ev.detail = "no maps to intersect; the free module itself";
    return ev;
  }
  auto mn = free_module(n, truncation);
  auto ls = simple_saturated(n, truncation);

  // (i) exactness of 0 -> L -> M(n) -> direct sum of images
  ev.sequence_exact = true;
  std::vector<Matrix> stacked_levels;
  for (int m = 0; m <= truncation; ++m) {
    Matrix stacked(0, mn.dim(m));
    for (int i = 1; i <= n; ++i)
      stacked = vstack(stacked, precompose_matrix(irreducible(n - 1, i), m));
    stacked_levels.push_back(stacked);
    int kerdim = mn.dim(m) - rank(stacked);
    if (kerdim != ls.sub.module.dim(m)) ev.sequence_exact = false;
  }

  // (ii) the image inside the direct sum of lower frees is torsion free up
  // to the budget
  {
    TruncatedModule target = zero_module(truncation);
    for (int i = 1; i <= n; ++i) target = direct_sum(target, free_module(n - 1, truncation));
    std::vector<Matrix> image_subspaces;
    for (int m = 0; m <= truncation; ++m)
      image_subspaces.push_back(column_space(stacked_levels[m]));
    Submodule image = submodule_from_subspaces(target, image_subspaces);
    ev.image_torsion_free = torsion_submodule_lower(image.module, budget).is_zero();
  }

  // (iii) hom dimensions at the window and two levels higher
  auto hom_dims = [&](int trunc) {
    auto lw = simple_saturated(n, trunc);
    auto own = hom_truncated(lw.sub.module, free_module(n, trunc));
    auto lower = hom_truncated(lw.sub.module, free_module(n - 1, trunc));
    return std::pair<int, int>{own.dim(), lower.dim()};
  };
  auto [own_a, lower_a] = hom_dims(truncation);
  auto [own_b, lower_b] = hom_dims(truncation + 2);
  ev.hom_to_own_free = own_a;
  ev.hom_to_lower_free = lower_a;
  ev.hom_stable = own_a == own_b && lower_a == lower_b;

  // (iv) maps from the quotient to the next free module down
  {
    auto q = quotient(mn, ls.sub.inclusion);
    auto h = hom_truncated(q.module, free_module(n - 1, truncation));
    auto q2 = quotient(free_module(n, truncation + 2),
                       simple_saturated(n, truncation + 2).sub.inclusion);
    auto h2 = hom_truncated(q2.module, free_module(n - 1, truncation + 2));
    ev.hom_quotient = h.dim();
    ev.hom_stable = ev.hom_stable && h.dim() == h2.dim();
  }

  ev.pass = ev.sequence_exact && ev.image_torsion_free && ev.hom_stable &&
            ev.hom_to_own_free == 1 && ev.hom_to_lower_free == 0 && ev.hom_quotient == n;
  if (!ev.hom_stable) ev.detail = "hom dimensions did not stabilize; inconclusive";
  return ev;
}

TruncatedNakayama nakayama_truncated(const TruncatedModule& y, int out_levels, int window) {
  if (window + 2 > y.truncation)
    throw TruncationError("stabilization window exceeds the truncation");
  TruncatedNakayama out;
  out.window = window;
  std::vector<HomSpace> low(out_levels + 1), high(out_levels + 1);
  for (int m = 0; m <= out_levels; ++m) {
    low[m] = hom_truncated(truncate_to(y, window), free_module(m, window));
    high[m] = hom_truncated(truncate_to(y, window + 2), free_module(m, window + 2));
    out.dims_low.push_back(low[m].dim());
    out.dims_high.push_back(high[m].dim());
  }
  if (out.dims_low != out.dims_high)
    throw StabilizationError("hom dimensions into the frees did not stabilize");

  // canonical coordinates per level
  std::vector<Matrix> basis(out_levels + 1);
  std::vector<std::vector<int>> pivot_rows(out_levels + 1);
  std::vector<std::vector<std::vector<Matrix>>> can_fams(out_levels + 1);
  for (int m = 0; m <= out_levels; ++m) {
    int rows = 0;
    for (int r = 0; r <= window + 2; ++r) rows += int(binom(r, m)) * y.dim(r);
    Matrix s(rows, high[m].dim());
    for (int k = 0; k < high[m].dim(); ++k)
      s.set_col(k, stack_family(high[m].basis[k].level));
    basis[m] = column_space(s);
    rref(basis[m].transpose(), &pivot_rows[m]);
    auto coords = solve_matrix(s, basis[m]);
    if (!coords) throw InvariantError("canonical basis escaped the hom space");
    can_fams[m].resize(basis[m].cols());
    for (int k = 0; k < basis[m].cols(); ++k) {
      std::vector<Matrix> fam;
      for (int r = 0; r <= window + 2; ++r) {
        Matrix acc(int(binom(r, m)), y.dim(r));
        for (int j = 0; j < high[m].dim(); ++j)
          if (!coords->at(j, k).is_zero())
            acc = acc + high[m].basis[j].level[r].scaled(coords->at(j, k));
        fam.push_back(std::move(acc));
      }
      can_fams[m][k] = std::move(fam);
    }
  }
  TruncatedModule v = make_module(out.dims_high);
  for (int m = 0; m < out_levels; ++m)
    for (int i = 1; i <= m + 1; ++i) {
      Matrix moved(basis[m].rows(), v.dim(m + 1));
      for (int k = 0; k < v.dim(m + 1); ++k) {
        std::vector<Matrix> fam;
        for (int r = 0; r <= window + 2; ++r)
          fam.push_back(precompose_matrix(irreducible(m, i), r) * can_fams[m + 1][k][r]);
        moved.set_col(k, stack_family(fam));
      }
      Matrix coords(v.dim(m), v.dim(m + 1));
      for (int r = 0; r < v.dim(m); ++r)
        for (int c = 0; c < v.dim(m + 1); ++c)
          coords.at(r, c) = moved.at(pivot_rows[m][r], c);
      if (!(basis[m] * coords == moved))
        throw InvariantError("precomposed homomorphism left the hom space");
      v.gen_matrix(m, i) = coords.transpose();
    }
  out.module = finite_dim(std::move(v));
  return out;
}

InferredPresentation infer_presentation(const TruncatedModule& y) {
  InferredPresentation out;
  const int n_top = y.truncation;

  // generators: levelwise complements of what lower levels generate
  std::vector<SpanBuilder> gen_span;
  for (int m = 0; m <= n_top; ++m) gen_span.emplace_back(y.dim(m));
  std::vector<std::pair<int, Vec>> gens;
  for (int m = 0; m <= n_top; ++m) {
    if (m >= 1) {
      Matrix basis = gen_span[m - 1].basis();
      for (int i = 1; i <= m; ++i) {
        Matrix moved = y.gen_matrix(m - 1, i) * basis;
        for (int j = 0; j < moved.cols(); ++j) gen_span[m].insert(moved.col(j));
      }
    }
    for (int k = 0; k < y.dim(m); ++k) {
      Vec unit(y.dim(m));
      unit[k] = Scalar(1);
      if (gen_span[m].insert(unit)) gens.push_back({m, unit});
    }
  }
  for (auto& [lvl, vec] : gens) {
    out.pres.gens.push_back(lvl);
    out.top_gen_level = std::max(out.top_gen_level, lvl);
  }
  out.gens_saturated = out.top_gen_level <= n_top - 2;

  // relations: kernel of the induced cover map, generated levelwise
  TruncatedModule cover = zero_module(n_top);
  for (int b : out.pres.gens) cover = direct_sum(cover, free_module(b, n_top));
  std::vector<Matrix> cover_map(n_top + 1);
  for (int m = 0; m <= n_top; ++m) {
    Matrix c(y.dim(m), cover.dim(m));
    int off = 0;
    for (size_t j = 0; j < gens.size(); ++j) {
      auto fs = enumerate_morphisms(gens[j].first, m);
      for (size_t k = 0; k < fs.size(); ++k)
        c.set_col(off + int(k), act(y, fs[k], gens[j].second));
      off += int(fs.size());
    }
    cover_map[m] = std::move(c);
  }
  std::vector<SpanBuilder> rel_span;
  for (int m = 0; m <= n_top; ++m) rel_span.emplace_back(cover.dim(m));
  std::vector<std::pair<int, Vec>> rels;
  for (int m = 0; m <= n_top; ++m) {
    if (m >= 1) {
      Matrix basis = rel_span[m - 1].basis();
      for (int i = 1; i <= m; ++i) {
        Matrix moved = cover.gen_matrix(m - 1, i) * basis;
        for (int j = 0; j < moved.cols(); ++j) rel_span[m].insert(moved.col(j));
      }
    }
    Matrix ker = kernel_basis(cover_map[m]);
    for (int j = 0; j < ker.cols(); ++j)
      if (rel_span[m].insert(ker.col(j))) rels.push_back({m, ker.col(j)});
  }
  for (auto& [lvl, vec] : rels) {
    out.pres.rels.push_back(lvl);
    out.top_rel_level = std::max(out.top_rel_level, lvl);
    std::vector<AlgebraElement> row;
    int off = 0;
    for (size_t j = 0; j < gens.size(); ++j) {
      AlgebraElement e = algebra_zero(gens[j].first, lvl);
      for (size_t k = 0; k < e.coeffs.size(); ++k) e.coeffs[k] = vec[off + k];
      off += int(e.coeffs.size());
      row.push_back(std::move(e));
    }
    out.pres.rel_matrix.push_back(std::move(row));
  }
  out.rels_saturated = out.top_rel_level <= n_top - 2;
  return out;
}

}  // namespace oirep
