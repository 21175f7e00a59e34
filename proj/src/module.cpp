#include "oirep/module.hpp"

#include <algorithm>

namespace oirep {

TruncatedModule make_module(std::vector<int> dims) {
  TruncatedModule v;
  v.truncation = int(dims.size()) - 1;
  v.dims = std::move(dims);
  v.gen.resize(v.truncation);
  for (int n = 0; n < v.truncation; ++n) {
    v.gen[n].reserve(n + 1);
    for (int i = 1; i <= n + 1; ++i) v.gen[n].emplace_back(v.dims[n + 1], v.dims[n]);
  }
  return v;
}

TruncatedModule zero_module(int truncation) {
  return make_module(std::vector<int>(truncation + 1, 0));
}

TruncatedModule free_module(int n, int truncation) {
  if (n > truncation) throw TruncationError("free module degree exceeds truncation");
  std::vector<int> dims(truncation + 1);
  for (int m = 0; m <= truncation; ++m) dims[m] = int(binom(m, n));
  TruncatedModule v = make_module(std::move(dims));
  for (int m = 0; m < truncation; ++m)
    for (int i = 1; i <= m + 1; ++i)
      v.gen_matrix(m, i) = postcompose_matrix(irreducible(m, i), n);
  return v;
}

std::vector<RelationViolation> validate(const TruncatedModule& v) {
  std::vector<RelationViolation> out;
  for (int n = 0; n + 1 < v.truncation; ++n)
    for (int p = 1; p <= n + 2; ++p)
      for (int q = p + 1; q <= n + 2; ++q)
        if (v.gen_matrix(n + 1, q) * v.gen_matrix(n, p) !=
            v.gen_matrix(n + 1, p) * v.gen_matrix(n, q - 1))
          out.push_back({n, p, q});
  return out;
}

void require_valid(const TruncatedModule& v) {
  auto bad = validate(v);
  if (!bad.empty())
    throw InvariantError("exchange relation violated at level " +
                         std::to_string(bad.front().level) + " (p=" +
                         std::to_string(bad.front().p) + ", q=" +
                         std::to_string(bad.front().q) + ")");
}

Matrix act_matrix(const TruncatedModule& v, const OrdMorphism& f) {
  if (f.target > v.truncation) throw TruncationError("morphism acts beyond truncation");
  Matrix m = Matrix::identity(v.dim(f.source));
  auto parts = factorize(f);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    int n = it->source;
    int missing = 0;
    std::vector<bool> hit(n + 2, false);
    for (int val : it->values) hit[val] = true;
    for (int x = 1; x <= n + 1; ++x)
      if (!hit[x]) {
        missing = x;
        break;
      }
    m = v.gen_matrix(n, missing) * m;
  }
  return m;
}

Vec act(const TruncatedModule& v, const OrdMorphism& f, const Vec& x) {
  if (int(x.size()) != v.dim(f.source)) throw DimensionError("act: vector length mismatch");
  return act_matrix(v, f).apply(x);
}

bool is_module_map(const TruncatedModule& v, const TruncatedModule& w, const ModuleMap& f) {
  int top = f.top_level();
  if (top > v.truncation || top > w.truncation) return false;
  for (int n = 0; n <= top; ++n)
    if (f.level[n].rows() != w.dim(n) || f.level[n].cols() != v.dim(n)) return false;
  for (int n = 0; n < top; ++n)
    for (int i = 1; i <= n + 1; ++i)
      if (f.level[n + 1] * v.gen_matrix(n, i) != w.gen_matrix(n, i) * f.level[n])
        return false;
  return true;
}

ModuleMap identity_map(const TruncatedModule& v) {
  ModuleMap f;
  for (int n = 0; n <= v.truncation; ++n) f.level.push_back(Matrix::identity(v.dim(n)));
  return f;
}

ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  int top = std::min(g.top_level(), f.top_level());
  for (int n = 0; n <= top; ++n) h.level.push_back(g.level[n] * f.level[n]);
  return h;
}

Submodule submodule_from_subspaces(const TruncatedModule& v,
                                   const std::vector<Matrix>& bases) {
  if (int(bases.size()) != v.truncation + 1)
    throw DimensionError("subspace family size mismatch");
  Submodule s;
  std::vector<int> dims(v.truncation + 1);
  for (int n = 0; n <= v.truncation; ++n) {
    if (bases[n].rows() != v.dim(n)) throw DimensionError("subspace ambient mismatch");
    dims[n] = bases[n].cols();
  }
  s.module = make_module(dims);
  s.inclusion = bases;
  for (int n = 0; n < v.truncation; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      Matrix image = v.gen_matrix(n, i) * bases[n];
      auto coords = solve_matrix(bases[n + 1], image);
      if (!coords || !(bases[n + 1] * *coords == image))
        throw InvariantError("subspaces not closed under the action");
      s.module.gen_matrix(n, i) = *coords;
    }
  return s;
}

std::vector<Matrix> generated_subspaces(const TruncatedModule& v,
                                        const std::vector<std::pair<int, Vec>>& seeds) {
  std::vector<SpanBuilder> spans;
  spans.reserve(v.truncation + 1);
  for (int n = 0; n <= v.truncation; ++n) spans.emplace_back(v.dim(n));
  for (const auto& [lvl, vec] : seeds) {
    if (lvl < 0 || lvl > v.truncation) throw TruncationError("seed level out of range");
    if (int(vec.size()) != v.dim(lvl)) throw DimensionError("seed length mismatch");
    spans[lvl].insert(vec);
  }
  // action only raises the level, so one upward sweep saturates
  for (int n = 0; n < v.truncation; ++n) {
    Matrix basis = spans[n].basis();
    for (int i = 1; i <= n + 1; ++i) {
      Matrix image = v.gen_matrix(n, i) * basis;
      for (int j = 0; j < image.cols(); ++j) spans[n + 1].insert(image.col(j));
    }
  }
  std::vector<Matrix> out;
  out.reserve(v.truncation + 1);
  for (auto& s : spans) out.push_back(column_space(s.basis()));
  return out;
}

Submodule submodule_generate(const TruncatedModule& v,
                             const std::vector<std::pair<int, Vec>>& seeds) {
  return submodule_from_subspaces(v, generated_subspaces(v, seeds));
}

QuotientModule quotient(const TruncatedModule& v, const std::vector<Matrix>& subspaces) {
  if (int(subspaces.size()) != v.truncation + 1)
    throw DimensionError("subspace family size mismatch");
  for (int n = 0; n < v.truncation; ++n)
    for (int i = 1; i <= n + 1; ++i)
      if (!subspace_contains_all(subspaces[n + 1], v.gen_matrix(n, i) * subspaces[n]))
        throw InvariantError("subspaces not closed under the action");

  QuotientModule q;
  q.projection.resize(v.truncation + 1);
  q.lift.resize(v.truncation + 1);
  std::vector<int> dims(v.truncation + 1);
  for (int n = 0; n <= v.truncation; ++n) {
    const int d = v.dim(n);
    std::vector<int> pivots;
    Matrix r = rref(subspaces[n].transpose(), &pivots);
    std::vector<bool> is_pivot(d, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> rest;
    for (int c = 0; c < d; ++c)
      if (!is_pivot[c]) rest.push_back(c);
    dims[n] = int(rest.size());
    Matrix proj(dims[n], d);
    for (int j = 0; j < dims[n]; ++j) {
      proj.at(j, rest[j]) = Scalar(1);
      for (int k = 0; k < int(pivots.size()); ++k) proj.at(j, pivots[k]) = -r.at(k, rest[j]);
    }
    Matrix lift(d, dims[n]);
    for (int j = 0; j < dims[n]; ++j) lift.at(rest[j], j) = Scalar(1);
    q.projection[n] = std::move(proj);
    q.lift[n] = std::move(lift);
  }
  q.module = make_module(dims);
  for (int n = 0; n < v.truncation; ++n)
    for (int i = 1; i <= n + 1; ++i)
      q.module.gen_matrix(n, i) = q.projection[n + 1] * v.gen_matrix(n, i) * q.lift[n];
  return q;
}

TruncatedModule direct_sum(const TruncatedModule& a, const TruncatedModule& b) {
  if (a.truncation != b.truncation) throw TruncationError("direct sum truncation mismatch");
  std::vector<int> dims(a.truncation + 1);
  for (int n = 0; n <= a.truncation; ++n) dims[n] = a.dim(n) + b.dim(n);
  TruncatedModule v = make_module(std::move(dims));
  for (int n = 0; n < a.truncation; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      Matrix& m = v.gen_matrix(n, i);
      m.paste(0, 0, a.gen_matrix(n, i));
      m.paste(a.dim(n + 1), a.dim(n), b.gen_matrix(n, i));
    }
  return v;
}

TruncatedModule truncate_to(const TruncatedModule& v, int new_truncation) {
  if (new_truncation > v.truncation) throw TruncationError("truncate_to cannot extend");
  TruncatedModule r;
  r.truncation = new_truncation;
  r.dims.assign(v.dims.begin(), v.dims.begin() + new_truncation + 1);
  r.gen.assign(v.gen.begin(), v.gen.begin() + new_truncation);
  return r;
}

TruncatedModule extend_by_zero(const TruncatedModule& v, int new_truncation) {
  if (new_truncation < v.truncation) throw TruncationError("extend_by_zero cannot shrink");
  TruncatedModule r = v;
  r.truncation = new_truncation;
  r.dims.resize(new_truncation + 1, 0);
  for (int n = int(v.gen.size()); n < new_truncation; ++n) {
    r.gen.emplace_back();
    for (int i = 1; i <= n + 1; ++i) r.gen.back().emplace_back(r.dims[n + 1], r.dims[n]);
  }
  return r;
}

bool short_exact_check(const TruncatedModule& a, const TruncatedModule& b,
                       const TruncatedModule& c, const ModuleMap& f, const ModuleMap& g) {
  int top = std::min({a.truncation, b.truncation, c.truncation, f.top_level(), g.top_level()});
  ModuleMap fw, gw;
  fw.level.assign(f.level.begin(), f.level.begin() + top + 1);
  gw.level.assign(g.level.begin(), g.level.begin() + top + 1);
  if (!is_module_map(a, b, fw) || !is_module_map(b, c, gw)) return false;
  for (int n = 0; n <= top; ++n) {
    int rf = rank(f.level[n]);
    int rg = rank(g.level[n]);
    if (rf != a.dim(n)) return false;                  // injective
    if (rg != c.dim(n)) return false;                  // surjective
    if (!(g.level[n] * f.level[n]).is_zero()) return false;
    if (rf != b.dim(n) - rg) return false;             // image = kernel
  }
  return true;
}

HomSpace hom_truncated(const TruncatedModule& v, const TruncatedModule& w) {
  if (v.truncation != w.truncation) throw TruncationError("hom: truncation mismatch");
  ChainSpec spec;
  spec.dims_v = v.dims;
  spec.dims_w = w.dims;
  spec.edges.resize(v.truncation);
  for (int n = 0; n < v.truncation; ++n)
    for (int i = 1; i <= n + 1; ++i)
      spec.edges[n].push_back({v.gen_matrix(n, i), w.gen_matrix(n, i)});
  HomSpace h;
  h.flag = w.dim(w.truncation) == 0 ? Exactness::exact : Exactness::truncated;
  for (auto& levels : intertwiner_basis(spec)) {
    ModuleMap m;
    m.level = std::move(levels);
    h.basis.push_back(std::move(m));
  }
  return h;
}

int PresentedModule::max_degree() const {
  int d = 0;
  for (int b : gens) d = std::max(d, b);
  for (int a : rels) d = std::max(d, a);
  return d;
}

PresentedModule free_presentation(int n) {
  PresentedModule p;
  p.gens = {n};
  return p;
}

Vec EvaluatedPresentation::generator_class(int j) const {
  int level = gen_degrees.at(j);
  int offset = 0;
  for (int j2 = 0; j2 < j; ++j2) offset += int(binom(level, gen_degrees[j2]));
  Vec unit(projection[level].cols());
  unit[offset] = Scalar(1);  // the identity morphism is first in its block
  return projection[level].apply(unit);
}

EvaluatedPresentation evaluate_presentation(const PresentedModule& p, int truncation) {
  if (p.max_degree() > truncation)
    throw TruncationError("presentation degree exceeds truncation");
  TruncatedModule cover = zero_module(truncation);
  for (int b : p.gens) cover = direct_sum(cover, free_module(b, truncation));

  std::vector<std::pair<int, Vec>> seeds;
  for (size_t i = 0; i < p.rels.size(); ++i) {
    const int level = p.rels[i];
    Vec seed(cover.dim(level));
    int offset = 0;
    for (size_t j = 0; j < p.gens.size(); ++j) {
      const auto& entry = p.rel_matrix.at(i).at(j);
      if (entry.source != p.gens[j] || entry.target != level)
        throw DimensionError("relation entry slice mismatch");
      for (size_t k = 0; k < entry.coeffs.size(); ++k) seed[offset + k] = entry.coeffs[k];
      offset += int(entry.coeffs.size());
    }
    seeds.push_back({level, std::move(seed)});
  }

  auto image = generated_subspaces(cover, seeds);
  auto q = quotient(cover, image);
  EvaluatedPresentation e;
  e.module = std::move(q.module);
  e.projection = std::move(q.projection);
  e.lift = std::move(q.lift);
  e.gen_degrees = p.gens;
  return e;
}

PresentedHom hom_from_presentation(const PresentedModule& p, const TruncatedModule& w) {
  if (p.max_degree() > w.truncation)
    throw TruncationError("presentation degree exceeds codomain truncation");
  int cols = 0;
  std::vector<int> offsets;
  for (int b : p.gens) {
    offsets.push_back(cols);
    cols += w.dim(b);
  }
  int rows = 0;
  for (int a : p.rels) rows += w.dim(a);
  Matrix sys(rows, cols);
  int row0 = 0;
  for (size_t i = 0; i < p.rels.size(); ++i) {
    for (size_t j = 0; j < p.gens.size(); ++j) {
      const auto& entry = p.rel_matrix[i][j];
      auto fs = enumerate_morphisms(entry.source, entry.target);
      Matrix block(w.dim(p.rels[i]), w.dim(p.gens[j]));
      for (size_t k = 0; k < fs.size(); ++k)
        if (!entry.coeffs[k].is_zero())
          block = block + act_matrix(w, fs[k]).scaled(entry.coeffs[k]);
      sys.paste(row0, offsets[j], block);
    }
    row0 += w.dim(p.rels[i]);
  }
  PresentedHom h;
  h.gen_degrees = p.gens;
  h.gen_images = kernel_basis(sys);
  return h;
}

ModuleMap realize_presented_hom(const PresentedModule& p, const EvaluatedPresentation& e,
                                const TruncatedModule& w, const Vec& stacked_images) {
  const int top = std::min(e.module.truncation, w.truncation);
  // split the stacked vector into per-generator images
  std::vector<Vec> images;
  size_t pos = 0;
  for (int b : p.gens) {
    Vec img(w.dim(b));
    for (int k = 0; k < w.dim(b); ++k) img[k] = stacked_images.at(pos++);
    images.push_back(std::move(img));
  }
  ModuleMap f;
  for (int m = 0; m <= top; ++m) {
    Matrix psi(w.dim(m), e.projection[m].cols());
    int offset = 0;
    for (size_t j = 0; j < p.gens.size(); ++j) {
      auto fs = enumerate_morphisms(p.gens[j], m);
      for (size_t k = 0; k < fs.size(); ++k)
        psi.set_col(offset + int(k), act(w, fs[k], images[j]));
      offset += int(fs.size());
    }
    f.level.push_back(psi * e.lift[m]);
  }
  return f;
}

namespace {

bool invertible_everywhere(const ModuleMap& f) {
  for (const auto& m : f.level)
    if (!is_invertible(m)) return false;
  return true;
}

}  // namespace

IsoResult is_isomorphic(const TruncatedModule& v, const TruncatedModule& w,
                        std::uint64_t seed, int trials) {
  IsoResult r;
  if (v.truncation != w.truncation) throw TruncationError("iso: truncation mismatch");
  for (int n = 0; n <= v.truncation; ++n)
    if (v.dim(n) != w.dim(n)) {
      r.kind = IsoResult::NOT_ISO;
      r.reason = "dimension mismatch at level " + std::to_string(n);
      return r;
    }
  bool all_zero = true;
  for (int n = 0; n <= v.truncation; ++n) all_zero = all_zero && v.dim(n) == 0;
  if (all_zero) {
    r.kind = IsoResult::ISO;
    r.witness = identity_map(v);
    return r;
  }
  HomSpace h = hom_truncated(v, w);
  if (h.dim() == 0) {
    r.kind = IsoResult::NOT_ISO;
    r.reason = "hom space vanishes";
    return r;
  }
  for (const auto& cand : h.basis)
    if (invertible_everywhere(cand)) {
      r.kind = IsoResult::ISO;
      r.witness = cand;
      return r;
    }
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    ModuleMap cand;
    std::vector<Scalar> coeff;
    for (int k = 0; k < h.dim(); ++k) coeff.push_back(Scalar(rng.small_int(3)));
    for (int n = 0; n <= v.truncation; ++n) {
      Matrix m(w.dim(n), v.dim(n));
      for (int k = 0; k < h.dim(); ++k)
        if (!coeff[k].is_zero()) m = m + h.basis[k].level[n].scaled(coeff[k]);
      cand.level.push_back(std::move(m));
    }
    if (invertible_everywhere(cand)) {
      r.kind = IsoResult::ISO;
      r.witness = cand;
      return r;
    }
  }
  r.kind = IsoResult::UNKNOWN;
  r.reason = "randomized invertibility search exhausted";
  return r;
}

TruncatedModule random_module_with_dims(Rng& rng, std::vector<int> dims) {
  TruncatedModule v = make_module(dims);
  const int top = v.truncation;
  for (int n = 0; n < top; ++n) {
    const int d0 = v.dim(n), d1 = v.dim(n + 1);
    if (d0 == 0 || d1 == 0) continue;
    if (n == 0) {
      for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d0; ++j) v.gen_matrix(0, 1).at(i, j) = Scalar(rng.small_int(2));
      continue;
    }
    // the exchange relations against the previous layer are linear in this
    // layer; sample a random point of their solution space
    const int dprev = v.dim(n - 1);
    const int unknowns = (n + 1) * d1 * d0;
    std::vector<Vec> rows;
    for (int p = 1; p <= n + 1; ++p)
      for (int q = p + 1; q <= n + 1; ++q)
        for (int rr = 0; rr < d1; ++rr)
          for (int cc = 0; cc < dprev; ++cc) {
            Vec row(unknowns);
            for (int s = 0; s < d0; ++s) {
              // + A_{n,q}[rr,s] * A_{n-1,p}[s,cc] - A_{n,p}[rr,s] * A_{n-1,q-1}[s,cc]
              row[size_t(q - 1) * d1 * d0 + size_t(rr) * d0 + s] +=
                  v.gen_matrix(n - 1, p).at(s, cc);
              row[size_t(p - 1) * d1 * d0 + size_t(rr) * d0 + s] -=
                  v.gen_matrix(n - 1, q - 1).at(s, cc);
            }
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
          }
    Matrix sys = Matrix::from_rows(rows, unknowns);
    Matrix null = kernel_basis(sys);
    Vec x(unknowns);
    for (int k = 0; k < null.cols(); ++k) {
      Scalar c(rng.small_int(2));
      if (c.is_zero()) continue;
      for (int u = 0; u < unknowns; ++u)
        if (!null.at(u, k).is_zero()) x[u] += c * null.at(u, k);
    }
    for (int i = 1; i <= n + 1; ++i)
      for (int rr = 0; rr < d1; ++rr)
        for (int cc = 0; cc < d0; ++cc)
          v.gen_matrix(n, i).at(rr, cc) = x[size_t(i - 1) * d1 * d0 + size_t(rr) * d0 + cc];
  }
  require_valid(v);
  return v;
}

TruncatedModule random_module(Rng& rng, int truncation, int max_dim) {
  std::vector<int> dims(truncation + 1);
  for (auto& d : dims) d = rng.below(max_dim + 1);
  return random_module_with_dims(rng, std::move(dims));
}

TruncatedModule random_finite_support_module(Rng& rng, int truncation, int support,
                                             int max_dim) {
  std::vector<int> dims(truncation + 1, 0);
  for (int n = 0; n <= std::min(support, truncation); ++n) dims[n] = rng.below(max_dim + 1);
  bool any = false;
  for (int d : dims) any = any || d > 0;
  if (!any && support >= 0) dims[std::min(support, truncation)] = 1;
  return random_module_with_dims(rng, std::move(dims));
}

SesSample random_ses(Rng& rng, int truncation, int max_dim) {
  SesSample s;
  s.total = random_module(rng, truncation, max_dim);
  std::vector<std::pair<int, Vec>> seeds;
  int nseeds = 1 + rng.below(2);
  for (int k = 0; k < nseeds; ++k) {
    int lvl = rng.below(truncation + 1);
    if (s.total.dim(lvl) == 0) continue;
    Vec v(s.total.dim(lvl));
    for (auto& x : v) x = Scalar(rng.small_int(2));
    seeds.push_back({lvl, std::move(v)});
  }
  Submodule sub = submodule_generate(s.total, seeds);
  QuotientModule quo = quotient(s.total, sub.inclusion);
  s.sub = std::move(sub.module);
  s.quot = std::move(quo.module);
  s.inclusion.level = sub.inclusion;
  s.projection.level = quo.projection;
  return s;
}

}  // namespace oirep
