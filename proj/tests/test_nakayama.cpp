#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oirep/nakayama.hpp"

using namespace oirep;

namespace {

PresentedModule torsion_w_presentation() {
  PresentedModule p;
  p.gens = {1};
  p.rels = {2};
  p.rel_matrix = {{algebra_element(irreducible(1, 1))}};
  return p;
}

FiniteDimModule random_findim(Rng& rng, int support, int max_dim) {
  return finite_dim(random_module(rng, support, max_dim));
}

// the canonical short exact family 0 -> image -> M(n-1) -> cokernel -> 0
// built from precomposition with a degree-1 morphism
struct SesInstance {
  PresentedModule a, b, c;
  PresentedMap h1, h2;
};

SesInstance ses_instance(int n, int i) {
  SesInstance s;
  s.a.gens = {n};
  s.a.rels = {n + 1};
  s.a.rel_matrix = {{algebra_element(irreducible(n, i)) -
                     algebra_element(irreducible(n, i + 1))}};
  s.b = free_presentation(n - 1);
  s.c.gens = {n - 1};
  s.c.rels = {n};
  s.c.rel_matrix = {{algebra_element(irreducible(n - 1, i))}};
  s.h1.dom = s.a;
  s.h1.cod = s.b;
  s.h1.entries = {{algebra_element(irreducible(n - 1, i))}};
  s.h2.dom = s.b;
  s.h2.cod = s.c;
  AlgebraElement unit = algebra_zero(n - 1, n - 1);
  unit.coeffs[0] = Scalar(1);
  s.h2.entries = {{unit}};
  return s;
}

}  // namespace

TEST_CASE("right modules and duality bookkeeping") {
  for (int n = 0; n <= 4; ++n) {
    auto rf = right_free(n);
    CHECK(validate_right(rf).empty());
    int total = 0;
    for (int d : rf.dims) total += d;
    CHECK(total == (1 << n));
    auto dual = dual_of_right_free(n);
    CHECK(validate(dual.data).empty());
  }
  Rng rng(5);
  auto x = random_findim(rng, 3, 2);
  CHECK(validate_right(dual_right(x)).empty());
}

TEST_CASE("nakayama of free modules") {
  for (int n = 0; n <= 3; ++n) {
    auto nu = nakayama(free_presentation(n));
    CHECK(nu.module.support == n);
    for (int m = 0; m <= n; ++m) CHECK(nu.module.data.dim(m) == int(binom(n, m)));
    CHECK(validate(nu.module.data).empty());
    // dual of the free right module levelwise
    CHECK(nu.module.data.dim(0) == 1);
    CHECK(nu.module.data.dim(n) == 1);
  }
  // the standing torsion module dies
  auto nw = nakayama(torsion_w_presentation());
  for (int m = 0; m <= nw.module.support; ++m) CHECK(nw.module.data.dim(m) == 0);
}

TEST_CASE("inverse nakayama on simples and the duality cross-check") {
  // the simple at [0] goes back to the constant free module
  TruncatedModule s0 = make_module({1});
  auto inv = inverse_nakayama(finite_dim(s0), 5);
  CHECK(is_isomorphic(inv.module, free_module(0, 5)).kind == IsoResult::ISO);

  // duality route agrees with the direct right-module intertwiner solve
  Rng rng(7);
  for (int t = 0; t < 3; ++t) {
    auto x = random_findim(rng, 2, 2);
    auto inv2 = inverse_nakayama(x, 4);
    for (int n = 0; n <= 4; ++n) {
      auto direct = right_intertwiner_basis(dual_right(x), right_free(n));
      CHECK(int(direct.size()) == inv2.module.dim(n));
    }
    CHECK(validate(inv2.module).empty());
  }
}

TEST_CASE("nakayama round trip on seeded finite-dimensional modules") {
  Rng rng(11);
  for (int t = 0; t < 4; ++t) {
    auto x = random_findim(rng, 2 + rng.below(2), 2);
    const int window = 2 * x.support + 1;
    auto inv = inverse_nakayama(x, window + 2);
    auto nu = nakayama_truncated(inv.module, x.support + 1, window);
    int common = std::max(nu.module.support, x.support);
    auto verdict = is_isomorphic(as_truncated(nu.module, common), as_truncated(x, common));
    CHECK(verdict.kind == IsoResult::ISO);
  }
}

TEST_CASE("round trip dual route agrees on small instances") {
  // on small supports the inverse image also admits an inferred finite
  // presentation; the presented and the stabilized truncated routes must
  // produce the same module
  Rng rng(17);
  int done = 0;
  for (int t = 0; t < 6 && done < 2; ++t) {
    auto x = random_findim(rng, 1 + rng.below(2), 2);
    const int out_trunc = 2 * x.support + 3;
    auto inv = inverse_nakayama(x, out_trunc);
    auto inferred = infer_presentation(inv.module);
    if (!inferred.gens_saturated || !inferred.rels_saturated) continue;
    auto via_pres = nakayama(inferred.pres, x.support + 1);
    auto via_trunc = nakayama_truncated(inv.module, x.support + 1, out_trunc - 2);
    CHECK(via_pres.module.data.dims == via_trunc.module.data.dims);
    int common = std::max(via_trunc.module.support, x.support);
    CHECK(is_isomorphic(as_truncated(via_trunc.module, common), as_truncated(x, common))
              .kind == IsoResult::ISO);
    CHECK(is_isomorphic(as_truncated(via_pres.module, common), as_truncated(x, common))
              .kind == IsoResult::ISO);
    ++done;
  }
  CHECK(done == 2);
}

TEST_CASE("nakayama adjunction rows") {
  Rng rng(13);
  std::vector<PresentedModule> vs = {free_presentation(0), free_presentation(2),
                                     torsion_w_presentation()};
  for (const auto& v : vs)
    for (int t = 0; t < 2; ++t) {
      auto x = random_findim(rng, 3, 2);
      auto nu = nakayama(v);
      int common = std::max(nu.module.support, x.support) + 1;
      auto lhs = hom_truncated(as_truncated(nu.module, common), as_truncated(x, common));
      CHECK(lhs.flag == Exactness::exact);
      auto inv = inverse_nakayama(x, std::max(v.max_degree(), 1));
      auto rhs = hom_from_presentation(v, inv.module);
      CHECK(lhs.dim() == rhs.dim());
    }
}

TEST_CASE("nakayama is exact on the canonical short exact families") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      auto s = ses_instance(n, i);
      // the instance is a genuine short exact sequence of modules
      const int trunc = 6;
      auto ea = evaluate_presentation(s.a, trunc);
      auto eb = evaluate_presentation(s.b, trunc);
      auto ec = evaluate_presentation(s.c, trunc);
      auto m1 = realize_presented_map(s.h1, ea, eb);
      auto m2 = realize_presented_map(s.h2, eb, ec);
      CHECK(short_exact_check(ea.module, eb.module, ec.module, m1, m2));

      auto na = nakayama(s.a);
      auto nb = nakayama(s.b);
      auto nc = nakayama(s.c);
      auto f1 = nakayama_map(s.h1, na, nb);
      auto f2 = nakayama_map(s.h2, nb, nc);
      int top = std::max({na.module.support, nb.module.support, nc.module.support});
      ModuleMap g1, g2;
      for (int m = 0; m <= top; ++m) {
        Matrix a1 = m < int(f1.size()) ? f1[m]
                                       : Matrix(as_truncated(nb.module, top).dim(m),
                                                as_truncated(na.module, top).dim(m));
        Matrix a2 = m < int(f2.size()) ? f2[m]
                                       : Matrix(as_truncated(nc.module, top).dim(m),
                                                as_truncated(nb.module, top).dim(m));
        g1.level.push_back(a1);
        g2.level.push_back(a2);
      }
      CHECK(short_exact_check(as_truncated(na.module, top), as_truncated(nb.module, top),
                              as_truncated(nc.module, top), g1, g2));
    }
}

TEST_CASE("f maps and their kernels") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      auto f = f_map(n, i, 6);
      CHECK(is_module_map(free_module(n, 6), free_module(n - 1, 6), f));
      // image is spanned by composites through the missing-i irreducible
      for (int m = 0; m <= 6; ++m) {
        Matrix img = column_space(f.level[m]);
        CHECK(rank(img) == rank(f.level[m]));
      }
    }
  CHECK_THROWS_AS(f_map(2, 3, 5), DomainError);
}

TEST_CASE("simple saturated submodules") {
  // degree 0: the whole constant module
  auto l0 = simple_saturated(0, 5);
  CHECK(l0.sub.module.dims == free_module(0, 5).dims);
  CHECK(l0.generates);

  // degree 1: corank one at every level
  auto l1 = simple_saturated(1, 8);
  for (int m = 0; m <= 8; ++m) CHECK(l1.sub.module.dim(m) == std::max(0, m - 1));
  CHECK(l1.gen_level == 2);
  CHECK(l1.generates);

  // degree 2: the explicit minimal generator at level 4
  auto l2 = simple_saturated(2, 6);
  CHECK(l2.gen_level == 4);
  REQUIRE(l2.generator.size() == 6);
  Vec expect = {Scalar(0), Scalar(1), Scalar(-1), Scalar(-1), Scalar(1), Scalar(0)};
  CHECK(l2.generator == expect);
  CHECK(l2.generates);
}

TEST_CASE("saturation evidence") {
  for (int n = 0; n <= 2; ++n) {
    auto ev = saturation_evidence(n, 6, 6);
    INFO("n = ", n, " detail: ", ev.detail);
    CHECK(ev.pass);
    CHECK(ev.hom_to_own_free == (n == 0 ? 1 : 1));
    CHECK(ev.hom_to_lower_free == 0);
    CHECK(ev.hom_quotient == n);
  }
}

TEST_CASE("nakayama of the simple saturated modules") {
  for (int n = 0; n <= 2; ++n) {
    auto ls = simple_saturated(n, n == 2 ? 7 : 6);
    REQUIRE(ls.generates);
    PresentedModule pres;
    if (n == 0) {
      pres = free_presentation(0);
    } else {
      // presentation by the extracted generator with inferred relations
      auto inferred = infer_presentation(ls.sub.module);
      REQUIRE(inferred.gens_saturated);
      REQUIRE(inferred.rels_saturated);
      REQUIRE(inferred.pres.gens.size() == 1);
      pres = inferred.pres;
    }
    auto nu = nakayama(pres, std::max(2, pres.max_degree()));
    for (int m = 0; m <= nu.module.support; ++m)
      CHECK(nu.module.data.dim(m) == (m == n ? 1 : 0));
  }
}
