#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oirep/algebra.hpp"

using namespace oirep;

namespace {

Matrix left_multiples_span(const OrdMorphism& gen, int target) {
  auto outer = enumerate_morphisms(gen.target, target);
  Matrix cols(int(binom(target, gen.source)), int(outer.size()));
  for (size_t j = 0; j < outer.size(); ++j)
    cols.at(morphism_index(compose(outer[j], gen)), int(j)) = Scalar(1);
  return column_space(cols);
}

Matrix right_multiples_span(const OrdMorphism& gen, int source) {
  auto inner = enumerate_morphisms(source, gen.source);
  Matrix cols(int(binom(gen.target, source)), int(inner.size()));
  for (size_t j = 0; j < inner.size(); ++j)
    cols.at(morphism_index(compose(gen, inner[j])), int(j)) = Scalar(1);
  return column_space(cols);
}

std::vector<AlgebraElement> rho_generators(Side s, int max_level) {
  std::vector<AlgebraElement> gens;
  for (int n = 1; n < max_level; ++n)
    gens.push_back(algebra_element(irreducible(n, s == Side::a ? 1 : n + 1)));
  return gens;
}

std::vector<AlgebraElement> difference_generators(Side s, int max_level) {
  std::vector<AlgebraElement> gens;
  for (int m = 1; m < max_level; ++m) {
    int i = s == Side::a ? 1 : m;
    gens.push_back(algebra_element(irreducible(m, i)) -
                   algebra_element(irreducible(m, i + 1)));
  }
  return gens;
}

}  // namespace

TEST_CASE("algebra element arithmetic and product") {
  auto a = algebra_element(irreducible(1, 1));
  auto b = algebra_element(irreducible(1, 2));
  auto d = a - b;
  CHECK(!d.is_zero());
  CHECK((d + b) == a);
  CHECK(to_text(d) == "-1->2:[1] + 1->2:[2]");
  auto g = algebra_element(irreducible(2, 3));
  auto p = algebra_product(g, a);
  CHECK(p == algebra_element(compose(irreducible(2, 3), irreducible(1, 1))));
  CHECK_THROWS_AS(algebra_product(a, a), CompositionError);
}

TEST_CASE("named ideal slice dimensions") {
  CHECK(named_ideal_slice(IdealName::Ia, 1, 2).dim() == 1);
  auto ia12 = named_ideal_slice(IdealName::Ia, 1, 2);
  CHECK(subspace_contains(ia12.basis, algebra_element(make_morphism(1, 2, {2})).coeffs));
  for (int n = 1; n <= 5; ++n) CHECK(named_ideal_slice(IdealName::Aug, n, n).dim() == 0);
  CHECK(named_ideal_slice(IdealName::Aug, 1, 3).dim() == 2);
  for (int m = 0; m <= 4; ++m)
    for (int n = m; n <= 6; ++n) {
      long long cnt = binom(n, m);
      int expect = (m < n && cnt > 0) ? int(cnt) - 1 : 0;
      CHECK(named_ideal_slice(IdealName::Aug, m, n).dim() == expect);
    }
  CHECK_THROWS_AS(named_ideal_slice(IdealName::Ia, 0, 2), DomainError);
  CHECK_THROWS_AS(named_ideal_slice(IdealName::Ib, 0, 2), DomainError);
}

TEST_CASE("named ideals are closed under composition on both sides") {
  const int L = 7;
  for (IdealName name : {IdealName::Ia, IdealName::Ib, IdealName::Aug}) {
    int lo = name == IdealName::Aug ? 0 : 1;
    for (int m = lo; m <= L; ++m)
      for (int n = m; n <= L; ++n) {
        auto slice = named_ideal_slice(name, m, n);
        if (n + 1 <= L)
          for (int i = 1; i <= n + 1; ++i) {
            auto up = named_ideal_slice(name, m, n + 1);
            CHECK(subspace_contains_all(
                up.basis, postcompose_matrix(irreducible(n, i), m) * slice.basis));
          }
        if (m - 1 >= lo)
          for (int i = 1; i <= m; ++i) {
            auto down = named_ideal_slice(name, m - 1, n);
            CHECK(subspace_contains_all(
                down.basis, precompose_matrix(irreducible(m - 1, i), n) * slice.basis));
          }
      }
  }
}

TEST_CASE("one-sided and two-sided closures of the extreme irreducibles") {
  const int L = 6;
  for (Side s : {Side::a, Side::b}) {
    IdealName name = s == Side::a ? IdealName::Ia : IdealName::Ib;
    auto gens = rho_generators(s, L);
    for (ClosureKind kind :
         {ClosureKind::left, ClosureKind::right, ClosureKind::two_sided}) {
      auto closed = ideal_closure(gens, kind, L, Ambient::positive);
      for (int m = 1; m <= L; ++m)
        for (int n = m; n <= L; ++n)
          CHECK(closed.at({m, n}).basis == named_ideal_slice(name, m, n).basis);
    }
  }
}

TEST_CASE("slicewise decomposition through the extreme irreducibles") {
  for (int m = 1; m <= 5; ++m)
    for (int n = m + 1; n <= 7; ++n) {
      auto ia = named_ideal_slice(IdealName::Ia, m, n);
      CHECK(ia.basis == left_multiples_span(irreducible(m, 1), n));
      CHECK(ia.basis == right_multiples_span(irreducible(n - 1, 1), m));
      auto ib = named_ideal_slice(IdealName::Ib, m, n);
      CHECK(ib.basis == left_multiples_span(irreducible(m, m + 1), n));
      CHECK(ib.basis == right_multiples_span(irreducible(n - 1, n), m));
    }
}

TEST_CASE("guarded kernel equals the named ideal slice") {
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 6; ++n) {
      CHECK(guarded_kernel_slice(Side::a, m, n).basis ==
            named_ideal_slice(IdealName::Ia, m, n).basis);
      CHECK(guarded_kernel_slice(Side::b, m, n).basis ==
            named_ideal_slice(IdealName::Ib, m, n).basis);
    }
}

TEST_CASE("kernel of the submerging algebra map is the difference ideal") {
  // side a at (1,2): both morphisms submerge to the empty morphism
  auto k = submerge_kernel_slice(Side::a, 1, 2);
  CHECK(k.dim() == 1);
  auto d = algebra_element(make_morphism(1, 2, {1})) -
           algebra_element(make_morphism(1, 2, {2}));
  CHECK(subspace_contains(k.basis, d.coeffs));
  for (int n = 1; n <= 5; ++n) CHECK(submerge_kernel_slice(Side::a, n, n).dim() == 0);

  const int L = 6;
  for (Side s : {Side::a, Side::b}) {
    auto closed = ideal_closure(difference_generators(s, L), ClosureKind::left, L,
                                Ambient::positive);
    for (int m = 1; m <= L; ++m)
      for (int n = m; n <= L; ++n)
        CHECK(closed.at({m, n}).basis == submerge_kernel_slice(s, m, n).basis);
  }
}

TEST_CASE("kernel ideals of precomposition by an irreducible") {
  const int L = 7;
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<AlgebraElement> gen = {algebra_element(irreducible(n, i)) -
                                         algebra_element(irreducible(n, i + 1))};
      auto closed = ideal_closure(gen, ClosureKind::two_sided, L, Ambient::full);
      for (int r = n; r <= L; ++r) {
        Matrix ker =
            column_space(kernel_basis(precompose_matrix(irreducible(n - 1, i), r)));
        CHECK(closed.at({n, r}).basis == ker);
      }
    }
}

TEST_CASE("augmentation ideal is a fixed point of the closure operator") {
  const int L = 5;
  auto closed =
      ideal_closure(augmentation_generators(L), ClosureKind::two_sided, L, Ambient::full);
  for (int n = 0; n <= L; ++n)
    for (int m = 0; m <= n; ++m)
      CHECK(closed.at({m, n}).basis == named_ideal_slice(IdealName::Aug, m, n).basis);
}
