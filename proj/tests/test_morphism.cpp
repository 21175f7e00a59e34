#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oirep/morphism.hpp"

using namespace oirep;

namespace {

// Independent oracle: subsets of [n] of size m by brute force over bitmasks.
std::set<std::vector<int>> subsets_bruteforce(int m, int n) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> v;
    for (int x = 1; x <= n; ++x)
      if (mask & (1u << (x - 1))) v.push_back(x);
    if (int(v.size()) == m) out.insert(v);
  }
  return out;
}

OrdMorphism compose_list(const std::vector<OrdMorphism>& fs, const OrdMorphism& inner) {
  OrdMorphism cur = inner;
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) cur = compose(*it, cur);
  return cur;
}

}  // namespace

TEST_CASE("enumeration matches brute-force subsets and binomials") {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 7; ++m) {
      auto fs = enumerate_morphisms(m, n);
      if (m > n) {
        CHECK(fs.empty());
        continue;
      }
      CHECK(static_cast<long long>(fs.size()) == binom(n, m));
      auto oracle = subsets_bruteforce(m, n);
      std::set<std::vector<int>> got;
      for (auto& f : fs) got.insert(f.values);
      CHECK(got == oracle);
      // lexicographic order and index consistency
      for (size_t i = 0; i < fs.size(); ++i) {
        CHECK(morphism_index(fs[i]) == int(i));
        if (i + 1 < fs.size()) CHECK(fs[i].values < fs[i + 1].values);
      }
    }
  CHECK(enumerate_morphisms(0, 2).size() == 1);
  CHECK(enumerate_morphisms(1, 2).size() == 2);
  CHECK(enumerate_morphisms(3, 2).empty());
}

TEST_CASE("composition basics") {
  auto a11 = irreducible(1, 1);
  CHECK(compose(identity_morphism(2), a11) == a11);
  CHECK(compose(a11, identity_morphism(1)) == a11);
  auto f = compose(irreducible(2, 3), a11);
  CHECK(f == make_morphism(1, 3, {2}));
  auto g = compose(irreducible(2, 1), irreducible(1, 2));
  CHECK(g == make_morphism(1, 3, {2}));
  CHECK_THROWS_AS(compose(a11, a11), CompositionError);
  // degree additivity on all composable pairs of small morphisms
  for (int m = 0; m <= 3; ++m)
    for (int n = m; n <= 4; ++n)
      for (int r = n; r <= 5; ++r)
        for (auto& f1 : enumerate_morphisms(m, n))
          for (auto& g1 : enumerate_morphisms(n, r))
            CHECK(compose(g1, f1).degree() == f1.degree() + g1.degree());
}

TEST_CASE("factorization: canonical order, recomposition, identity") {
  CHECK(factorize(identity_morphism(3)).empty());
  auto a11 = irreducible(1, 1);
  CHECK(factorize(a11) == std::vector<OrdMorphism>{a11});
  auto f = make_morphism(1, 3, {2});
  auto fs = factorize(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == irreducible(2, 3));
  CHECK(fs[1] == irreducible(1, 1));
  for (int m = 0; m <= 4; ++m)
    for (int n = m; n <= 8; ++n)
      for (auto& h : enumerate_morphisms(m, n)) {
        auto parts = factorize(h);
        CHECK(int(parts.size()) == h.degree());
        CHECK(compose_list(parts, identity_morphism(m)) == h);
      }
}

TEST_CASE("quadratic relation oracle") {
  // Every degree-2 morphism out of [n] has exactly two factorizations into
  // irreducibles, and they are the two sides of the exchange relation.
  for (int n = 0; n <= 6; ++n) {
    for (auto& f : enumerate_morphisms(n, n + 2)) {
      std::vector<std::pair<int, int>> factorizations;  // (outer miss, inner miss)
      for (int q = 1; q <= n + 2; ++q)
        for (int p = 1; p <= n + 1; ++p)
          if (compose(irreducible(n + 1, q), irreducible(n, p)) == f)
            factorizations.emplace_back(q, p);
      REQUIRE(factorizations.size() == 2);
      // the two missing target elements i < j
      std::vector<bool> hit(n + 3, false);
      for (int v : f.values) hit[v] = true;
      std::vector<int> miss;
      for (int x = 1; x <= n + 2; ++x)
        if (!hit[x]) miss.push_back(x);
      REQUIRE(miss.size() == 2);
      int i = miss[0], j = miss[1];
      CHECK(factorizations[0] == std::make_pair(i, j - 1));
      CHECK(factorizations[1] == std::make_pair(j, i));
      // exchange relation instance
      CHECK(compose(irreducible(n + 1, j), irreducible(n, i)) ==
            compose(irreducible(n + 1, i), irreducible(n, j - 1)));
    }
    // relation form over all p < q
    for (int p = 1; p <= n + 1; ++p)
      for (int q = p + 1; q <= n + 2; ++q)
        CHECK(compose(irreducible(n + 1, q), irreducible(n, p)) ==
              compose(irreducible(n + 1, p), irreducible(n, q - 1)));
  }
}

TEST_CASE("embed formulas") {
  auto e01 = enumerate_morphisms(0, 1)[0];
  CHECK(embed(Side::a, e01) == canonical_inclusion(1, 2));
  CHECK(embed(Side::b, e01) == make_morphism(1, 2, {2}));
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      CHECK(embed(Side::a, irreducible(n, i)) == irreducible(n + 1, i + 1));
      CHECK(embed(Side::b, irreducible(n, i)) == irreducible(n + 1, i));
    }
}

TEST_CASE("submerge formulas and round trips") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(submerge(Side::a, identity_morphism(n)) == identity_morphism(n - 1));
    CHECK(submerge(Side::b, identity_morphism(n)) == identity_morphism(n - 1));
  }
  CHECK(submerge(Side::b, make_morphism(2, 3, {1, 2})) == make_morphism(1, 2, {1}));
  CHECK_THROWS_AS(submerge(Side::a, enumerate_morphisms(0, 3)[0]), DomainError);
  for (int m = 0; m <= 5; ++m)
    for (int n = m; n <= 7; ++n)
      for (auto& f : enumerate_morphisms(m, n)) {
        CHECK(submerge(Side::a, embed(Side::a, f)) == f);
        CHECK(submerge(Side::b, embed(Side::b, f)) == f);
      }
}

TEST_CASE("embed/submerge functoriality") {
  for (int m = 0; m <= 3; ++m)
    for (int n = m; n <= 5; ++n)
      for (int r = n; r <= 5; ++r)
        for (auto& f : enumerate_morphisms(m, n))
          for (auto& g : enumerate_morphisms(n, r))
            for (Side s : {Side::a, Side::b}) {
              CHECK(embed(s, compose(g, f)) == compose(embed(s, g), embed(s, f)));
              if (m >= 1)
                CHECK(submerge(s, compose(g, f)) ==
                      compose(submerge(s, g), submerge(s, f)));
            }
}

TEST_CASE("embedding/submerging identities") {
  for (int m = 0; m <= 5; ++m)
    for (int n = m; n <= 8; ++n)
      for (auto& f : enumerate_morphisms(m, n)) {
        CHECK(embed(Side::a, embed(Side::b, f)) == embed(Side::b, embed(Side::a, f)));
        if (m >= 2)
          CHECK(submerge(Side::a, submerge(Side::b, f)) ==
                submerge(Side::b, submerge(Side::a, f)));
        if (m >= 1) {
          OrdMorphism g = f;
          for (int k = 0; k < m; ++k) g = embed(Side::a, submerge(Side::b, g));
          CHECK(g == canonical_inclusion(m, n));
        }
      }
}

TEST_CASE("boundary constructions") {
  CHECK(boundary(Side::a, BoundaryDir::lower, irreducible(1, 1)) == identity_morphism(1));
  CHECK(boundary(Side::a, BoundaryDir::raise, make_morphism(1, 2, {2})) ==
        identity_morphism(2));
  CHECK(boundary(Side::b, BoundaryDir::lower, make_morphism(1, 2, {1})) ==
        identity_morphism(1));
  CHECK_THROWS_AS(boundary(Side::a, BoundaryDir::lower, irreducible(1, 2)),
                  PreconditionError);
  CHECK_THROWS_AS(boundary(Side::b, BoundaryDir::raise, canonical_inclusion(2, 2)),
                  PreconditionError);
  // raise is a section of lower on guarded morphisms
  for (int m = 0; m <= 4; ++m)
    for (int n = std::max(m, 1); n <= 6; ++n)
      for (auto& f : enumerate_morphisms(m, n))
        for (Side s : {Side::a, Side::b}) {
          bool guard = (s == Side::a) ? !hits_min(f) : !hits_max(f);
          if (!guard) continue;
          auto low = boundary(s, BoundaryDir::lower, f);
          auto rai = boundary(s, BoundaryDir::raise, f);
          CHECK(low.target == f.target - 1);
          CHECK(rai.source == f.source + 1);
          // dropping the added point from the raised morphism gives the lowered one
          CHECK(submerge(s, rai) == low);
        }
}

TEST_CASE("mirror symmetry relates the two sides") {
  for (int m = 0; m <= 4; ++m)
    for (int n = m; n <= 6; ++n)
      for (auto& f : enumerate_morphisms(m, n)) {
        CHECK(mirror(mirror(f)) == f);
        CHECK(embed(Side::b, f) == mirror(embed(Side::a, mirror(f))));
        if (m >= 1) CHECK(submerge(Side::b, f) == mirror(submerge(Side::a, mirror(f))));
      }
}

TEST_CASE("textual form") {
  CHECK(to_text(make_morphism(1, 3, {2})) == "1->3:[2]");
  CHECK(to_text(identity_morphism(3)) == "3->3:id");
  CHECK(to_text(enumerate_morphisms(0, 2)[0]) == "0->2:[]");
}
