#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oirep/adjunction.hpp"

using namespace oirep;

TEST_CASE("all six adjoint pairs on a small sample, both sides") {
  for (Side s : {Side::a, Side::b}) {
    auto reports = verify_all_adjunctions(s, 6, 1, 6);
    REQUIRE(reports.size() == 6);
    for (const auto& rep : reports) {
      INFO(pair_name(rep.pair), " side ", side_name(rep.side));
      CHECK(rep.pass());
      for (const auto& row : rep.rows) {
        INFO(row.v_desc, ": ", row.dim_lhs, " vs ", row.dim_rhs);
        CHECK(row.dim_lhs == row.dim_rhs);
        CHECK(row.lhs_exact);
        CHECK(row.rhs_exact);
      }
    }
  }
}

TEST_CASE("composite isomorphisms with canonical witnesses") {
  for (Side s : {Side::a, Side::b}) {
    auto reports = check_composite_isos(s, 6, 2, 3);
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) {
      INFO(rep.name);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("shift/coinduction transposition is a natural bijection") {
  const int n_top = 6;
  Rng rng(9);
  for (Side s : {Side::a, Side::b}) {
    auto v = random_module(rng, n_top, 3);
    auto w = random_finite_support_module(rng, n_top, n_top - 3, 2);
    auto sv = shift(s, v).module;
    auto qw = coinduction(s, w).module;
    auto phis = hom_truncated(truncate_to(sv, n_top - 1), truncate_to(w, n_top - 1));
    auto psis = hom_truncated(truncate_to(v, n_top), qw);
    CHECK(phis.dim() == psis.dim());

    for (const auto& phi : phis.basis) {
      auto psi = sq_transpose(s, v, w, phi);
      CHECK(is_module_map(truncate_to(v, n_top - 1), truncate_to(qw, n_top - 1), psi));
      auto back = sq_untranspose(s, v, w, psi);
      for (int n = 0; n <= n_top - 2; ++n) CHECK(back.level[n] == phi.level[n]);
    }
    for (const auto& psi : psis.basis) {
      auto phi = sq_untranspose(s, v, w, psi);
      auto again = sq_transpose(s, v, w, phi);
      for (int n = 0; n <= n_top - 2; ++n) CHECK(again.level[n] == psi.level[n]);
    }

    // naturality under precomposition by submodule inclusions
    for (int t = 0; t < 3; ++t) {
      std::vector<std::pair<int, Vec>> seeds;
      int lvl = rng.below(n_top + 1);
      if (v.dim(lvl) == 0) continue;
      Vec x(v.dim(lvl));
      for (auto& c : x) c = Scalar(rng.small_int(2));
      seeds.push_back({lvl, x});
      auto sub = submodule_generate(v, seeds);
      ModuleMap theta;
      theta.level = sub.inclusion;
      for (const auto& phi : phis.basis) {
        // phi . S(theta)
        ModuleMap phi_stheta;
        for (int n = 0; n <= n_top - 1; ++n)
          phi_stheta.level.push_back(phi.level[n] * theta.level[n + 1]);
        auto lhs = sq_transpose(s, sub.module, w, phi_stheta);
        auto rhs_full = sq_transpose(s, v, w, phi);
        for (int n = 0; n <= n_top - 1; ++n)
          CHECK(lhs.level[n] == rhs_full.level[n] * theta.level[n]);
      }
    }
  }
}
