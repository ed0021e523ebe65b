#include "bigproj/uqsl2.hpp"
#include "doctest.h"

using namespace bigproj;

TEST_SUITE("uqsl2") {
  TEST_CASE("quantum integers and the Casimir") {
    UqContext C(5);
    CHECK(C.qpow(5) == Cyc(1));
    CHECK(C.qint(5).zero());
    CHECK(C.qint(1) == Cyc(1));
    CHECK(C.qint(2) == C.qpow(1) + C.qpow(-1));
    // Linked weights share the Casimir value.
    CHECK(C.casimir_value(0) == C.casimir_value(3));
    CHECK_FALSE(C.casimir_value(0) == C.casimir_value(1));
  }

  TEST_CASE("simple modules and baby Verma modules") {
    for (int ell : {3, 5}) {
      UqContext C(ell);
      for (int mu = 0; mu < ell; ++mu) {
        auto L = simple_uq(C, mu);
        CHECK(L.dim() == mu + 1);
        CHECK(check_uq_relations(C, L));
        auto Z = baby_verma_uq(C, mu);
        CHECK(Z.dim() == ell);
        CHECK(check_uq_relations(C, Z));
        CHECK(check_uq_relations(C, twist_omega(C, Z)));
        auto layers = socle_layers_uq(C, Z);
        if (mu == ell - 1) {
          CHECK(layers == std::vector<std::map<int, int>>{{{mu, 1}}});
        } else {
          CHECK(layers == std::vector<std::map<int, int>>{{{mu, 1}}, {{ell - mu - 2, 1}}});
          CHECK(socle_layers_uq(C, twist_omega(C, Z)) == layers);
        }
      }
    }
    UqContext C3(3);
    CHECK_THROWS(simple_uq(C3, 3));
    CHECK_THROWS(UqContext(4));
  }

  TEST_CASE("projective covers") {
    for (int ell : {3, 5}) {
      UqContext C(ell);
      auto U0 = weight_ideal_uq(C, 1);
      CHECK(U0.dim() == ell * ell);
      CHECK(check_uq_relations(C, U0));
      int count = 0;
      for (int mu = 0; mu < ell; ++mu) {
        auto P = projective_uq(C, mu);
        CHECK(check_uq_relations(C, P));
        bool st = mu == ell - 1;
        CHECK(P.dim() == (st ? ell : 2 * ell));
        count += (mu + 1) * P.dim();
        for (int nu = 0; nu < ell; ++nu)
          CHECK(hom_uq(P, simple_uq(C, nu)).size() == (nu == mu ? 1u : 0u));
        auto layers = socle_layers_uq(C, P);
        if (st) {
          CHECK(layers == std::vector<std::map<int, int>>{{{mu, 1}}});
        } else {
          int mp = ell - mu - 2;
          CHECK(layers == std::vector<std::map<int, int>>{{{mu, 1}}, {{mp, 2}}, {{mu, 1}}});
        }
      }
      CHECK(count == ell * ell * ell);
    }
  }

  TEST_CASE("block orbits") {
    CHECK(block_orbits(3) == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(block_orbits(5) == std::vector<std::vector<int>>{{0, 3}, {1, 2}, {4}});
    for (int ell : {3, 5, 7, 9}) CHECK(block_orbits(ell).size() == static_cast<std::size_t>((ell - 1) / 2 + 1));
    // Extensions only within an orbit: the second socle layer of P(mu) is L(mu').
    UqContext C(7);
    for (const auto& o : block_orbits(7)) {
      if (o.size() < 2) continue;
      auto layers = socle_layers_uq(C, projective_uq(C, o[0]));
      CHECK(layers[1].size() == 1);
      CHECK(layers[1].begin()->first == o[1]);
    }
  }

  TEST_CASE("endomorphism algebras of the block generators") {
    for (int ell : {3, 5}) {
      UqContext C(ell);
      for (const auto& o : block_orbits(ell)) {
        auto A = endo_algebra_uq(C, o[0]);
        CHECK(A.radical_cubed_zero);
        if (o.size() == 2) {
          CHECK(A.dim == 8);
          CHECK(A.graded_dims == std::vector<int>{2, 4, 2});
        } else {
          CHECK(A.dim == 1);
          CHECK(A.graded_dims == std::vector<int>{1});
        }
      }
    }
  }

  TEST_CASE("block duals") {
    for (int ell : {3, 5}) {
      auto rep = block_dual_dims(ell, true);
      CHECK(rep.total == ell * ell * ell);
      CHECK(rep.union_rank == ell * ell * ell);
      for (const auto& B : rep.blocks) {
        CHECK(B.kernel_ok);
        CHECK(B.tensor_dim == B.dim);
        CHECK(B.layers == expected_dual_layers(B.orbit));
        if (B.orbit.size() == 2) {
          int a = B.orbit[0] + 1, b = ell - B.orbit[0] - 1;
          CHECK(B.dim == 2 * ell * ell);
          CHECK(B.layer_dims == std::vector<int>{a * a + b * b, 4 * a * b, a * a + b * b});
        } else {
          CHECK(B.dim == ell * ell);
          CHECK(B.layer_dims == std::vector<int>{ell * ell});
        }
      }
    }
  }
}
