#include "bigproj/characters.hpp"
#include "bigproj/whittaker.hpp"
#include "doctest.h"

using namespace bigproj;

namespace {

Q factorial(int n) {
  Q r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Truncation of exp(sum_i eta_i x_{alpha_i}) to x-height <= depth.
BigCellPoly exp_simple(const BigCell& bc, const std::vector<Q>& eta, int depth) {
  const auto& rs = bc.rs();
  const auto& L = bc.layout();
  BigCellPoly out(L.nvars());
  for (const auto& a : root_monomials(rs, depth)) {
    Q c = 1;
    bool simple_only = true;
    for (int k = 0; k < L.m; ++k) {
      if (a[k] == 0) continue;
      int i = -1;
      for (int j = 0; j < rs.rank(); ++j)
        if (rs.simple_index(j) == k) i = j;
      if (i < 0) simple_only = false;
      else c *= rat_pow(eta[i], a[k]) / factorial(a[k]);
    }
    if (simple_only) out += bc.monomial(a, Weight(L.r, 0), RootExps(L.m, 0), c);
  }
  return out;
}

BigCellPoly low_part(const BigCell& bc, const BigCellPoly& p, int max_height) {
  const auto& L = bc.layout();
  BigCellPoly out(L.nvars());
  for (const auto& [e, c] : p.terms()) {
    RootExps xa(e.begin(), e.begin() + L.m);
    if (root_height(bc.rs(), xa) <= max_height) out.add_term(e, c);
  }
  return out;
}

}  // namespace

TEST_SUITE("whittaker") {
  TEST_CASE("tau in rank one") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    BigCell bc(g);
    Q eta = rat(3, 2);
    auto t = tau(bc, {eta}, 6);
    for (int k = 0; k <= 6; ++k) {
      auto it = t.terms().find(PolyMono{k, 0, 0});
      REQUIRE(it != t.terms().end());
      CHECK(it->second == rat_pow(eta, k) / factorial(k));
    }
    CHECK(t.terms().size() == 7);
    CHECK(tau(bc, {Q(0)}, 6) == BigCellPoly::constant(3, Q(1)));
  }

  TEST_CASE("tau in rank two") {
    for (auto label : {"A2", "B2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      BigCell bc(g);
      std::vector<Q> eta{Q(2), Q(-3)};
      CHECK(left_whittaker_solutions(bc, eta, 5).size() == 1);
      auto t = tau(bc, eta, 5);
      CHECK(t == exp_simple(bc, eta, 5));
    }
    RootSystem rs("A2");
    LieAlgebra g(rs);
    BigCell bc(g);
    auto t = tau(bc, {Q(2), Q(5)}, 4);
    const auto& L = bc.layout();
    PolyMono x1x2(L.nvars(), 0), x12(L.nvars(), 0);
    x1x2[L.x(0)] = x1x2[L.x(1)] = 1;
    x12[L.x(2)] = 1;
    CHECK(t.terms().at(x1x2) == 10);
    CHECK(t.terms().count(x12) == 0);
  }

  TEST_CASE("left action of n- only involves x") {
    for (auto label : {"A1", "A2", "B2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      BigCell bc(g);
      const auto& L = bc.layout();
      for (int b = 0; b < L.m; ++b) {
        const auto& d = bc.rho(1, g.index().F(b));
        CHECK(d.scalar.is_zero());
        for (int v = 0; v < L.nvars(); ++v) {
          if (v >= L.m) CHECK(d.field[v].is_zero());
          for (const auto& [e, c] : d.field[v].terms())
            for (int s = L.m; s < L.nvars(); ++s) CHECK(e[s] == 0);
        }
      }
    }
  }

  TEST_CASE("realized action") {
    RootSystem a1("A1");
    LieAlgebra g1(a1);
    BigCell b1(g1);
    const auto& L = b1.layout();
    Q eta = 7;
    auto ops = realized_whittaker_action(b1, {eta});
    DiffOp f(L.nvars());
    f.field[L.y(0)] = b1.monomial({0}, {0}, {2}, Q(-1));
    f.field[L.z(0)] = b1.monomial({0}, {0}, {1});
    f.scalar = b1.monomial({0}, {-2}, {0}, eta);
    CHECK(ops[g1.index().F(0)] == f);
    CHECK(check_brackets(g1, L, ops));

    for (auto label : {"A2", "B2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      BigCell bc(g);
      const auto& Lr = bc.layout();
      auto with = realized_whittaker_action(bc, {Q(1), Q(2)});
      auto zero = realized_whittaker_action(bc, {Q(0), Q(0)});
      CHECK(check_brackets(g, Lr, with));
      CHECK(check_serre(g, Lr, with));
      for (int i = 0; i < rs.rank(); ++i) {
        int e = g.index().E(rs.simple_index(i));
        CHECK(with[e] == zero[e]);
        CHECK(zero[e] == realized_whittaker_action(bc, {Q(3), Q(-1)})[e]);
      }
      // eta = 0 is the y, z part of rho2.
      for (int a = 0; a < g.dim(); ++a) {
        DiffOp d = bc.rho(2, a);
        for (int b = 0; b < Lr.m; ++b) d.field[Lr.x(b)] = BigCellPoly(Lr.nvars());
        CHECK(zero[a] == d);
      }
      // rho2(a)(phi tau) = (varrho(a) phi) tau below the truncation edge.
      int D = 5;
      std::vector<Q> eta2{Q(1), Q(2)};
      auto t = tau(bc, eta2, D);
      int edge = D - rs.root(rs.highest_root()).height;
      std::vector<BigCellPoly> phis{bc.monomial(RootExps(Lr.m, 0), {1, -1}, {0, 1, 0}),
                                    bc.monomial(RootExps(Lr.m, 0), {-2, 0}, {1, 0, 1})};
      for (const auto& phi : phis)
        for (int a = 0; a < g.dim(); ++a)
          CHECK(low_part(bc, bc.rho(2, a).apply(Lr, phi * t), edge) ==
                low_part(bc, with[a].apply(Lr, phi) * t, edge));
    }
  }

  TEST_CASE("Whittaker vectors in completions") {
    RootSystem a1("A1");
    LieAlgebra g1(a1);
    Enveloping U1(g1);
    for (int mu : {-3, 0, 2}) {
      WhittakerCertificate cert;
      auto sols = whittaker_space([&](int d) { return restricted_dual(verma(U1, {mu}, d)); },
                                  {{Q(1)}, -1}, 5, true, &cert);
      CHECK(sols.size() == 1);
      CHECK(cert.dim == 1);
    }
    RootSystem a2("A2");
    LieAlgebra g2(a2);
    Enveloping U2(g2);
    for (Weight mu : {Weight{0, 0}, Weight{-2, 1}}) {
      auto sols = whittaker_space([&](int d) { return restricted_dual(verma(U2, mu, d)); },
                                  {{Q(1), Q(2)}, -1}, 3);
      CHECK(sols.size() == 1);
    }
    // eta = 0 recovers singular vectors.
    auto M = [&](int d) { return verma(U1, {2}, d); };
    auto sing = whittaker_space(M, {{Q(0)}, +1}, 6, false);
    auto expect = singular_vectors(M(6));
    std::size_t total = 0;
    for (const auto& s : expect) total += s.basis.size();
    CHECK(sing.size() == total);
    CHECK(total == 2);
    // A module in O has no Whittaker vectors for nonzero eta.
    CHECK(whittaker_space([&](int d) { return verma(U1, {-3}, d); }, {{Q(1)}, +1}, 6, false).empty());
    CHECK(whittaker_space([&](int d) { return verma(U2, {1, 0}, d); }, {{Q(1), Q(1)}, +1}, 3, false)
              .empty());
  }

  TEST_CASE("Borel-Weil realization in rank one") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    for (int lam = -1; lam >= -5; --lam) {
      auto rep = borel_weil_block(bc, U, {lam}, {Q(1)}, 6);
      CHECK(rep.character_ok);
      CHECK(rep.top_singular);
      CHECK(rep.witness_ok);
      CHECK(rep.quotient_ok);
      CHECK(rep.iso_checked);
      CHECK(rep.iso_ok);
    }
    auto r3 = borel_weil_block(bc, U, {-4}, {Q(3)}, 4);
    CHECK(r3.witness_coefficient == 27);
    CHECK(r3.top == Weight{2});
    auto r0 = borel_weil_block(bc, U, {-4}, {Q(0)}, 4, false);
    CHECK_FALSE(r0.iso_checked);
    CHECK_FALSE(r0.witness_ok);
    auto V = whittaker_block_module(bc, U, {-1}, {Q(1)}, 5);
    CHECK(V.character() == verma(U, {-1}, 5).character());
  }

  TEST_CASE("Borel-Weil character in rank two") {
    RootSystem rs("A2");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    auto rep = borel_weil_block(bc, U, {-2, -2}, {Q(1), Q(1)}, 3);
    CHECK(rep.character_ok);
    CHECK(rep.top_singular);
    CHECK(rep.witness_ok);
    CHECK(rep.quotient_ok);
    CHECK(rep.top == Weight{0, 0});
    auto V = whittaker_block_module(bc, U, {-2, -2}, {Q(1), Q(1)}, 3);
    CHECK(V.dim_at({0, 0}) == 1);
    // M(0,0) contributes 2, M(-2,1) and M(1,-2) one each.
    CHECK(V.dim_at({-1, -1}) == 4);
  }

  TEST_CASE("double Whittaker dimensions") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    for (int lam : {-2, -3, -4, -5}) {
      auto d = double_whittaker_dim(bc, U, {lam}, Q(1), Q(1), 6);
      CHECK(d.dim == 2);
      CHECK(d.dim_next == 2);
      CHECK(hom_space(big_projective_sl2(U, lam, 6), big_projective_sl2(U, lam, 6)).size() == 2);
    }
    auto s = double_whittaker_dim(bc, U, {-1}, Q(2), Q(3), 6);
    CHECK(s.dim == 1);
    CHECK(s.toda == "1/2 (z d/dz)^2 + 1 z d/dz + 0 + 12 z^-2");
  }

  TEST_CASE("Whittaker functor against Hom from the big projective") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    auto check = [&](const std::function<WeightModule(int)>& M, std::size_t expect) {
      auto r = soergel_dim_check(U, M, -4, Q(1), 6);
      CHECK(r.whittaker_dim == expect);
      CHECK(r.hom_dim == expect);
    };
    check([&](int d) { return big_projective_sl2(U, -4, d); }, 2);
    check([&](int d) { return verma(U, {2}, d); }, 1);
    check([&](int d) { return verma(U, {-4}, d); }, 1);
    check([&](int d) { return simple_module(g, {2}, d); }, 0);
  }
}
