#include "bigproj/matrixel.hpp"
#include "doctest.h"

using namespace bigproj;

namespace {

Monomial mono(int a, int b, int c) { return {a, b, c}; }

// dim M_x[w] in the truncated window.
int verma_dim(int x, int w) { return (w <= x && (x - w) % 2 == 0) ? 1 : 0; }

}  // namespace

TEST_SUITE("matrixel") {
  TEST_CASE("matrix elements of small modules") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    LieIndex li(rs);
    auto L0 = simple_module(g, {0}, 4);
    auto triv = matrix_element(L0, 0, {Q(1)}, 0, {Q(1)}, 4);
    CHECK(triv.value(li, mono(0, 0, 0)) == 1);
    CHECK(triv.value(li, mono(0, 3, 0)) == 0);
    CHECK(triv.value(li, mono(1, 0, 1)) == 0);
    CHECK(triv == counit(rs, 4));

    auto M2 = verma(U, {2}, 5);
    int top = M2.find({2});
    auto phi = matrix_element(M2, top, {Q(1)}, top, {Q(1)}, 5);
    CHECK(phi.value(li, U.normal_form({li.F(0), li.E(0)})) == 0);
    CHECK(phi.value(li, U.normal_form({li.E(0), li.F(0)})) == 2);
    CHECK(phi.value(li, mono(0, 3, 0)) == 8);

    // Bilinearity in v.
    auto M = verma(U, {-3}, 5);
    int k = M.find({-5});
    QVec xi{Q(2)};
    auto lhs = matrix_element(M, k, xi, k, {rat(3, 2)}, 5);
    auto rhs = matrix_element(M, k, xi, k, {Q(1)}, 5).scaled(rat(3, 2));
    CHECK(lhs == rhs);

    // Tensor products multiply.
    auto L1 = simple_module(g, {1}, 4);
    auto T = tensor_product(L1, L1);
    int t = T.find({2});
    auto prod = matrix_element(T, t, {Q(1)}, t, {Q(1)}, 4);
    auto one = matrix_element(L1, L1.find({1}), {Q(1)}, L1.find({1}), {Q(1)}, 4);
    CHECK(prod == convolve(rs, one, one));
  }

  TEST_CASE("block spaces match the Verma character sum") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    int D = 6;
    for (int lam : {-1, -2, -3, -4}) {
      int top = lam == -1 ? -1 : -lam - 2;
      auto M = block_space(U, lam, D);
      auto dims = M.dims();
      for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j) {
          int kap = top - 2 * i, mu = top - 2 * j;
          int expect = verma_dim(top, kap) * verma_dim(top, mu);
          if (lam != -1) expect += verma_dim(lam, kap) * verma_dim(lam, mu);
          auto it = dims.find({Weight{kap}, Weight{mu}});
          CHECK((it == dims.end() ? 0 : it->second) == expect);
        }
      auto mult = peel_sl2(sl2_table(dims), top, D);
      CHECK(total(mult) == (lam == -1 ? 1 : 5));
      if (lam != -1) {
        // [M : L_x* (x) L_y] = [P_y : L_x].
        CHECK(mult[{top, top}] == 1);
        CHECK(mult[{top, lam}] == 1);
        CHECK(mult[{lam, top}] == 1);
        CHECK(mult[{lam, lam}] == 2);
      }
    }
  }

  TEST_CASE("block spaces are saturated by the projective") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    int D = 5;
    auto M = block_space(U, -4, D);
    CHECK(contains(M, matrix_elements_of(verma(U, {2}, D), D)));
    // Same bottom weight as the block window.
    CHECK(contains(M, matrix_elements_of(verma(U, {-4}, D - 3), D)));
    CHECK(contains(M, matrix_elements_of(contragredient_verma(U, {2}, D), D)));
    CHECK(contains(M, matrix_elements_of(simple_module(g, {2}, D), D)));
    CHECK_FALSE(contains(M, matrix_elements_of(verma(U, {-3}, D), D)));
    auto again = span_sum(M, matrix_elements_of(verma(U, {2}, D), D));
    CHECK(again.dims() == M.dims());
    // No truncation leakage: a deeper computation agrees on the shared window.
    auto deeper = block_space(U, -4, D + 2).dims();
    for (const auto& [k, d] : M.dims()) CHECK(deeper.at(k) == d);
  }

  TEST_CASE("peeling characters") {
    SlTable t;
    // ch L_1* (x) L_-3 on the window top 1, depth 3.
    for (int x : {1, -1})
      for (int y : {-3, -5}) t[{x, y}] = 1;
    auto m = peel_sl2(t, 1, 3);
    CHECK(m.size() == 1);
    CHECK(m[{1, -3}] == 1);
    SlTable bad{{{1, 1}, -1}};
    CHECK_THROWS(peel_sl2(bad, 1, 2));
  }

  TEST_CASE("kernel of the matrix element map") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    for (int lam : {-2, -3}) {
      auto r = kernel_vs_ideal_sl2(U, lam, 6);
      int top = -lam - 2;
      CHECK(r.ideal_in_kernel);
      CHECK(r.equal_everywhere);
      // 9 constituents of P* (x) P minus the 5 of M_lambda.
      CHECK(r.constituent_count == 4);
      CHECK(r.constituent_types == 3);
      CHECK(r.constituents[{lam, lam}] == 2);
      CHECK(r.constituents[{top, lam}] == 1);
      CHECK(r.constituents[{lam, top}] == 1);
    }
    auto s = kernel_vs_ideal_sl2(U, -1, 6);
    CHECK(s.equal_everywhere);
    CHECK(s.kernel_dims.empty());
  }

  TEST_CASE("Loewy filtration and rigidity") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    for (int lam : {-2, -4}) {
      int top = -lam - 2;
      auto r = loewy_filtration_sl2(U, lam, 6);
      CHECK(r.loewy_length == 3);
      CHECK(r.layer_sizes == std::vector<long long>{2, 2, 1});
      using M = std::map<std::pair<int, int>, long long>;
      CHECK(r.layers[0] == M{{{lam, lam}, 1}, {{top, top}, 1}});
      CHECK(r.layers[1] == M{{{lam, top}, 1}, {{top, lam}, 1}});
      CHECK(r.layers[2] == M{{{lam, lam}, 1}});
      CHECK(r.socle_matches);
      CHECK(r.radical_matches);
      CHECK(r.rigid());
      CHECK(r.filtration.back().dims() == block_space(U, lam, 6).dims());
    }
    CHECK_THROWS(loewy_filtration_sl2(U, -1, 4));
  }

  TEST_CASE("endomorphisms of the projective generator") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    for (int lam : {-2, -4}) {
      auto A = endo_algebra_sl2(U, lam, 6);
      CHECK(A.dim == 5);
      CHECK(A.graded_dims == std::vector<int>{2, 2, 1});
      CHECK(A.q_nonzero);
      CHECK(A.q_squared_zero);
      CHECK(A.tau_iota_zero);
      CHECK(A.q_is_iota_tau);
    }
    auto s = endo_algebra_sl2(U, -1, 6);
    CHECK(s.dim == 1);
  }

  TEST_CASE("tensor product over the endomorphism algebra") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    for (int lam : {-2, -3}) {
      auto r = koszul_tensor_check_sl2(U, lam, 6);
      CHECK(r.dims_match);
      CHECK(r.cross_terms_vanish);
      CHECK(r.reduces_to_projective);
    }
  }

  TEST_CASE("modules generated by a functional") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    int D = 5;
    // Highest weight pairing on M_2: the exponential e^2, generating L_2.
    auto M2 = verma(U, {2}, D);
    int top = M2.find({2});
    CHECK(matrix_element(M2, top, {Q(1)}, top, {Q(1)}, D) == exponential(rs, {2}, D));
    auto G = functional_generated_module(M2, top, {Q(1)}, top, {Q(1)}, D);
    CHECK(G.recovers_phi);
    CHECK(G.module.character() == std::map<Weight, int>{{{2}, 1}, {{0}, 1}, {{-2}, 1}});
    // Antidominant: the whole Verma module.
    auto Mm = verma(U, {-3}, D);
    int t = Mm.find({-3});
    auto H = functional_generated_module(Mm, t, {Q(1)}, t, {Q(1)}, D);
    CHECK(H.recovers_phi);
    CHECK(H.module.character() == Mm.character());
    // Starting lower in M_2 gives the submodule through the singular vector.
    int low = M2.find({-4});
    auto K = functional_generated_module(M2, low, {Q(1)}, low, {Q(1)}, D);
    CHECK(K.recovers_phi);
    for (const auto& [w, d] : K.module.character()) CHECK(w[0] <= -4);
    auto L0 = simple_module(g, {0}, D);
    auto T = functional_generated_module(L0, 0, {Q(1)}, 0, {Q(1)}, D);
    CHECK(T.module.total_dim() == 1);
    CHECK(T.recovers_phi);
  }
}
