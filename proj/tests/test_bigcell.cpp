#include <random>

#include "bigproj/bigcell.hpp"
#include "bigproj/cat_o.hpp"
#include "doctest.h"

using namespace bigproj;

namespace {

using PolyMat = std::vector<std::vector<BigCellPoly>>;

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  std::size_t n = a.size();
  int nv = a[0][0].nvars();
  PolyMat c(n, std::vector<BigCellPoly>(n, BigCellPoly(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// ad(x) in the Chevalley basis, read from the bracket table.
QMatrix ad_matrix(const LieAlgebra& g, int x) {
  QMatrix M(g.dim(), g.dim());
  for (int b = 0; b < g.dim(); ++b)
    for (auto [t, c] : g.bracket(x, b)) M(t, b) += c;
  return M;
}

PolyMat constant(const QMatrix& M, int nv) {
  PolyMat P(M.rows(), std::vector<BigCellPoly>(M.cols(), BigCellPoly(nv)));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) P[i][j] = BigCellPoly::constant(nv, M(i, j));
  return P;
}

// exp(s * ad x) with s the given coordinate variable.
PolyMat exp_ad(const LieAlgebra& g, int x, int var, int nv) {
  QMatrix A = ad_matrix(g, x);
  std::size_t n = A.rows();
  PolyMat E = constant(QMatrix::identity(n), nv);
  QMatrix P = QMatrix::identity(n);
  Q fact = 1;
  for (int j = 1; j <= static_cast<int>(n); ++j) {
    P = P * A;
    if (P.is_zero_matrix()) break;
    fact *= j;
    PolyMono e(nv, 0);
    e[var] = j;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!is_zero(P(a, b))) E[a][b] += BigCellPoly::monomial(e, P(a, b) / fact);
  }
  return E;
}

// The big-cell element in the adjoint representation.
PolyMat group_element(const BigCell& bc) {
  const auto& g = bc.lie();
  const auto& L = bc.layout();
  const auto& li = g.index();
  int nv = L.nvars();
  PolyMat G = constant(QMatrix::identity(g.dim()), nv);
  for (int k = L.m - 1; k >= 0; --k) G = mat_mul(G, exp_ad(g, li.F(k), L.x(k), nv));
  PolyMat T = constant(QMatrix(g.dim(), g.dim()), nv);
  for (int b = 0; b < g.dim(); ++b) {
    Weight w = generator_weight(g.rs(), b);
    PolyMono e(nv, 0);
    for (int i = 0; i < L.r; ++i) e[L.z(i)] = w[i];
    T[b][b] = BigCellPoly::monomial(e);
  }
  G = mat_mul(G, T);
  for (int k = 0; k < L.m; ++k) G = mat_mul(G, exp_ad(g, li.E(k), L.y(k), nv));
  return G;
}

DiffOp field(const BigCell& bc, std::initializer_list<std::pair<int, BigCellPoly>> terms) {
  DiffOp d(bc.layout().nvars());
  for (const auto& [v, p] : terms) d.field[v] = p;
  return d;
}

}  // namespace

TEST_SUITE("bigcell") {
  TEST_CASE("coordinates") {
    RootSystem a1("A1"), a2("A2"), g2("G2");
    LieAlgebra la1(a1), la2(a2), lg2(g2);
    CHECK(BigCell(la1).coordinate_order() == std::vector<std::string>{"x1", "z1", "y1"});
    CHECK(BigCell(la2).coordinate_order() ==
          std::vector<std::string>{"x11", "x01", "x10", "z1", "z2", "y10", "y01", "y11"});
    CHECK(BigCell(lg2).layout().nvars() == 14);
  }

  TEST_CASE("sl2 regular actions in closed form") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    BigCell bc(g);
    const auto& L = bc.layout();
    LieIndex li(rs);
    auto x = [&](int p) { return bc.monomial({p}, {0}, {0}); };
    auto y = [&](int p) { return bc.monomial({0}, {0}, {p}); };
    auto one = x(0);
    auto zm2 = bc.monomial({0}, {-2}, {0});
    CHECK(bc.rho(2, li.E(0)) == field(bc, {{L.y(0), one}}));
    CHECK(bc.rho(2, li.H(0)) == field(bc, {{L.z(0), one}, {L.y(0), y(1).scaled(Q(-2))}}));
    CHECK(bc.rho(2, li.F(0)) ==
          field(bc, {{L.y(0), y(2).scaled(Q(-1))}, {L.z(0), y(1)}, {L.x(0), zm2}}));
    CHECK(bc.rho(1, li.F(0)) == field(bc, {{L.x(0), one.scaled(Q(-1))}}));
    CHECK(bc.rho(1, li.H(0)) == field(bc, {{L.z(0), one.scaled(Q(-1))}, {L.x(0), x(1).scaled(Q(2))}}));
    CHECK(bc.rho(1, li.E(0)) == field(bc, {{L.x(0), x(2)},
                                           {L.z(0), x(1).scaled(Q(-1))},
                                           {L.y(0), zm2.scaled(Q(-1))}}));
    CHECK(bc.rho(2, li.F(0)).str(bc.names(), L) ==
          "(z1^-2)*d/dx1 + (y1)*z1*d/dz1 + (-y1^2)*d/dy1");
  }

  TEST_CASE("vector fields agree with the adjoint group element") {
    for (auto label : {"A1", "A2", "B2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      BigCell bc(g);
      const auto& L = bc.layout();
      PolyMat G = group_element(bc);
      for (int a = 0; a < g.dim(); ++a) {
        PolyMat right = mat_mul(G, constant(ad_matrix(g, a), L.nvars()));
        PolyMat left = mat_mul(constant(ad_matrix(g, a).scaled(Q(-1)), L.nvars()), G);
        for (int i = 0; i < g.dim(); ++i)
          for (int j = 0; j < g.dim(); ++j) {
            CHECK(bc.rho(2, a).apply(L, G[i][j]) == right[i][j]);
            CHECK(bc.rho(1, a).apply(L, G[i][j]) == left[i][j]);
          }
      }
    }
  }

  TEST_CASE("operator identities") {
    for (auto label : {"A1", "A2", "B2", "G2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      BigCell bc(g);
      CHECK(bc.check_homomorphism(1));
      CHECK(bc.check_homomorphism(2));
      CHECK(bc.check_commuting());
      CHECK(bc.check_serre(1));
      CHECK(bc.check_serre(2));
      CHECK(bc.check_transposition());
    }
  }

  TEST_CASE("structure polynomials") {
    RootSystem a1("A1");
    LieAlgebra g1(a1);
    BigCell b1(g1);
    auto t1 = b1.structure_tables(2);
    for (const auto* tab : {&t1.p, &t1.q, &t1.r, &t1.s}) CHECK((*tab)[0].empty());
    CHECK(b1.structure_tables(1) == t1);

    for (auto label : {"A2", "B2", "G2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      BigCell bc(g);
      auto t2 = bc.structure_tables(2);
      CHECK(bc.structure_tables(1) == t2);
      const auto& L = bc.layout();
      // h acts by the Euler field of the right weight.
      for (int i = 0; i < rs.rank(); ++i)
        for (int k = 0; k < rs.num_positive(); ++k) {
          if (k == rs.simple_index(i)) continue;
          PolyMono e(L.nvars(), 0);
          e[L.y(k)] = 1;
          int c = rs.root(k).weight[i];
          BigCellPoly expect = c ? BigCellPoly::monomial(e, Q(-c)) : BigCellPoly(L.nvars());
          auto it = t2.q[i].find(k);
          CHECK((it == t2.q[i].end() ? BigCellPoly(L.nvars()) : it->second) == expect);
        }
    }

    RootSystem a2("A2");
    LieAlgebra g2(a2);
    BigCell bc(g2);
    auto t = bc.structure_tables(2);
    const auto& L = bc.layout();
    // p_{1, a1+a2} is +-y_{a2}.
    REQUIRE(t.p[0].count(2));
    const auto& p = t.p[0].at(2);
    REQUIRE(p.terms().size() == 1);
    PolyMono e(L.nvars(), 0);
    e[L.y(1)] = 1;
    CHECK(p.terms().begin()->first == e);
    CHECK(abs(p.terms().begin()->second) == 1);
    CHECK(t.q[0].size() == 2);
  }

  TEST_CASE("sl2 block tables") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    for (int lam : {-1, -2, -3, -4}) {
      auto T = block_table_sl2(bc, U, lam, 6);
      // Independent count: one dimension per orbit weight mu dominating both entries.
      std::map<std::pair<int, int>, int> expect;
      std::vector<int> orbit{lam};
      if (lam != -1) orbit.push_back(-lam - 2);
      for (int k1 = 0; k1 <= 6; ++k1)
        for (int k2 = 0; k2 <= 6; ++k2) {
          int b1 = T.top - 2 * k1, b2 = T.top - 2 * k2;
          int d = 0;
          for (int mu : orbit)
            if (b1 <= mu && b2 <= mu && (mu - b1) % 2 == 0) ++d;
          if (d) expect[{b1, b2}] = d;
        }
      CHECK(T.dims == expect);
      CHECK(expected_block_table_sl2(lam, 6).dims == expect);
    }
    CHECK(block_table_sl2(bc, U, -4, 6).dims.at({-4, -4}) == 2);
    CHECK(block_table_sl2(bc, U, -4, 6).dims.at({2, 2}) == 1);
    CHECK_THROWS(block_table_sl2(bc, U, 0, 3));
  }

  TEST_CASE("flag variety quotients") {
    RootSystem a1("A1");
    LieAlgebra g1(a1);
    Enveloping U1(g1);
    BigCell b1(g1);
    for (int lam : {0, 3, -3}) CHECK(flag_quotient_check(b1, U1, {lam}, 6).passed());
    auto X = flag_module(b1, {0}, 1, 6);
    CHECK(X.lowest_type);
    RootSystem a2("A2");
    LieAlgebra g2(a2);
    Enveloping U2(g2);
    BigCell b2(g2);
    CHECK(flag_quotient_check(b2, U2, {-2, -2}, 4).passed());
    CHECK(flag_quotient_check(b2, U2, {1, 0}, 4).passed());
  }

  TEST_CASE("theta on simple functions") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    BigCell bc(g);
    LieIndex li(rs);
    auto one = theta(bc, bc.monomial({0}, {0}, {0}), 4);
    CHECK(one == counit(rs, 4));
    CHECK(one.value(li, Monomial{0, 0, 0}) == 1);
    CHECK(one.value(li, Monomial{0, 1, 0}) == 0);
    CHECK(one.value(li, Monomial{0, 3, 0}) == 0);
    auto zl = theta(bc, bc.monomial({0}, {-3}, {0}), 4);
    CHECK(zl.value(li, Monomial{0, 1, 0}) == -3);
    CHECK(zl.value(li, Monomial{0, 2, 0}) == 9);
    auto y = theta(bc, bc.monomial({0}, {0}, {1}), 4);
    CHECK(y.value(li, Monomial{0, 0, 1}) == 1);
    CHECK(y.value(li, Monomial{1, 0, 0}) == 0);
  }

  TEST_CASE("theta is injective, multiplicative and intertwining") {
    for (auto label : {"A1", "A2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      Enveloping U(g);
      BigCell bc(g);
      LieIndex li(rs);
      int D = rs.rank() == 1 ? 5 : 3;
      std::vector<BigCellPoly> sample;
      std::vector<Functional> images;
      auto monos = root_monomials(rs, D);
      for (const auto& a : monos)
        for (const auto& c : monos) {
          if (root_height(rs, a) + root_height(rs, c) > D) continue;
          Weight mu(rs.rank(), 0);
          mu[0] = static_cast<int>(sample.size() % 3) - 1;
          sample.push_back(bc.monomial(a, mu, c));
          images.push_back(theta(bc, sample.back(), D));
        }
      CHECK(functional_rank(images) == images.size());

      std::mt19937 rng(11);
      for (int t = 0; t < 6; ++t) {
        const auto& p1 = sample[rng() % sample.size()];
        const auto& p2 = sample[rng() % sample.size()];
        CHECK(theta(bc, p1 * p2, D) == convolve(rs, theta(bc, p1, D), theta(bc, p2, D)));
      }

      const auto& psi = sample[sample.size() / 2];
      auto big = theta(bc, psi, D + 2);
      for (int x = 0; x < g.dim(); ++x) {
        auto right = theta(bc, bc.rho(2, x).apply(bc.layout(), psi), D);
        auto left = theta(bc, bc.rho(1, x).apply(bc.layout(), psi), D);
        for (const auto& a : root_monomials(rs, 2))
          for (const auto& c : root_monomials(rs, 2)) {
            Monomial u(li.size(), 0);
            for (int k = 0; k < li.m; ++k) {
              u[li.F(k)] = a[k];
              u[li.E(k)] = c[k];
            }
            u[li.H(0)] = 1;
            UElement uu{{u, Q(1)}};
            CHECK(right.value(li, u) == big.value(li, U.multiply(uu, U.generator(x))));
            CHECK(left.value(li, u) == -big.value(li, U.multiply(U.generator(x), uu)));
          }
      }
    }
  }
}
