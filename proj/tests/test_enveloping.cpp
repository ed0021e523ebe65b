#include <algorithm>
#include <cstdlib>
#include <random>

#include "bigproj/enveloping.hpp"
#include "doctest.h"

using namespace bigproj;

namespace {

bool is_root(const RootSystem& rs, const Weight& w) {
  return rs.root_index_of_weight(w) >= 0 || rs.root_index_of_weight(Weight(w.size(), 0) - w) >= 0;
}

// Length of the alpha-string through beta below beta.
int string_depth(const RootSystem& rs, int alpha, int beta) {
  int p = 0;
  while (is_root(rs, rs.root(beta).weight - (p + 1) * rs.root(alpha).weight)) ++p;
  return p;
}

Q eigenvalue_on_highest(const UElement& x, const Weight& lambda, const LieIndex& li) {
  Q s = 0;
  for (const auto& [m, c] : x) {
    bool pure = true;
    for (int g = 0; g < li.size(); ++g)
      if (!li.is_H(g) && m[g] != 0) pure = false;
    if (!pure) continue;
    Q t = c;
    for (int i = 0; i < li.r; ++i) t *= rat_pow(Q(lambda[i]), m[li.H(i)]);
    s += t;
  }
  return s;
}

}  // namespace

TEST_SUITE("enveloping") {
  TEST_CASE("Chevalley basis structure constants") {
    for (auto label : {"A1", "A2", "B2", "G2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      const auto& li = g.index();
      CHECK(g.dim() == 2 * rs.num_positive() + rs.rank());
      CHECK(g.check_antisymmetry());
      CHECK(g.check_jacobi());
      for (int k = 0; k < li.m; ++k) {
        CHECK(g.h_of_root(k) == rs.root(k).coroot);
        for (int i = 0; i < li.r; ++i) {
          // [h_i, e_beta] = <beta, h_i> e_beta
          auto br = g.bracket(li.H(i), li.E(k));
          int c = rs.root(k).weight[i];
          if (c == 0) CHECK(br.empty());
          else CHECK(br == SparseLie{{li.E(k), c}});
        }
        for (int l = 0; l < li.m; ++l) {
          int n = g.N(k, l);
          bool sum_is_root = rs.root_index_of_weight(rs.root(k).weight + rs.root(l).weight) >= 0;
          if (!sum_is_root) {
            CHECK(n == 0);
            continue;
          }
          // |N_{alpha,beta}| = p + 1
          CHECK(std::abs(n) == string_depth(rs, k, l) + 1);
        }
      }
    }
  }

  TEST_CASE("A2 brackets") {
    RootSystem rs("A2");
    LieAlgebra g(rs);
    CHECK(g.N(0, 1) == 1);
    CHECK(g.N(1, 0) == -1);
    CHECK(g.h_of_root(2) == std::vector<int>{1, 1});
    CHECK(g.basis_name(g.index().E(2)) == "e11");
  }

  TEST_CASE("transpose anti-involution reverses brackets") {
    for (auto label : {"A2", "B2", "G2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
          SparseLie lhs;
          for (auto [h, c] : g.bracket(a, b)) lhs.push_back({g.sigma(h), c});
          auto rhs = g.bracket(g.sigma(b), g.sigma(a));
          std::sort(lhs.begin(), lhs.end());
          auto rs2 = rhs;
          std::sort(rs2.begin(), rs2.end());
          CHECK(lhs == rs2);
        }
    }
  }

  TEST_CASE("PBW normal form is independent of the rewriting path") {
    std::mt19937 rng(3);
    for (auto label : {"A1", "A2", "B2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      Enveloping U(g);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> word;
        int len = 2 + trial % 4;
        for (int k = 0; k < len; ++k) word.push_back(rng() % g.dim());
        auto nf = U.normal_form(word);
        for (unsigned seed = 1; seed <= 3; ++seed) CHECK(U.normal_form_random(word, seed) == nf);
      }
    }
  }

  TEST_CASE("sl2 Casimir") {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    const auto& li = g.index();
    auto c = U.casimir_sl2();
    Monomial fe{1, 0, 1}, h{0, 1, 0}, hh{0, 2, 0};
    CHECK(c.size() == 3);
    CHECK(c[fe] == 2);
    CHECK(c[h] == 1);
    CHECK(c[hh] == Q(1, 2));
    CHECK(U.quadratic_casimir() == c);
    for (int lam = -6; lam <= 6; ++lam) {
      CHECK(U.casimir_eigenvalue({lam}) == rat(lam * lam + 2 * lam, 2));
      CHECK(eigenvalue_on_highest(c, {lam}, li) == U.casimir_eigenvalue({lam}));
    }
    RootSystem a2("A2");
    LieAlgebra g2(a2);
    Enveloping U2(g2);
    CHECK_THROWS(U2.casimir_sl2());
  }

  TEST_CASE("quadratic Casimir is central with the expected eigenvalues") {
    for (auto label : {"A2", "B2", "G2"}) {
      RootSystem rs(label);
      LieAlgebra g(rs);
      Enveloping U(g);
      auto omega = U.quadratic_casimir();
      for (int x = 0; x < g.dim(); ++x) CHECK(U.commutator(omega, U.generator(x)).empty());
      for (const Weight& mu : {Weight{0, 0}, Weight{1, 0}, Weight{-2, 3}, Weight{-3, -1}})
        CHECK(eigenvalue_on_highest(omega, mu, g.index()) == U.casimir_eigenvalue(mu));
    }
  }
}
