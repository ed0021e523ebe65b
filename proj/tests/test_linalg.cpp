#include <memory>
#include <random>

#include "bigproj/cyclotomic.hpp"
#include "bigproj/linalg.hpp"
#include "doctest.h"

using namespace bigproj;

TEST_SUITE("linalg") {
  TEST_CASE("rational strings always carry a denominator") {
    CHECK(rat_string(Q(3)) == "3/1");
    CHECK(rat_string(rat(-6, 4)) == "-3/2");
    CHECK(parse_rat("-3/2") == Q(-3, 2));
    CHECK_THROWS(parse_rat("x"));
  }

  TEST_CASE("nullspace vectors are annihilated and span the kernel") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + trial % 4, c = 2 + trial % 5;
      QMatrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = dist(rng);
      auto ns = nullspace(m);
      CHECK(ns.rows() + rank(m) == static_cast<std::size_t>(c));
      for (std::size_t k = 0; k < ns.rows(); ++k)
        for (const auto& x : m.apply(ns.row(k))) CHECK(is_zero(x));
    }
  }

  TEST_CASE("coordinate solver reconstructs combinations") {
    std::vector<QVec> basis{{1, 2, 0, 1}, {0, 1, 1, 1}, {3, 0, 0, 1}};
    CoordSolver<Q> s(basis, 4);
    QVec v(4, Q(0));
    for (int j = 0; j < 4; ++j) v[j] = Q(2) * basis[0][j] - basis[1][j] + Q(1, 3) * basis[2][j];
    auto c = s.coords(v);
    REQUIRE(c);
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == -1);
    CHECK((*c)[2] == Q(1, 3));
    CHECK_FALSE(s.coords(QVec{1, 0, 0, 0}));
  }

  TEST_CASE("generalized eigenspace of a Jordan block") {
    QMatrix m(3, 3);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 1) = 2;
    m(2, 2) = 5;
    CHECK(generalized_eigenspace(m, Q(2)).rows() == 2);
    CHECK(generalized_eigenspace(m, Q(5)).rows() == 1);
    CHECK(generalized_eigenspace(m, Q(1)).rows() == 0);
  }

  TEST_CASE("cyclotomic arithmetic") {
    for (int ell : {3, 5, 7, 9}) {
      auto f = std::make_shared<CyclotomicField>(ell);
      Cyc z = Cyc::root_power(f, 1);
      Cyc p = Cyc(1);
      for (int k = 0; k < ell; ++k) p = p * z;
      CHECK(p == Cyc(1));
      // 1 + z + ... + z^{ell-1} = 0 for prime ell
      if (ell == 3 || ell == 5 || ell == 7) {
        Cyc s(0);
        for (int k = 0; k < ell; ++k) s += Cyc::root_power(f, k);
        CHECK(s.zero());
      }
      Cyc a = z + Cyc(Q(3, 2)) * z * z - Cyc(2);
      CHECK(a * a.inverse() == Cyc(1));
      CHECK((a / a) == Cyc(1));
    }
  }

  TEST_CASE("elimination over a cyclotomic field") {
    auto f = std::make_shared<CyclotomicField>(5);
    Cyc z = Cyc::root_power(f, 1);
    Matrix<Cyc> m(2, 3);
    m(0, 0) = z;
    m(0, 1) = Cyc(1);
    m(0, 2) = z * z;
    m(1, 0) = z * z;
    m(1, 1) = z;
    m(1, 2) = z * z * z;
    CHECK(rank(m) == 1);
    auto ns = nullspace(m);
    CHECK(ns.rows() == 2);
  }
}
