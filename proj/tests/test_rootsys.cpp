#include <random>

#include "bigproj/rootsys.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bigproj;

TEST_SUITE("rootsys") {
  TEST_CASE("root counts and Weyl group orders") {
    struct Row {
      const char* label;
      int positive, order;
    };
    for (auto row : {Row{"A1", 1, 2}, Row{"A2", 3, 6}, Row{"B2", 4, 8}, Row{"G2", 6, 12}, Row{"A3", 6, 24}}) {
      RootSystem rs(row.label);
      WeylGroup W(rs);
      CHECK(rs.num_positive() == row.positive);
      CHECK(W.order() == row.order);
      CHECK(W.length(W.longest()) == row.positive);
    }
    CHECK_THROWS(RootSystem("C3"));
  }

  TEST_CASE("A2 positive roots in height order") {
    RootSystem rs("A2");
    CHECK(rs.root(0).weight == Weight{2, -1});
    CHECK(rs.root(1).weight == Weight{-1, 2});
    CHECK(rs.root(2).weight == Weight{1, 1});
    CHECK(rs.root(2).height == 2);
  }

  TEST_CASE("B2 lengths and coroots") {
    RootSystem rs("B2");
    // alpha1 long, alpha2 short; roots a1, a2, a1+a2, a1+2a2
    CHECK(rs.root_length2(0) == 2);
    CHECK(rs.root_length2(1) == 1);
    int k = rs.root_index({1, 1});
    CHECK(rs.root_length2(k) == 1);
    CHECK(rs.root(k).coroot == std::vector<int>{2, 1});
    int l = rs.root_index({1, 2});
    CHECK(rs.root_length2(l) == 2);
    CHECK(rs.root(l).coroot == std::vector<int>{1, 1});
  }

  TEST_CASE("G2 highest root and symmetrised form") {
    RootSystem rs("G2");
    CHECK(rs.root(rs.highest_root()).simple_coords == std::vector<int>{3, 2});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(rs.symmetrizer()[i] * rs.cartan()[i][j] == rs.symmetrizer()[j] * rs.cartan()[j][i]);
    // <beta, beta^vee> = 2 for every root
    for (const auto& pr : rs.positive_roots()) {
      int s = 0;
      for (int i = 0; i < 2; ++i) s += pr.coroot[i] * pr.weight[i];
      CHECK(s == 2);
    }
  }

  TEST_CASE("inverse Cartan matrix converts fundamental weights") {
    for (auto label : {"A1", "A2", "B2", "G2"}) {
      RootSystem rs(label);
      const auto& inv = rs.fundamental_weight_basis_change();
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) {
          Q s = 0;
          for (int k = 0; k < rs.rank(); ++k) s += Q(rs.cartan()[i][k]) * inv(k, j);
          CHECK(s == (i == j ? 1 : 0));
        }
    }
  }

  TEST_CASE("dot action in rank one") {
    RootSystem rs("A1");
    WeylGroup W(rs);
    int s = W.from_word({0});
    CHECK(W.dot(s, Weight{-4}) == Weight{2});
    CHECK(W.dot(s, Weight{-1}) == Weight{-1});
    CHECK(l_lambda(W, Weight{-1}) == 0);
    CHECK(l_lambda(W, Weight{-2}) == 1);
  }

  TEST_CASE("Bruhat order agrees with reflection chains") {
    for (auto label : {"A1", "A2", "B2", "G2", "A3"}) {
      RootSystem rs(label);
      WeylGroup W(rs);
      auto oracle_le = oracle::bruhat_by_reflections(W);
      for (int x = 0; x < W.order(); ++x)
        for (int y = 0; y < W.order(); ++y) CHECK(W.bruhat_leq(x, y) == oracle_le[x][y]);
    }
  }

  TEST_CASE("random words act like composed reflections") {
    std::mt19937 rng(11);
    for (auto label : {"A2", "B2", "G2"}) {
      RootSystem rs(label);
      WeylGroup W(rs);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> word;
        int len = trial % 9;
        for (int k = 0; k < len; ++k) word.push_back(rng() % 2);
        Weight lambda{static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3};
        Weight direct = lambda;
        for (auto it = word.rbegin(); it != word.rend(); ++it) direct = rs.reflect(*it, direct);
        int w = W.from_word(word);
        CHECK(W.act(w, lambda) == direct);
        CHECK(W.length(w) <= len);
        CHECK((W.length(w) - len) % 2 == 0);
        // canonical word reproduces the element
        CHECK(W.from_word(W.element(w).reduced_word) == w);
        CHECK(W.multiply(w, W.inverse(w)) == W.identity());
      }
    }
  }

  TEST_CASE("orbit data and stabilisers") {
    RootSystem rs("A2");
    WeylGroup W(rs);
    auto reg = orbit_data(W, Weight{-2, -2});
    CHECK(reg.orbit.size() == 6);
    CHECK(reg.stabilizer.size() == 1);
    CHECK(reg.orbit.front() == Weight{-2, -2});
    CHECK(reg.orbit.back() == Weight{0, 0});
    auto sing = orbit_data(W, Weight{-1, -2});
    CHECK(sing.orbit.size() == 3);
    CHECK(sing.stabilizer.size() == 2);
    for (std::size_t k = 0; k < sing.coset_reps.size(); ++k)
      CHECK(W.dot(sing.coset_reps[k], sing.lambda) == sing.orbit[k]);
    CHECK(l_lambda(W, Weight{-1, -1}) == 0);
    CHECK(l_lambda(W, Weight{-1, -2}) == 2);
    CHECK(rs.is_regular_antidominant(Weight{-2, -2}));
    CHECK_FALSE(rs.is_regular_antidominant(Weight{-1, -2}));
  }
}
