#pragma once

// Chevalley basis structure constants and PBW normal forms in U(g).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigproj/weight_module.hpp"

namespace bigproj {

using SparseLie = std::vector<std::pair<int, int>>;  // (basis index, coefficient)

class LieAlgebra {
 public:
  explicit LieAlgebra(const RootSystem& rs);

  const RootSystem& rs() const { return *rs_; }
  const LieIndex& index() const { return li_; }
  int dim() const { return li_.size(); }

  const SparseLie& bracket(int a, int b) const { return table_.at(a).at(b); }
  // [e_alpha, e_beta] = N e_{alpha+beta}; 0 when alpha + beta is not a root.
  int N(int alpha, int beta) const;
  // [e_beta, f_beta] as a combination of h_1..h_r.
  std::vector<int> h_of_root(int k) const;

  // e_xi = [e_alpha, e_beta] / divisor for the extraspecial pair of xi.
  struct Construction {
    int alpha = -1, beta = -1, divisor = 1;
  };
  const Construction& construction(int k) const { return construction_.at(k); }

  // Transpose anti-involution: e_k <-> f_k, h fixed.
  int sigma(int g) const;

  // Adjoint representation matrices (on the realisation used to build the table).
  const std::vector<QMatrix>& adjoint_matrices() const { return mats_; }

  bool check_jacobi() const;
  bool check_antisymmetry() const;

  std::string basis_name(int g) const;

 private:
  const RootSystem* rs_;
  LieIndex li_;
  std::vector<std::vector<SparseLie>> table_;
  std::vector<Construction> construction_;
  std::vector<QMatrix> mats_;
};

using Monomial = std::vector<int>;  // exponents, PBW order F < H < E
using UElement = std::map<Monomial, Q>;

void add_into(UElement& acc, const UElement& x, const Q& scale = Q(1));
UElement scale(const UElement& x, const Q& s);

class Enveloping {
 public:
  explicit Enveloping(const LieAlgebra& g);

  const LieAlgebra& lie() const { return *g_; }
  int n() const { return g_->dim(); }

  Monomial unit_monomial() const { return Monomial(n(), 0); }
  UElement one() const;
  UElement generator(int g) const;
  // Generator word of a monomial, left to right.
  std::vector<int> word_of(const Monomial& m) const;

  // g * m in normal form, memoised.
  const UElement& left_mult_gen(int g, const Monomial& m);
  UElement multiply(const UElement& a, const UElement& b);
  UElement normal_form(const std::vector<int>& word);
  UElement commutator(const UElement& a, const UElement& b);
  // Anti-automorphism extending x -> -x.
  UElement antipode(const UElement& u);

  // Rewrite along a random sequence of adjacent swaps; used to test confluence.
  UElement normal_form_random(const std::vector<int>& word, unsigned seed);

  Weight weight_of(const Monomial& m) const;

  // 2FE + H + H^2/2 for A1; throws otherwise.
  UElement casimir_sl2();
  // Quadratic Casimir, normalised to agree with casimir_sl2 on A1.
  UElement quadratic_casimir();
  // Eigenvalue (mu, mu + 2 rho) on a highest weight vector of weight mu.
  Q casimir_eigenvalue(const Weight& mu) const;

 private:
  const LieAlgebra* g_;
  std::map<std::pair<int, Monomial>, UElement> memo_;
};

}  // namespace bigproj
