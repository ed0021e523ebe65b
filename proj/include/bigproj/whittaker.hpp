#pragma once

// Whittaker vectors on completions of truncated modules, the Whittaker reduction
// of the big-cell model, and the resulting realization of big projectives.
//
// Sign convention: a function psi on the big cell is left-Whittaker of type eta
// when rho1(f_i) psi = -eta_i psi and rho1(f_beta) psi = 0 for nonsimple beta.
// With this sign the solution is tau(x) = exp(sum_i eta_i x_{alpha_i}).

#include <functional>
#include <string>
#include <vector>

#include "bigproj/bigcell.hpp"
#include "bigproj/cat_o.hpp"

namespace bigproj {

struct WhittakerCharacter {
  std::vector<Q> eta;
  int sign = +1;  // +1: e_i acts by eta_i; -1: f_i acts by eta_i
  bool nonsingular() const;
};

// Components per weight index of the depth-D module.
struct CompletedVector {
  int depth = 0;
  std::vector<QVec> comps;
};

struct WhittakerCertificate {
  int depth = 0;
  int lookahead = 0;  // solutions were computed at depth + lookahead
  std::size_t dim = 0;
};

// Solutions of (X_i - eta_i) v = 0 and X_beta v = 0 (beta nonsimple) in the
// completion, projected to the depth-D window. Solutions are computed on deeper
// windows until the projection stabilises; throws "increase the depth" if it
// does not. With completed = false the solutions must be supported in the window.
std::vector<CompletedVector> whittaker_space(const std::function<WeightModule(int)>& V,
                                             const WhittakerCharacter& chi, int depth,
                                             bool completed = true,
                                             WhittakerCertificate* cert = nullptr);

// Polynomial solutions in x of the left-Whittaker system, x-height <= depth.
std::vector<BigCellPoly> left_whittaker_solutions(const BigCell& bc, const std::vector<Q>& eta,
                                                  int depth);
// The unique solution with constant term 1.
BigCellPoly tau(const BigCell& bc, const std::vector<Q>& eta, int depth);

// rho2 on functions phi(y, z) tau(x), one operator per Lie basis element.
std::vector<DiffOp> realized_whittaker_action(const BigCell& bc, const std::vector<Q>& eta);

bool check_brackets(const LieAlgebra& g, const CellLayout& L, const std::vector<DiffOp>& ops);
bool check_serre(const LieAlgebra& g, const CellLayout& L, const std::vector<DiffOp>& ops);
// PBW element applied through an operator table, rightmost factor first.
BigCellPoly apply_ops(const CellLayout& L, const std::vector<DiffOp>& ops, const UElement& u,
                      const BigCellPoly& p);

// Generalised Casimir eigenspace at chi_lambda inside C[z^P] (x) C[y] under the
// realized action, on the window below the dominant element of the dot orbit.
WeightModule whittaker_block_module(const BigCell& bc, Enveloping& U, const Weight& lambda,
                                    const std::vector<Q>& eta, int depth);

struct BorelWeilReport {
  Weight lambda, top;
  bool character_ok = false;
  bool top_singular = false;
  // q = prod_i f_i^{n_i} with top - lambda = sum n_i alpha_i; coefficient of z^lambda
  // in q z^top, and whether it equals prod eta_i^{n_i} times its value at eta = 1.
  Q witness_coefficient;
  bool witness_ok = false;
  bool quotient_ok = false;  // top filtration quotient ~ contragredient Verma
  bool iso_checked = false;  // sl2 with nonsingular eta only
  bool iso_ok = false;
  std::string iso_note;
  bool passed() const {
    return character_ok && top_singular && witness_ok && quotient_ok && (!iso_checked || iso_ok);
  }
};

// The isomorphism to big_projective_sl2 is searched only for sl2; the quotient
// witness only when check_quotient is set.
BorelWeilReport borel_weil_block(const BigCell& bc, Enveloping& U, const Weight& lambda,
                                 const std::vector<Q>& eta, int depth, bool check_quotient = true);

// Dimension of the Casimir block inside the joint left/right Whittaker functions
// (sl2), computed with the reduced operator on C[z^{+-1}].
struct DoubleWhittaker {
  std::size_t dim = 0;
  std::size_t dim_next = 0;  // same at depth + 1
  std::string toda;          // the reduced Casimir
};
DoubleWhittaker double_whittaker_dim(const BigCell& bc, Enveloping& U, const Weight& lambda,
                                     const Q& eta, const Q& eta_right, int depth);

struct SoergelCheck {
  std::size_t whittaker_dim = 0, hom_dim = 0;
  bool passed() const { return whittaker_dim == hom_dim; }
};
// dim Wh_eta(M) against dim Hom(P_lambda, M), sl2.
SoergelCheck soergel_dim_check(Enveloping& U, const std::function<WeightModule(int)>& M,
                               int lambda, const Q& eta, int depth);

}  // namespace bigproj
