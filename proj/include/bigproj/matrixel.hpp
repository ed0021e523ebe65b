#pragma once

// Matrix elements Phi_{xi (x) v}(u) = <xi, u v> of truncated modules, block
// spaces of U(g)*, and the sl2 structure theory of the block M_lambda: kernel of
// the matrix element map, Loewy filtrations, endomorphism algebra of the
// projective generator and its tensor-product description.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigproj/cat_o.hpp"
#include "bigproj/functional.hpp"

namespace bigproj {

// xi is a vector of the dual of V[kxi] in the dual basis, v a vector of V[kv].
Functional matrix_element(const WeightModule& V, int kxi, const QVec& xi, int kv, const QVec& v,
                          int depth);

using Bidegree = std::pair<Weight, Weight>;  // (weight of the xi-side, weight of v)

struct MatrixElementSpace {
  std::string provenance;
  int depth = 0;
  std::map<Bidegree, std::vector<Functional>> basis;  // independent per bidegree

  std::map<Bidegree, int> dims() const;
  std::size_t total_dim() const;
};

// All matrix elements of V with both weights in V's window.
MatrixElementSpace matrix_elements_of(const WeightModule& V, int depth);
// Span of both, bidegree by bidegree.
MatrixElementSpace span_sum(const MatrixElementSpace& a, const MatrixElementSpace& b);
// Every functional of b lies in the span of a at the same bidegree.
bool contains(const MatrixElementSpace& a, const MatrixElementSpace& b);

// Multiplicities of L_x^* (x) L_y in an sl2 bigraded character on the window of
// weights top, top - 2, ..., top - 2 depth on both sides.
using SlTable = std::map<std::pair<int, int>, long long>;
std::map<std::pair<int, int>, long long> peel_sl2(SlTable table, int top, int depth);
SlTable sl2_table(const std::map<Bidegree, int>& dims);
long long total(const std::map<std::pair<int, int>, long long>& mult);

// M_lambda for sl2, spanned by the matrix elements of the big projective.
MatrixElementSpace block_space(Enveloping& U, int lambda, int depth);

struct KernelReport {
  bool equal_everywhere = false;
  bool ideal_in_kernel = false;
  SlTable kernel_dims;
  std::map<std::pair<int, int>, long long> constituents;
  long long constituent_count = 0;
  std::size_t constituent_types = 0;
};
// ker Phi on P* (x) P against J = span{ z^* xi (x) v - xi (x) z v }, z in {Omega, Omega^2}.
KernelReport kernel_vs_ideal_sl2(Enveloping& U, int lambda, int depth);

struct LoewyReport {
  std::vector<MatrixElementSpace> filtration;  // M^(1) <= M^(2) <= ...
  std::vector<std::map<std::pair<int, int>, long long>> layers;
  std::vector<long long> layer_sizes;  // constituents per layer
  bool socle_matches = false;          // M^(k) = soc^k
  bool radical_matches = false;        // M^(k) = rad^(L-k)
  int loewy_length = 0;
  bool rigid() const { return socle_matches && radical_matches; }
};
// Regular antidominant lambda. The socle and radical series are computed for M_lambda
// as an sl2 + sl2 module and compared with the matrix element filtration.
LoewyReport loewy_filtration_sl2(Enveloping& U, int lambda, int depth);

struct EndoAlgebra {
  int dim = 0;
  std::vector<int> graded_dims;
  bool q_nonzero = false;
  bool q_squared_zero = false;
  bool q_is_iota_tau = false;  // Q = iota o tau spans the trace-free part of End(P)
  bool tau_iota_zero = false;
};
EndoAlgebra endo_algebra_sl2(Enveloping& U, int lambda, int depth = 6);

struct KoszulReport {
  bool dims_match = false;     // (G* (x)_A G) = M_lambda per bidegree, G = P + M_{s.lambda}
  bool cross_terms_vanish = false;
  bool reduces_to_projective = false;  // every class has a P* (x) P representative
  std::map<Bidegree, int> quotient_dims;
};
KoszulReport koszul_tensor_check_sl2(Enveloping& U, int lambda, int depth);

// The right translates of Phi_{xi (x) v}, as a module: the image of U(g) v under
// w -> Phi_{xi (x) w}. Also returns whether evaluation at 1 recovers phi as a
// matrix element of the generated module.
struct GeneratedModule {
  WeightModule module;
  bool recovers_phi = false;
};
GeneratedModule functional_generated_module(const WeightModule& V, int kxi, const QVec& xi,
                                            int kv, const QVec& v, int depth);

}  // namespace bigproj
