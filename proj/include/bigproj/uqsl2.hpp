#pragma once

// The small quantum group u_q(sl2) at a primitive odd ell-th root of unity q,
// over Q(q). Modules are stored by K-weight: V[w] is the q^w eigenspace of K,
// w in Z / ell, with E : V[w] -> V[w + 2] and F : V[w] -> V[w - 2].

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bigproj/cyclotomic.hpp"
#include "bigproj/linalg.hpp"

namespace bigproj {

using CMatrix = Matrix<Cyc>;
using CVec = Vec<Cyc>;

class UqContext {
 public:
  explicit UqContext(int ell);
  int ell() const { return ell_; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  Cyc qpow(int k) const;
  Cyc qint(int n) const;  // [n] = (q^n - q^-n) / (q - q^-1)
  Cyc casimir_value(int mu) const;  // (q^(mu+1) + q^-(mu+1)) / (q - q^-1)^2
  int mod(int w) const { return ((w % ell_) + ell_) % ell_; }

 private:
  int ell_;
  std::shared_ptr<const CyclotomicField> field_;
};

struct UqModule {
  std::string name;
  std::vector<int> dims;     // per weight residue
  std::vector<CMatrix> E, F; // E[w] : V[w] -> V[w+2], F[w] : V[w] -> V[w-2]
  int dim() const;
};

UqModule simple_uq(const UqContext& C, int mu);
// Z(mu) = u (x)_{u>=0} C_mu, dimension ell.
UqModule baby_verma_uq(const UqContext& C, int mu);
// Twist by E -> F, F -> E, K -> K^-1.
UqModule twist_omega(const UqContext& C, const UqModule& V);
// The left ideal u e_mu, e_mu the idempotent of K = q^mu; projective of dim ell^2.
UqModule weight_ideal_uq(const UqContext& C, int mu);
// Casimir block of u e_mu at the value of L_mu: the projective cover of L_mu.
UqModule projective_uq(const UqContext& C, int mu);

// K E K^-1 = q^2 E and K F K^-1 = q^-2 F hold by construction; this checks
// [E, F] = (K - K^-1) / (q - q^-1) and E^ell = F^ell = 0.
bool check_uq_relations(const UqContext& C, const UqModule& V);

using UqMap = std::vector<CMatrix>;  // per weight, V[w] -> W[w]
std::vector<UqMap> hom_uq(const UqModule& V, const UqModule& W);

// Layers of the socle filtration, top first: multiplicity of L_x per layer.
std::vector<std::map<int, int>> socle_layers_uq(const UqContext& C, const UqModule& V);

// Regular orbits {mu, ell - mu - 2} for mu = 0..(ell-3)/2, then {ell - 1}.
std::vector<std::vector<int>> block_orbits(int ell);

struct UqEndo {
  int dim = 0;
  std::vector<int> graded_dims;  // from the radical filtration of the algebra
  bool radical_cubed_zero = false;
};
// End of the sum of the projectives of the block of mu.
UqEndo endo_algebra_uq(const UqContext& C, int mu);

using UqLayer = std::map<std::pair<int, int>, int>;  // (x, y) -> mult of L_x* (x) L_y

struct UqBlockDual {
  std::vector<int> orbit;
  int dim = 0;                       // rank of the matrix elements of the block
  int tensor_dim = 0;                // dim P* (x)_A P
  std::vector<UqLayer> layers;       // matrix element filtration by Loewy length
  std::vector<int> layer_dims;
  bool kernel_checked = false;
  bool kernel_ok = false;            // ker Phi = A-relation span per bidegree
};

struct UqDualReport {
  int ell = 0;
  std::vector<UqBlockDual> blocks;
  int total = 0;       // sum of block dims
  int union_rank = 0;  // rank of all matrix elements together
};
UqDualReport block_dual_dims(int ell, bool check_kernel);

// The layers predicted for a block: (a^2 + b^2), 4ab, (a^2 + b^2) for a regular
// orbit with a = mu + 1, b = ell - mu - 1, and one layer for the Steinberg block.
std::vector<UqLayer> expected_dual_layers(const std::vector<int>& orbit);

}  // namespace bigproj
