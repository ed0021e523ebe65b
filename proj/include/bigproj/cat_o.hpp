#pragma once

// Modules in category O on truncated weight windows.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bigproj/enveloping.hpp"
#include "bigproj/weight_module.hpp"

namespace bigproj {

// Fill in non-simple root vectors from the simple ones via the Chevalley
// construction, wherever every intermediate weight is available.
void complete_root_vectors(WeightModule& V, const LieAlgebra& g);

// Every bracket relation holds on every weight where all terms are defined.
bool check_all_relations(const WeightModule& V, const LieAlgebra& g);

WeightModule verma(Enveloping& U, const Weight& lambda, int depth);
WeightModule simple_module(const LieAlgebra& g, const Weight& lambda, int depth);
// Same weights, e and f exchanged by transposition.
WeightModule contragredient(const WeightModule& V);
WeightModule contragredient_verma(Enveloping& U, const Weight& lambda, int depth);
// Weights negated, action by minus the transpose; lowest-weight type window.
WeightModule restricted_dual(const WeightModule& V);

WeightModule direct_sum(const WeightModule& A, const WeightModule& B);
// V (windowed) tensor F, where F is finite dimensional and fully stored.
WeightModule tensor_product(const WeightModule& V, const WeightModule& F);

// Action matrix of a weight-zero element of U(g) on weight space k.
std::optional<QMatrix> element_matrix(const WeightModule& V, const UElement& x, int k);

// Generalised eigenspace of a central element, as a submodule.
WeightModule block_component(const WeightModule& V, const UElement& central, const Q& chi,
                             const std::string& name);

// P(lambda) for sl2 and lambda <= -1: the Casimir block of M(-1) tensor L(n),
// n = -lambda - 1, truncated at the given depth below the top weight n - 1.
WeightModule big_projective_sl2(Enveloping& U, int lambda, int depth);

// Joint kernel of the simple e_i on each stored weight space whose e_i targets
// are all known.
struct SingularSpace {
  Weight weight;
  std::vector<QVec> basis;
};
std::vector<SingularSpace> singular_vectors(const WeightModule& V);

// Module homomorphism: one matrix per weight index of the source.
struct ModuleMap {
  std::vector<QMatrix> blocks;   // blocks[k] : V[k] -> W[mu_k] (0 x n if absent)
  std::vector<int> target_index; // index in W of the same weight, or -1
};

std::vector<ModuleMap> hom_space(const WeightModule& V, const WeightModule& W);

struct HomCertificate {
  int depth = 0;
  std::size_t dim_at_depth = 0, dim_at_next = 0;
  bool restriction_injective = false;
  bool stable() const { return dim_at_depth == dim_at_next && restriction_injective; }
};

// Builds both modules at depth and depth + 1 and compares; throws when the
// dimension has not stabilised.
std::vector<ModuleMap> hom_space_certified(const std::function<WeightModule(int)>& V,
                                           const std::function<WeightModule(int)>& W,
                                           int depth, HomCertificate* cert = nullptr);

// Apply a map to a vector of V at weight index k.
QVec apply_map(const ModuleMap& f, int k, const QVec& v);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f, const WeightModule& mid);
ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Q>& coeffs);
// Combinations of the given endomorphisms with zero trace on every weight space.
std::vector<ModuleMap> trace_free_part(const std::vector<ModuleMap>& end, const WeightModule& V);
bool is_zero_map(const ModuleMap& f);
// Invertible on every weight space of the source (and target dims agree).
bool is_isomorphism(const ModuleMap& f, const WeightModule& V, const WeightModule& W);

// Loewy data for sl2 modules.
struct Constituent {
  Weight highest;
  int multiplicity = 0;
  bool operator==(const Constituent& o) const {
    return highest == o.highest && multiplicity == o.multiplicity;
  }
};
using Layer = std::vector<Constituent>;
using Family = std::vector<std::vector<QVec>>;  // basis rows per weight index

struct LoewySeries {
  std::vector<Family> filtration;  // increasing for socles, decreasing for radicals
  std::vector<Layer> layers;       // top first
};

// Socle filtration 0 = S_0 < S_1 < ... with layers listed top first.
LoewySeries socle_series_sl2(const WeightModule& V);
// Radical filtration V = R_0 > R_1 > ..., computed from the socle series of
// the contragredient dual; layers listed top first.
LoewySeries radical_series_sl2(const WeightModule& V);
// Socle and radical filtrations coincide.
bool is_rigid_sl2(const WeightModule& V);

std::string describe_layers(const std::vector<Layer>& layers);

}  // namespace bigproj
