#pragma once

// Truncated weight modules: finitely many weight spaces with explicit matrices
// for root vectors. The Lie algebra basis is indexed as
//   F_k = k,  H_i = m + i,  E_k = m + r + k
// where m is the number of positive roots (in RootSystem order) and r the rank.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigproj/rootsys.hpp"

namespace bigproj {

struct LieIndex {
  int m = 0, r = 0;
  explicit LieIndex(const RootSystem& rs) : m(rs.num_positive()), r(rs.rank()) {}
  int size() const { return 2 * m + r; }
  int F(int k) const { return k; }
  int H(int i) const { return m + i; }
  int E(int k) const { return m + r + k; }
  bool is_F(int g) const { return g < m; }
  bool is_H(int g) const { return g >= m && g < m + r; }
  bool is_E(int g) const { return g >= m + r; }
  int root_of(int g) const { return is_F(g) ? g : g - m - r; }
};

// Weight of a Lie basis element.
Weight generator_weight(const RootSystem& rs, int g);

class WeightModule {
 public:
  WeightModule() = default;
  WeightModule(const RootSystem& rs, std::string name);

  const RootSystem& rs() const { return *rs_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int add_weight(const Weight& mu, int dim);
  int find(const Weight& mu) const;
  int num_weights() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(int k) const { return weights_.at(k); }
  int dim(int k) const { return dims_.at(k); }
  int dim_at(const Weight& mu) const;
  int total_dim() const;

  // Target weight index of generator g from weight k, or -1 outside the window.
  int target(int g, int k) const;
  bool has_op(int g, int k) const;
  const QMatrix& op(int g, int k) const;
  void set_op(int g, int k, QMatrix m);
  // Apply generator g (including Cartan elements) to v in weight k. An empty
  // vector means the target weight space is zero; nullopt means the result is
  // not determined by the truncation.
  std::optional<QVec> apply(int g, int k, const QVec& v) const;
  // Apply a word of generators, rightmost first.
  std::optional<QVec> apply_word(const std::vector<int>& word, int k, const QVec& v,
                                 int* out_k) const;

  std::map<Weight, int> character() const;

  // Window description used by truncation-aware algorithms.
  Weight top;
  int depth = 0;
  bool lowest_type = false;  // window grows upward from `top` (a lowest weight)

  // Whether weight mu lies in the module's window (regardless of being stored).
  bool in_window(const Weight& mu) const;
  // Below the truncation (above it for lowest-type windows): contents unknown.
  bool beyond_window(const Weight& mu) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::string name_;
  std::vector<Weight> weights_;
  std::vector<int> dims_;
  std::map<Weight, int> index_;
  std::map<std::pair<int, int>, QMatrix> ops_;
};

// Restriction to a family of subspaces (rows = basis vectors), one per weight.
// Throws if the family is not stable under the stored root vectors.
WeightModule submodule(const WeightModule& V, const std::vector<std::vector<QVec>>& basis,
                       const std::string& name);
// Quotient V / S for a stable family S.
WeightModule quotient(const WeightModule& V, const std::vector<std::vector<QVec>>& sub,
                      const std::string& name);

// Check the defining relations of the simple generators on every weight where
// all terms are available: [e_i, f_j] = delta_ij h_i.
bool check_simple_relations(const WeightModule& V);

}  // namespace bigproj
