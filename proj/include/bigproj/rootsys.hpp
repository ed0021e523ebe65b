#pragma once

// Root data, Weyl group and dot action for the rank <= 2 systems A1, A2, B2, G2.
// Weights are integer vectors in the basis of fundamental weights.

#include <map>
#include <string>
#include <vector>

#include "bigproj/linalg.hpp"

namespace bigproj {

using Weight = std::vector<int>;
using IMatrix = std::vector<std::vector<int>>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(int k, const Weight& a);
std::string weight_string(const Weight& w);

struct PositiveRoot {
  std::vector<int> simple_coords;  // coefficients on simple roots
  Weight weight;                   // fundamental-weight coordinates
  int height = 0;
  std::vector<int> coroot;         // coefficients on simple coroots
};

class RootSystem {
 public:
  // label is one of "A1", "A2", "B2", "G2".
  explicit RootSystem(const std::string& label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  // cartan()[i][j] = <alpha_j, h_i>, so column j holds alpha_j.
  const IMatrix& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  const PositiveRoot& root(int k) const { return positive_.at(k); }
  Weight simple_root(int i) const;
  int simple_index(int i) const { return simple_index_.at(i); }
  // Index of a positive root given by its simple coordinates, or -1.
  int root_index(const std::vector<int>& simple_coords) const;
  int root_index_of_weight(const Weight& w) const;
  int highest_root() const;

  // Inverse Cartan matrix: fundamental weight -> simple-root coordinates.
  const QMatrix& fundamental_weight_basis_change() const { return inv_cartan_; }

  // (alpha_i, alpha_i) / 2 with the shortest simple root normalised to 1.
  const std::vector<int>& symmetrizer() const { return d_; }
  // Invariant form on weights, normalised so long roots have squared length 2.
  Q form(const Weight& a, const Weight& b) const;
  Q root_length2(int k) const;

  Weight rho() const { return Weight(rank_, 1); }
  int pairing(const Weight& w, int i) const { return w.at(i); }

  // Simple-root coordinates of a weight in the root lattice, else throws.
  std::vector<int> root_coords(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const;
  // True when a - b is a nonnegative integer combination of simple roots.
  bool leq(const Weight& b, const Weight& a) const;
  int height(const Weight& w) const;  // height of an element of the root lattice

  bool is_dominant(const Weight& w) const;
  // Dot-antidominant integral weights: every coordinate <= -1.
  bool is_antidominant(const Weight& w) const;
  bool is_regular_antidominant(const Weight& w) const;

  Weight reflect(int i, const Weight& w) const;

 private:
  std::string label_;
  int rank_ = 0;
  IMatrix cartan_;
  std::vector<PositiveRoot> positive_;
  std::vector<int> simple_index_;
  std::vector<int> d_;
  QMatrix inv_cartan_;
  QMatrix gram_;  // form on fundamental weights
  std::map<std::vector<int>, int> lookup_;
};

struct WeylElement {
  int index = 0;
  std::vector<int> reduced_word;  // w = s_{w[0]} s_{w[1]} ...
  int length = 0;
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const WeylElement& element(int idx) const { return elements_.at(idx); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  int identity() const { return 0; }
  int longest() const { return longest_; }

  int from_word(const std::vector<int>& word) const;
  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_.at(a); }
  int left_simple(int i, int w) const { return left_.at(i).at(w); }
  int right_simple(int i, int w) const { return right_.at(i).at(w); }
  int length(int w) const { return elements_.at(w).length; }
  const IMatrix& matrix(int w) const { return matrices_.at(w); }

  Weight act(int w, const Weight& lambda) const;
  Weight dot(int w, const Weight& lambda) const;

  bool bruhat_leq(int x, int y) const { return below_.at(y).at(x); }

 private:
  const RootSystem* rs_;
  std::vector<WeylElement> elements_;
  std::vector<IMatrix> matrices_;
  std::map<IMatrix, int> lookup_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<int> inverse_;
  std::vector<std::vector<bool>> below_;  // below_[y][x] == (x <= y)
  int longest_ = 0;
};

struct OrbitData {
  Weight lambda;
  std::vector<Weight> orbit;       // w.lambda for w in coset_reps, same order
  std::vector<int> coset_reps;     // minimal length representatives
  std::vector<int> stabilizer;     // elements fixing lambda under the dot action
};

// Orbit of lambda under the dot action, reps sorted by length then word.
OrbitData orbit_data(const WeylGroup& W, const Weight& lambda);

// Minimal length of w with w.lambda == w0.lambda.
int l_lambda(const WeylGroup& W, const Weight& lambda);

}  // namespace bigproj
