#pragma once

// Polynomial model of functions on the big cell N_- T N_+ and the two regular
// actions of g on it as first-order differential operators.
//
// Variables are laid out as x_1..x_m, z_1..z_r, y_1..y_m with positive roots in
// RootSystem order. The z-part is Laurent and z^mu means prod z_i^{mu_i} for mu
// in fundamental coordinates. The basic derivations are d/dx_b, z_i d/dz_i and
// d/dy_b; they pairwise commute.

#include <map>
#include <string>
#include <vector>

#include "bigproj/enveloping.hpp"
#include "bigproj/functional.hpp"

namespace bigproj {

struct CellLayout {
  int m = 0, r = 0;
  int nvars() const { return 2 * m + r; }
  int x(int b) const { return b; }
  int z(int i) const { return m + i; }
  int y(int b) const { return m + r + b; }
  bool is_z(int v) const { return v >= m && v < m + r; }
};

using PolyMono = std::vector<int>;

class BigCellPoly {
 public:
  BigCellPoly() = default;
  explicit BigCellPoly(int nvars) : n_(nvars) {}
  static BigCellPoly constant(int nvars, const Q& c);
  static BigCellPoly monomial(const PolyMono& e, const Q& c = Q(1));

  int nvars() const { return n_; }
  const std::map<PolyMono, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PolyMono& e, const Q& c);

  BigCellPoly& operator+=(const BigCellPoly& o);
  BigCellPoly& operator-=(const BigCellPoly& o);
  BigCellPoly operator+(const BigCellPoly& o) const;
  BigCellPoly operator-(const BigCellPoly& o) const;
  BigCellPoly operator*(const BigCellPoly& o) const;
  BigCellPoly scaled(const Q& c) const;
  bool operator==(const BigCellPoly& o) const { return terms_ == o.terms_; }

  // Basic derivation: d/dv for x and y variables, z_v d/dz_v for z variables.
  BigCellPoly derive(const CellLayout& L, int v) const;
  // Value at x = y = 0, z = 1.
  Q at_identity(const CellLayout& L) const;
  BigCellPoly swap_xy(const CellLayout& L) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  int n_ = 0;
  std::map<PolyMono, Q> terms_;
};

// sum_v field[v] D_v + scalar
struct DiffOp {
  std::vector<BigCellPoly> field;
  BigCellPoly scalar;

  DiffOp() = default;
  explicit DiffOp(int nvars);
  int nvars() const { return scalar.nvars(); }
  BigCellPoly apply(const CellLayout& L, const BigCellPoly& p) const;
  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp scaled(const Q& c) const;
  bool is_zero() const;
  bool operator==(const DiffOp& o) const;
  std::string str(const std::vector<std::string>& names, const CellLayout& L) const;
};

DiffOp commutator(const CellLayout& L, const DiffOp& a, const DiffOp& b);
DiffOp swap_xy(const CellLayout& L, const DiffOp& d);

// Polynomial tables of the simple-root actions, indexed [i][beta].
struct StructureTables {
  std::vector<std::map<int, BigCellPoly>> p, q, r, s;
  bool operator==(const StructureTables& o) const {
    return p == o.p && q == o.q && r == o.r && s == o.s;
  }
};

class BigCell {
 public:
  explicit BigCell(const LieAlgebra& g);

  const LieAlgebra& lie() const { return *g_; }
  const RootSystem& rs() const { return g_->rs(); }
  const CellLayout& layout() const { return L_; }
  const std::vector<std::string>& names() const { return names_; }
  // Coordinate factors in the order of the product: x by descending height,
  // then the torus, then y by ascending height.
  std::vector<std::string> coordinate_order() const;

  // side 1: (rho1(a) psi)(g) = d/dt psi(exp(-t a) g); side 2: d/dt psi(g exp(t a)).
  const DiffOp& rho(int side, int gen) const { return side == 1 ? rho1_.at(gen) : rho2_.at(gen); }
  DiffOp rho_of(int side, const SparseLie& x) const;
  // Image of a PBW element, applied to a polynomial (rightmost factor first).
  BigCellPoly apply_element(int side, const UElement& u, const BigCellPoly& p) const;

  bool check_homomorphism(int side) const;
  bool check_commuting() const;
  bool check_serre(int side) const;
  // rho1(sigma a) = -swap(rho2(a)) for every basis element a.
  bool check_transposition() const;

  // Tables read off from one side, with the shape of the simple-root operators
  // verified; throws std::logic_error if a term falls outside the expected form.
  StructureTables structure_tables(int side) const;

  BigCellPoly monomial(const std::vector<int>& xa, const Weight& mu,
                       const std::vector<int>& yc, const Q& c = Q(1)) const;
  // Right h-weight of a monomial (z-exponent minus the y-degree) and left
  // weight (x-degree minus the z-exponent).
  Weight right_weight(const PolyMono& e) const;
  Weight left_weight(const PolyMono& e) const;

 private:
  DiffOp solve_fields(int side, std::vector<BigCellPoly> v) const;

  const LieAlgebra* g_;
  CellLayout L_;
  std::vector<std::string> names_;
  std::vector<std::vector<BigCellPoly>> omega_minus_, omega_plus_;
  std::vector<DiffOp> rho1_, rho2_;
};

// Per-bidegree dimensions of the block of R(G_0) for sl2. The bidegree of
// x^a z^mu y^c is (mu - 2a, mu - 2c): minus the left weight and the right weight.
struct BidegreeTable {
  int lambda = 0;
  int depth = 0;
  int top = 0;  // largest weight of the dot orbit
  std::map<std::pair<int, int>, int> dims;
};

BidegreeTable block_table_sl2(const BigCell& bc, Enveloping& U, int lambda, int depth);
// Sum over the dot orbit of the truncated characters of M* (x) M, in the same
// bidegree convention.
BidegreeTable expected_block_table_sl2(int lambda, int depth);

// The module C z^lambda (x) C[x] (side 1) or C z^lambda (x) C[y] (side 2) with
// the induced action on the top filtration quotient, truncated at depth D.
WeightModule flag_module(const BigCell& bc, const Weight& lambda, int side, int depth);

struct FlagReport {
  bool x_side_iso_dual_verma = false;
  bool y_side_iso_contragredient = false;
  bool characters_match = false;
  bool passed() const { return x_side_iso_dual_verma && y_side_iso_contragredient && characters_match; }
};
FlagReport flag_quotient_check(const BigCell& bc, Enveloping& U, const Weight& lambda, int depth);

// theta(psi)(u) = (rho2(u) psi)(e), on PBW monomials with F- and E-heights <= depth.
Functional theta(const BigCell& bc, const BigCellPoly& psi, int depth);

}  // namespace bigproj
