#pragma once

// Elements of U(g)* stored on PBW monomials F^a H^b E^c with ht(a), ht(c) bounded
// by a recorded depth. Every functional that arises here is a finite sum of
// exponentials in the Cartan part,
//   phi(F^a H^b E^c) = sum_nu C[a, c][nu] * prod_i nu_i^{b_i},
// so the coefficients C are stored instead of values, and b is unbounded.

#include <map>
#include <utility>
#include <vector>

#include "bigproj/enveloping.hpp"

namespace bigproj {

using RootExps = std::vector<int>;  // exponents over the positive roots
using FunctionalKey = std::pair<RootExps, RootExps>;  // (F-part a, E-part c)

struct Functional {
  int depth = 0;
  std::map<FunctionalKey, std::map<Weight, Q>> coeff;

  void add(const RootExps& a, const RootExps& c, const Weight& nu, const Q& v);
  Q value(const LieIndex& li, const Monomial& m) const;
  Q value(const LieIndex& li, const UElement& u) const;
  bool is_zero() const { return coeff.empty(); }
  bool operator==(const Functional& o) const { return coeff == o.coeff; }
  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional scaled(const Q& s) const;
};

int root_height(const RootSystem& rs, const RootExps& a);
// All exponent vectors of total height <= depth.
std::vector<RootExps> root_monomials(const RootSystem& rs, int depth);

// Product dual to the coproduct x -> x (x) 1 + 1 (x) x.
Functional convolve(const RootSystem& rs, const Functional& a, const Functional& b);
// Evaluation at 1 (the unit for convolution).
Functional counit(const RootSystem& rs, int depth);
// u -> nu(u) on U(h), zero on monomials with root vectors.
Functional exponential(const RootSystem& rs, const Weight& nu, int depth);
// Keep only keys of height <= depth.
Functional truncated(const RootSystem& rs, const Functional& f, int depth);

// Linear coordinates for families of functionals, keyed by (a, c, nu).
class FunctionalCoords {
 public:
  void register_keys(const Functional& f);
  std::size_t size() const { return index_.size(); }
  QVec coords(const Functional& f) const;
  Functional from_coords(const QVec& v, int depth) const;

 private:
  std::map<std::pair<FunctionalKey, Weight>, std::size_t> index_;
  std::vector<std::pair<FunctionalKey, Weight>> keys_;
};

// Rank of a family of functionals.
std::size_t functional_rank(const std::vector<Functional>& fs);

}  // namespace bigproj
