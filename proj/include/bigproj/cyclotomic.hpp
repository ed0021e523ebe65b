#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bigproj/rational.hpp"

namespace bigproj {

// Q(zeta) = Q[x] / Phi_ell(x), elements stored as coefficient vectors of
// length deg Phi_ell.
class CyclotomicField {
 public:
  explicit CyclotomicField(int ell);

  int ell() const { return ell_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<Q>& minimal_polynomial() const { return phi_; }

  std::vector<Q> reduce(std::vector<Q> p) const;
  std::vector<Q> multiply(const std::vector<Q>& a, const std::vector<Q>& b) const;
  std::vector<Q> inverse(const std::vector<Q>& a) const;

 private:
  int ell_;
  std::vector<Q> phi_;  // monic, low degree first
};

class Cyc {
 public:
  Cyc() = default;
  Cyc(int n) : c_{Q(n)} {}  // NOLINT: rational constants convert implicitly
  Cyc(const Q& x) : c_{x} {}  // NOLINT
  Cyc(std::shared_ptr<const CyclotomicField> f, std::vector<Q> coeffs);

  // zeta^k in the given field.
  static Cyc root_power(std::shared_ptr<const CyclotomicField> f, int k);

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const;
  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }
  bool operator==(const Cyc& o) const;

  bool zero() const;
  Cyc inverse() const;
  std::string str() const;
  const std::vector<Q>& coefficients() const { return c_; }
  const std::shared_ptr<const CyclotomicField>& field() const { return f_; }

 private:
  std::shared_ptr<const CyclotomicField> pick(const Cyc& o) const;
  std::vector<Q> padded(const std::shared_ptr<const CyclotomicField>& f) const;
  void trim();

  std::shared_ptr<const CyclotomicField> f_;
  std::vector<Q> c_;
};

inline bool is_zero(const Cyc& x) { return x.zero(); }

}  // namespace bigproj
