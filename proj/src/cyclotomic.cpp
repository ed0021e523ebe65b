#include "bigproj/cyclotomic.hpp"

#include <stdexcept>

namespace bigproj {

namespace {

using Poly = std::vector<Q>;

void strip(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Q(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(Poly a, Poly b) {
  strip(a);
  strip(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Q(0));
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Q c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    strip(a);
  }
  strip(q);
  return {q, a};
}

Poly cyclotomic_polynomial(int n) {
  Poly p(n + 1, Q(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divmod(p, cyclotomic_polynomial(d)).first;
  return p;
}

}  // namespace

CyclotomicField::CyclotomicField(int ell) : ell_(ell) {
  if (ell < 2) throw std::invalid_argument("cyclotomic order must be >= 2");
  phi_ = cyclotomic_polynomial(ell);
}

std::vector<Q> CyclotomicField::reduce(std::vector<Q> p) const {
  strip(p);
  auto r = poly_divmod(p, phi_).second;
  r.resize(degree(), Q(0));
  return r;
}

std::vector<Q> CyclotomicField::multiply(const std::vector<Q>& a,
                                         const std::vector<Q>& b) const {
  Poly aa = a, bb = b;
  strip(aa);
  strip(bb);
  return reduce(poly_mul(aa, bb));
}

std::vector<Q> CyclotomicField::inverse(const std::vector<Q>& a) const {
  // Extended Euclid: track s with s * a == r (mod phi).
  Poly r0 = phi_, r1 = a;
  strip(r1);
  if (r1.empty()) throw std::domain_error("inverse of zero in cyclotomic field");
  Poly s0, s1{Q(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  // r0 is a nonzero constant since phi is irreducible.
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-unit gcd");
  Q c = 1 / r0[0];
  for (auto& x : s0) x *= c;
  return reduce(s0);
}

Cyc::Cyc(std::shared_ptr<const CyclotomicField> f, std::vector<Q> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  if (f_) c_ = f_->reduce(c_);
  else if (c_.size() > 1) throw std::invalid_argument("Cyc: no field for x-terms");
  if (!f_ && c_.empty()) c_ = {Q(0)};
}

Cyc Cyc::root_power(std::shared_ptr<const CyclotomicField> f, int k) {
  int ell = f->ell();
  int e = ((k % ell) + ell) % ell;
  std::vector<Q> p(e + 1, Q(0));
  p[e] = 1;
  return Cyc(f, p);
}

std::shared_ptr<const CyclotomicField> Cyc::pick(const Cyc& o) const {
  if (f_ && o.f_ && f_ != o.f_ && f_->ell() != o.f_->ell())
    throw std::invalid_argument("mixing cyclotomic fields");
  return f_ ? f_ : o.f_;
}

std::vector<Q> Cyc::padded(const std::shared_ptr<const CyclotomicField>& f) const {
  std::vector<Q> out = c_;
  std::size_t n = f ? static_cast<std::size_t>(f->degree()) : 1;
  out.resize(n, Q(0));
  return out;
}

Cyc Cyc::operator+(const Cyc& o) const {
  auto f = pick(o);
  auto a = padded(f), b = o.padded(f);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  Cyc r;
  r.f_ = f;
  r.c_ = std::move(a);
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  auto f = pick(o);
  auto a = padded(f), b = o.padded(f);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  Cyc r;
  r.f_ = f;
  r.c_ = std::move(a);
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  auto f = pick(o);
  Cyc r;
  r.f_ = f;
  if (!f) {
    r.c_ = {c_[0] * o.c_[0]};
    return r;
  }
  // Rational scalars multiply coefficientwise.
  if (!f_ || !o.f_) {
    const Cyc& s = f_ ? o : *this;
    const Cyc& v = f_ ? *this : o;
    r.c_ = v.padded(f);
    for (auto& x : r.c_) x *= s.c_[0];
    return r;
  }
  r.c_ = f->multiply(c_, o.c_);
  return r;
}

Cyc Cyc::inverse() const {
  if (zero()) throw std::domain_error("division by zero in cyclotomic field");
  Cyc r;
  r.f_ = f_;
  if (!f_) {
    r.c_ = {1 / c_[0]};
    return r;
  }
  r.c_ = f_->inverse(c_);
  return r;
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

bool Cyc::zero() const {
  for (const auto& x : c_)
    if (!is_zero(x)) return false;
  return true;
}

bool Cyc::operator==(const Cyc& o) const { return (*this - o).zero(); }

std::string Cyc::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (is_zero(c_[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].get_str() + ")";
    if (i == 1) out += "*z";
    else if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace bigproj
