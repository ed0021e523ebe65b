#include <sstream>
#include <stdexcept>

#include "bigproj/bigcell.hpp"

namespace bigproj {

BigCellPoly BigCellPoly::constant(int nvars, const Q& c) {
  BigCellPoly p(nvars);
  p.add_term(PolyMono(nvars, 0), c);
  return p;
}

BigCellPoly BigCellPoly::monomial(const PolyMono& e, const Q& c) {
  BigCellPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void BigCellPoly::add_term(const PolyMono& e, const Q& c) {
  if (bigproj::is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (bigproj::is_zero(it->second)) terms_.erase(it);
}

BigCellPoly& BigCellPoly::operator+=(const BigCellPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BigCellPoly& BigCellPoly::operator-=(const BigCellPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BigCellPoly BigCellPoly::operator+(const BigCellPoly& o) const {
  BigCellPoly r = *this;
  r += o;
  return r;
}

BigCellPoly BigCellPoly::operator-(const BigCellPoly& o) const {
  BigCellPoly r = *this;
  r -= o;
  return r;
}

BigCellPoly BigCellPoly::operator*(const BigCellPoly& o) const {
  BigCellPoly r(std::max(n_, o.n_));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      PolyMono e(a.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a[k] + b[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

BigCellPoly BigCellPoly::scaled(const Q& c) const {
  BigCellPoly r(n_);
  if (bigproj::is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

BigCellPoly BigCellPoly::derive(const CellLayout& L, int v) const {
  BigCellPoly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    if (L.is_z(v)) {
      r.add_term(e, c * e[v]);
    } else {
      PolyMono d = e;
      d[v] -= 1;
      r.add_term(d, c * e[v]);
    }
  }
  return r;
}

Q BigCellPoly::at_identity(const CellLayout& L) const {
  Q s = 0;
  for (const auto& [e, c] : terms_) {
    bool ok = true;
    for (int v = 0; v < L.nvars() && ok; ++v)
      if (!L.is_z(v) && e[v] != 0) ok = false;
    if (ok) s += c;
  }
  return s;
}

BigCellPoly BigCellPoly::swap_xy(const CellLayout& L) const {
  BigCellPoly r(n_);
  for (const auto& [e, c] : terms_) {
    PolyMono s = e;
    for (int b = 0; b < L.m; ++b) std::swap(s[L.x(b)], s[L.y(b)]);
    r.add_term(s, c);
  }
  return r;
}

std::string BigCellPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit = true;
    for (int x : e)
      if (x) unit = false;
    Q a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool wrote = false;
    if (a != 1 || unit) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << names[v];
      if (e[v] != 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

DiffOp::DiffOp(int nvars) : field(nvars, BigCellPoly(nvars)), scalar(nvars) {}

BigCellPoly DiffOp::apply(const CellLayout& L, const BigCellPoly& p) const {
  BigCellPoly r = scalar * p;
  for (int v = 0; v < static_cast<int>(field.size()); ++v) {
    if (field[v].is_zero()) continue;
    auto d = p.derive(L, v);
    if (!d.is_zero()) r += field[v] * d;
  }
  return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp r = *this;
  for (std::size_t v = 0; v < field.size(); ++v) r.field[v] += o.field[v];
  r.scalar += o.scalar;
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + o.scaled(Q(-1)); }

DiffOp DiffOp::scaled(const Q& c) const {
  DiffOp r = *this;
  for (auto& f : r.field) f = f.scaled(c);
  r.scalar = r.scalar.scaled(c);
  return r;
}

bool DiffOp::is_zero() const {
  if (!scalar.is_zero()) return false;
  for (const auto& f : field)
    if (!f.is_zero()) return false;
  return true;
}

bool DiffOp::operator==(const DiffOp& o) const { return (*this - o).is_zero(); }

std::string DiffOp::str(const std::vector<std::string>& names, const CellLayout& L) const {
  std::ostringstream os;
  bool first = true;
  auto piece = [&](const BigCellPoly& c, const std::string& d) {
    if (c.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(names) << ")" << d;
  };
  for (int v = 0; v < static_cast<int>(field.size()); ++v)
    piece(field[v], L.is_z(v) ? "*" + names[v] + "*d/d" + names[v] : "*d/d" + names[v]);
  piece(scalar, "");
  return first ? "0" : os.str();
}

DiffOp commutator(const CellLayout& L, const DiffOp& a, const DiffOp& b) {
  int n = a.nvars();
  DiffOp r(n);
  // The basic derivations commute, so [X, Y]^v = X(Y^v) - Y(X^v).
  DiffOp af = a, bf = b;
  af.scalar = BigCellPoly(n);
  bf.scalar = BigCellPoly(n);
  for (int v = 0; v < n; ++v) r.field[v] = af.apply(L, b.field[v]) - bf.apply(L, a.field[v]);
  r.scalar = af.apply(L, b.scalar) - bf.apply(L, a.scalar);
  return r;
}

DiffOp swap_xy(const CellLayout& L, const DiffOp& d) {
  DiffOp r(d.nvars());
  for (int v = 0; v < d.nvars(); ++v) {
    int w = v;
    if (v < L.m) w = L.y(v);
    else if (!L.is_z(v)) w = v - L.m - L.r;
    r.field[w] = d.field[v].swap_xy(L);
  }
  r.scalar = d.scalar.swap_xy(L);
  return r;
}

}  // namespace bigproj
