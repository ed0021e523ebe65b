#include "bigproj/functional.hpp"

#include <functional>

namespace bigproj {

namespace {

Q binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Q(r);
}

Q power_product(const Weight& nu, const Monomial& m, const LieIndex& li) {
  Q v = 1;
  for (int i = 0; i < li.r; ++i) v *= rat_pow(Q(nu[i]), m[li.H(i)]);
  return v;
}

}  // namespace

void Functional::add(const RootExps& a, const RootExps& c, const Weight& nu, const Q& v) {
  if (bigproj::is_zero(v)) return;
  auto key = std::make_pair(a, c);
  auto& slot = coeff[key];
  Q& x = slot[nu];
  x += v;
  if (bigproj::is_zero(x)) {
    slot.erase(nu);
    if (slot.empty()) coeff.erase(key);
  }
}

Q Functional::value(const LieIndex& li, const Monomial& m) const {
  RootExps a(m.begin(), m.begin() + li.m);
  RootExps c(m.begin() + li.m + li.r, m.end());
  auto it = coeff.find({a, c});
  if (it == coeff.end()) return 0;
  Q s = 0;
  for (const auto& [nu, v] : it->second) s += v * power_product(nu, m, li);
  return s;
}

Q Functional::value(const LieIndex& li, const UElement& u) const {
  Q s = 0;
  for (const auto& [m, c] : u) s += c * value(li, m);
  return s;
}

Functional Functional::operator+(const Functional& o) const {
  Functional r = *this;
  for (const auto& [k, w] : o.coeff)
    for (const auto& [nu, v] : w) r.add(k.first, k.second, nu, v);
  return r;
}

Functional Functional::operator-(const Functional& o) const { return *this + o.scaled(Q(-1)); }

Functional Functional::scaled(const Q& s) const {
  Functional r;
  r.depth = depth;
  if (bigproj::is_zero(s)) return r;
  r.coeff = coeff;
  for (auto& [k, w] : r.coeff)
    for (auto& [nu, v] : w) v *= s;
  return r;
}

int root_height(const RootSystem& rs, const RootExps& a) {
  int h = 0;
  for (std::size_t k = 0; k < a.size(); ++k) h += a[k] * rs.root(static_cast<int>(k)).height;
  return h;
}

std::vector<RootExps> root_monomials(const RootSystem& rs, int depth) {
  std::vector<RootExps> out;
  int m = rs.num_positive();
  RootExps cur(m, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == m) {
      out.push_back(cur);
      return;
    }
    int h = rs.root(k).height;
    for (int e = 0; e * h <= left; ++e) {
      cur[k] = e;
      rec(k + 1, left - e * h);
    }
    cur[k] = 0;
  };
  rec(0, depth);
  return out;
}

Functional convolve(const RootSystem& rs, const Functional& a, const Functional& b) {
  Functional r;
  r.depth = std::min(a.depth, b.depth);
  for (const auto& [ka, wa] : a.coeff) {
    int ha = root_height(rs, ka.first), hc = root_height(rs, ka.second);
    for (const auto& [kb, wb] : b.coeff) {
      if (ha + root_height(rs, kb.first) > r.depth) continue;
      if (hc + root_height(rs, kb.second) > r.depth) continue;
      RootExps f(ka.first.size()), e(ka.second.size());
      Q mult = 1;
      for (std::size_t k = 0; k < f.size(); ++k) {
        f[k] = ka.first[k] + kb.first[k];
        e[k] = ka.second[k] + kb.second[k];
        mult *= binomial(f[k], ka.first[k]) * binomial(e[k], ka.second[k]);
      }
      for (const auto& [nu1, v1] : wa)
        for (const auto& [nu2, v2] : wb) r.add(f, e, nu1 + nu2, mult * v1 * v2);
    }
  }
  return r;
}

Functional counit(const RootSystem& rs, int depth) {
  return exponential(rs, Weight(rs.rank(), 0), depth);
}

Functional exponential(const RootSystem& rs, const Weight& nu, int depth) {
  Functional f;
  f.depth = depth;
  RootExps z(rs.num_positive(), 0);
  f.add(z, z, nu, Q(1));
  return f;
}

Functional truncated(const RootSystem& rs, const Functional& f, int depth) {
  Functional r;
  r.depth = depth;
  for (const auto& [k, w] : f.coeff)
    if (root_height(rs, k.first) <= depth && root_height(rs, k.second) <= depth) r.coeff[k] = w;
  return r;
}

void FunctionalCoords::register_keys(const Functional& f) {
  for (const auto& [k, w] : f.coeff)
    for (const auto& [nu, v] : w) {
      auto key = std::make_pair(k, nu);
      if (index_.count(key)) continue;
      index_[key] = keys_.size();
      keys_.push_back(key);
    }
}

QVec FunctionalCoords::coords(const Functional& f) const {
  QVec out(keys_.size(), Q(0));
  for (const auto& [k, w] : f.coeff)
    for (const auto& [nu, v] : w) out.at(index_.at({k, nu})) = v;
  return out;
}

Functional FunctionalCoords::from_coords(const QVec& v, int depth) const {
  Functional f;
  f.depth = depth;
  for (std::size_t i = 0; i < keys_.size(); ++i)
    f.add(keys_[i].first.first, keys_[i].first.second, keys_[i].second, v[i]);
  return f;
}

std::size_t functional_rank(const std::vector<Functional>& fs) {
  FunctionalCoords fc;
  for (const auto& f : fs) fc.register_keys(f);
  std::vector<QVec> rows;
  for (const auto& f : fs) rows.push_back(fc.coords(f));
  if (rows.empty() || fc.size() == 0) return 0;
  return rank_of(rows, fc.size());
}

}  // namespace bigproj
