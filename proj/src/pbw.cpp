#include <algorithm>
#include <random>
#include <stdexcept>

#include "bigproj/enveloping.hpp"

namespace bigproj {

void add_into(UElement& acc, const UElement& x, const Q& s) {
  for (const auto& [m, c] : x) {
    auto& slot = acc[m];
    slot += s * c;
    if (is_zero(slot)) acc.erase(m);
  }
}

UElement scale(const UElement& x, const Q& s) {
  UElement out;
  if (is_zero(s)) return out;
  for (const auto& [m, c] : x) out[m] = c * s;
  return out;
}

Enveloping::Enveloping(const LieAlgebra& g) : g_(&g) {}

UElement Enveloping::one() const { return UElement{{unit_monomial(), Q(1)}}; }

UElement Enveloping::generator(int g) const {
  Monomial m = unit_monomial();
  m.at(g) = 1;
  return UElement{{m, Q(1)}};
}

std::vector<int> Enveloping::word_of(const Monomial& m) const {
  std::vector<int> w;
  for (int g = 0; g < n(); ++g)
    for (int k = 0; k < m[g]; ++k) w.push_back(g);
  return w;
}

const UElement& Enveloping::left_mult_gen(int g, const Monomial& m) {
  auto key = std::make_pair(g, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int x = 0;
  while (x < n() && m[x] == 0) ++x;
  UElement out;
  if (x == n() || g <= x) {
    Monomial mm = m;
    mm[g] += 1;
    out[mm] = 1;
  } else {
    // g x m' = x (g m') + [g, x] m'
    Monomial rest = m;
    rest[x] -= 1;
    UElement gm = left_mult_gen(g, rest);
    for (const auto& [mono, c] : gm) add_into(out, left_mult_gen(x, mono), c);
    for (auto [h, c] : g_->bracket(g, x)) add_into(out, left_mult_gen(h, rest), Q(c));
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

UElement Enveloping::multiply(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [ma, ca] : a) {
    UElement cur = b;
    auto w = word_of(ma);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      UElement next;
      for (const auto& [mono, c] : cur) add_into(next, left_mult_gen(*it, mono), c);
      cur = std::move(next);
    }
    add_into(out, cur, ca);
  }
  return out;
}

UElement Enveloping::normal_form(const std::vector<int>& word) {
  UElement cur = one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    UElement next;
    for (const auto& [mono, c] : cur) add_into(next, left_mult_gen(*it, mono), c);
    cur = std::move(next);
  }
  return cur;
}

UElement Enveloping::commutator(const UElement& a, const UElement& b) {
  UElement out = multiply(a, b);
  add_into(out, multiply(b, a), Q(-1));
  return out;
}

UElement Enveloping::antipode(const UElement& u) {
  UElement out;
  for (const auto& [m, c] : u) {
    auto w = word_of(m);
    std::reverse(w.begin(), w.end());
    add_into(out, normal_form(w), w.size() % 2 ? -c : c);
  }
  return out;
}

UElement Enveloping::normal_form_random(const std::vector<int>& word, unsigned seed) {
  // Words with coefficients; repeatedly pick a random out-of-order adjacent pair.
  std::mt19937 rng(seed);
  std::map<std::vector<int>, Q> pending{{word, Q(1)}};
  UElement done;
  while (!pending.empty()) {
    auto it = pending.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng));
    std::vector<int> w = it->first;
    Q c = it->second;
    pending.erase(it);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) bad.push_back(i);
    if (bad.empty()) {
      Monomial m = unit_monomial();
      for (int g : w) m[g] += 1;
      add_into(done, UElement{{m, c}});
      continue;
    }
    std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    auto push = [&](std::vector<int> nw, const Q& coef) {
      auto& slot = pending[nw];
      slot += coef;
      if (is_zero(slot)) pending.erase(nw);
    };
    std::vector<int> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    push(swapped, c);
    for (auto [h, k] : g_->bracket(w[i], w[i + 1])) {
      std::vector<int> nw(w.begin(), w.begin() + i);
      nw.push_back(h);
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      push(nw, c * k);
    }
  }
  return done;
}

Weight Enveloping::weight_of(const Monomial& m) const {
  const auto& rs = g_->rs();
  Weight w(rs.rank(), 0);
  for (int g = 0; g < n(); ++g)
    if (m[g]) w = w + m[g] * generator_weight(rs, g);
  return w;
}

UElement Enveloping::casimir_sl2() {
  if (g_->rs().label() != "A1") throw std::invalid_argument("casimir_sl2 requires A1");
  const auto& li = g_->index();
  UElement out = scale(normal_form({li.F(0), li.E(0)}), Q(2));
  add_into(out, generator(li.H(0)));
  add_into(out, normal_form({li.H(0), li.H(0)}), Q(1, 2));
  return out;
}

UElement Enveloping::quadratic_casimir() {
  const auto& rs = g_->rs();
  const auto& li = g_->index();
  int r = rs.rank();
  // Gram matrix of the simple coroots: (h_i, h_j) = 4 (a_i, a_j) / ((a_i, a_i)(a_j, a_j)).
  QMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Weight ai = rs.simple_root(i), aj = rs.simple_root(j);
      gram(i, j) = Q(4) * rs.form(ai, aj) / (rs.form(ai, ai) * rs.form(aj, aj));
    }
  QMatrix aug(r, 2 * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug(i, j) = gram(i, j);
    aug(i, r + i) = 1;
  }
  rref_inplace(aug);
  UElement out;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!is_zero(aug(i, r + j))) add_into(out, normal_form({li.H(i), li.H(j)}), aug(i, r + j));
  for (int k = 0; k < li.m; ++k) {
    Q c = rs.root_length2(k) / 2;
    add_into(out, normal_form({li.E(k), li.F(k)}), c);
    add_into(out, normal_form({li.F(k), li.E(k)}), c);
  }
  return out;
}

Q Enveloping::casimir_eigenvalue(const Weight& mu) const {
  const auto& rs = g_->rs();
  return rs.form(mu, mu + 2 * rs.rho());
}

}  // namespace bigproj
