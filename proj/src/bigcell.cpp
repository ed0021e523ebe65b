#include "bigproj/bigcell.hpp"

#include <functional>
#include <stdexcept>

#include "bigproj/cat_o.hpp"
#include "bigproj/characters.hpp"

namespace bigproj {

namespace {

using PolyLie = std::vector<BigCellPoly>;

PolyLie ad(const LieAlgebra& g, int x, const PolyLie& v) {
  int n = static_cast<int>(v.size());
  PolyLie out(n, BigCellPoly(v[0].nvars()));
  for (int b = 0; b < n; ++b) {
    if (v[b].is_zero()) continue;
    for (auto [t, c] : g.bracket(x, b)) out[t] += v[b].scaled(Q(c));
  }
  return out;
}

bool all_zero(const PolyLie& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

// exp(sign * s * ad x) v, where s is the coordinate variable `var`.
PolyLie ad_exp(const LieAlgebra& g, int x, int var, int sign, const PolyLie& v) {
  int nv = v[0].nvars();
  PolyLie out = v, term = v;
  PolyMono e(nv, 0);
  Q fact = 1;
  for (int j = 1;; ++j) {
    term = ad(g, x, term);
    if (all_zero(term)) break;
    fact *= j;
    e[var] = j;
    BigCellPoly s = BigCellPoly::monomial(e, rat_pow(Q(sign), j) / fact);
    for (std::size_t b = 0; b < out.size(); ++b)
      if (!term[b].is_zero()) out[b] += s * term[b];
  }
  return out;
}

PolyLie unit_vec(int n, int nv, int b, const Q& c = Q(1)) {
  PolyLie v(n, BigCellPoly(nv));
  v[b] = BigCellPoly::constant(nv, c);
  return v;
}

}  // namespace

BigCell::BigCell(const LieAlgebra& g) : g_(&g) {
  const auto& rs = g.rs();
  const auto& li = g.index();
  L_.m = rs.num_positive();
  L_.r = rs.rank();
  int nv = L_.nvars();
  names_.resize(nv);
  for (int k = 0; k < L_.m; ++k) {
    std::string suffix = g.basis_name(li.E(k)).substr(1);
    names_[L_.x(k)] = "x" + suffix;
    names_[L_.y(k)] = "y" + suffix;
  }
  for (int i = 0; i < L_.r; ++i) names_[L_.z(i)] = "z" + std::to_string(i + 1);

  int n = g.dim();
  for (int k = 0; k < L_.m; ++k) {
    PolyLie w = unit_vec(n, nv, li.F(k));
    for (int j = k - 1; j >= 0; --j) w = ad_exp(g, li.F(j), L_.x(j), -1, w);
    omega_minus_.push_back(w);
    PolyLie u = unit_vec(n, nv, li.E(k));
    for (int j = k - 1; j >= 0; --j) u = ad_exp(g, li.E(j), L_.y(j), +1, u);
    omega_plus_.push_back(u);
  }
  for (int a = 0; a < n; ++a) {
    PolyLie v2 = unit_vec(n, nv, a);
    for (int j = L_.m - 1; j >= 0; --j) v2 = ad_exp(g, li.E(j), L_.y(j), +1, v2);
    rho2_.push_back(solve_fields(2, v2));
    PolyLie v1 = unit_vec(n, nv, a, Q(-1));
    for (int j = L_.m - 1; j >= 0; --j) v1 = ad_exp(g, li.F(j), L_.x(j), -1, v1);
    rho1_.push_back(solve_fields(1, v1));
  }
}

DiffOp BigCell::solve_fields(int side, std::vector<BigCellPoly> v) const {
  const auto& li = g_->index();
  const auto& rs = g_->rs();
  int nv = L_.nvars();
  DiffOp D(nv);
  auto z_neg = [&](int k) {
    PolyMono e(nv, 0);
    for (int i = 0; i < L_.r; ++i) e[L_.z(i)] = -rs.root(k).weight[i];
    return BigCellPoly::monomial(e);
  };
  for (int i = 0; i < L_.r; ++i) D.field[L_.z(i)] = v[li.H(i)];
  // N_- part: sum_k a_k omega^-_k = target; unitriangular in height order.
  std::vector<BigCellPoly> a(L_.m), c(L_.m);
  for (int k = 0; k < L_.m; ++k) {
    BigCellPoly t = side == 2 ? v[li.F(k)] * z_neg(k) : v[li.F(k)];
    for (int j = 0; j < k; ++j)
      if (!omega_minus_[j][li.F(k)].is_zero()) t -= a[j] * omega_minus_[j][li.F(k)];
    a[k] = t;
    D.field[L_.x(k)] = t;
  }
  for (int k = 0; k < L_.m; ++k) {
    BigCellPoly t = side == 1 ? v[li.E(k)] * z_neg(k) : v[li.E(k)];
    for (int j = 0; j < k; ++j)
      if (!omega_plus_[j][li.E(k)].is_zero()) t -= c[j] * omega_plus_[j][li.E(k)];
    c[k] = t;
    D.field[L_.y(k)] = t;
  }
  return D;
}

std::vector<std::string> BigCell::coordinate_order() const {
  std::vector<std::string> out;
  for (int k = L_.m - 1; k >= 0; --k) out.push_back(names_[L_.x(k)]);
  for (int i = 0; i < L_.r; ++i) out.push_back(names_[L_.z(i)]);
  for (int k = 0; k < L_.m; ++k) out.push_back(names_[L_.y(k)]);
  return out;
}

DiffOp BigCell::rho_of(int side, const SparseLie& x) const {
  DiffOp r(L_.nvars());
  for (auto [b, c] : x) r = r + rho(side, b).scaled(Q(c));
  return r;
}

BigCellPoly BigCell::apply_element(int side, const UElement& u, const BigCellPoly& p) const {
  BigCellPoly out(L_.nvars());
  int n = g_->dim();
  for (const auto& [m, c] : u) {
    BigCellPoly cur = p;
    for (int g = n - 1; g >= 0 && !cur.is_zero(); --g)
      for (int e = 0; e < m[g]; ++e) cur = rho(side, g).apply(L_, cur);
    out += cur.scaled(c);
  }
  return out;
}

bool BigCell::check_homomorphism(int side) const {
  int n = g_->dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!(commutator(L_, rho(side, a), rho(side, b)) == rho_of(side, g_->bracket(a, b))))
        return false;
  return true;
}

bool BigCell::check_commuting() const {
  int n = g_->dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!commutator(L_, rho(1, a), rho(2, b)).is_zero()) return false;
  return true;
}

bool BigCell::check_serre(int side) const {
  const auto& rs = g_->rs();
  const auto& li = g_->index();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) {
      if (i == j) continue;
      int times = 1 - rs.cartan()[i][j];
      for (bool raising : {true, false}) {
        int gi = raising ? li.E(rs.simple_index(i)) : li.F(rs.simple_index(i));
        int gj = raising ? li.E(rs.simple_index(j)) : li.F(rs.simple_index(j));
        DiffOp acc = rho(side, gj);
        for (int t = 0; t < times; ++t) acc = commutator(L_, rho(side, gi), acc);
        if (!acc.is_zero()) return false;
      }
    }
  return true;
}

bool BigCell::check_transposition() const {
  for (int a = 0; a < g_->dim(); ++a)
    if (!(rho(1, g_->sigma(a)) == swap_xy(L_, rho(2, a)).scaled(Q(-1)))) return false;
  return true;
}

StructureTables BigCell::structure_tables(int side) const {
  const auto& rs = g_->rs();
  const auto& li = g_->index();
  int nv = L_.nvars();
  int r = L_.r, m = L_.m;
  StructureTables T;
  T.p.resize(r);
  T.q.resize(r);
  T.r.resize(r);
  T.s.resize(r);
  auto fail = [&](const std::string& what) {
    throw std::logic_error("structure_tables(side " + std::to_string(side) + "): " + what);
  };
  auto only_vars = [&](const BigCellPoly& p, bool x_ok, bool y_ok, bool z_ok) {
    for (const auto& [e, c] : p.terms())
      for (int v = 0; v < nv; ++v) {
        if (e[v] == 0) continue;
        bool ok = L_.is_z(v) ? z_ok : (v < m ? x_ok : y_ok);
        if (!ok) return false;
      }
    return true;
  };
  auto mono = [&](int var, int pow) {
    PolyMono e(nv, 0);
    if (var >= 0) e[var] = pow;
    return BigCellPoly::monomial(e);
  };
  auto z_neg = [&](int k) {
    PolyMono e(nv, 0);
    for (int j = 0; j < r; ++j) e[L_.z(j)] = -rs.root(k).weight[j];
    return BigCellPoly::monomial(e);
  };
  // Divide by a z-monomial, requiring every term to carry it.
  auto strip_z = [&](const BigCellPoly& p, int k) {
    BigCellPoly out(nv);
    for (const auto& [e0, c] : p.terms()) {
      PolyMono e = e0;
      for (int j = 0; j < r; ++j) {
        if (e[L_.z(j)] != -rs.root(k).weight[j]) fail("missing z-factor");
        e[L_.z(j)] = 0;
      }
      out.add_term(e, c);
    }
    return out;
  };
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) fail(what);
  };
  // Side 1 is read in x-variables and then renamed to y so that both sides
  // produce tables in the same variables.
  auto to_y = [&](const BigCellPoly& p) { return side == 1 ? p.swap_xy(L_) : p; };
  int own = side == 2 ? 1 : 0;  // 1: own variables are y
  auto ovar = [&](int k) { return own ? L_.y(k) : L_.x(k); };
  auto other = [&](int k) { return own ? L_.x(k) : L_.y(k); };
  Q sgn = side == 2 ? Q(1) : Q(-1);

  for (int i = 0; i < r; ++i) {
    int ki = rs.simple_index(i);
    bool yo = own == 1;
    // Raising-type operator on the own side: rho2(e_i) or rho1(f_i).
    const DiffOp& up = side == 2 ? rho(2, li.E(ki)) : rho(1, li.F(ki));
    expect(up.scalar.is_zero(), "scalar term");
    for (int k = 0; k < m; ++k) {
      const auto& fk = up.field[ovar(k)];
      expect(up.field[other(k)].is_zero(), "cross derivative in e/f");
      if (k == ki) {
        expect(fk == mono(-1, 0).scaled(sgn), "leading term of e/f");
      } else if (rs.root(k).height == 1) {
        expect(fk.is_zero(), "simple-root term in e/f");
      } else {
        expect(only_vars(fk, !yo, yo, false), "variables of p");
        if (!fk.is_zero()) T.p[i][k] = to_y(fk.scaled(sgn));
      }
    }
    for (int j = 0; j < r; ++j) expect(up.field[L_.z(j)].is_zero(), "z term in e/f");

    const DiffOp& hh = rho(side, li.H(i));
    expect(hh.scalar.is_zero(), "scalar term in h");
    for (int j = 0; j < r; ++j)
      expect(hh.field[L_.z(j)] == (j == i ? mono(-1, 0).scaled(sgn) : BigCellPoly(nv)),
             "torus part of h");
    for (int k = 0; k < m; ++k) {
      expect(hh.field[other(k)].is_zero(), "cross derivative in h");
      const auto& fk = hh.field[ovar(k)];
      if (k == ki) {
        expect(fk == mono(ovar(k), 1).scaled(Q(-2) * sgn), "leading term of h");
      } else {
        expect(only_vars(fk, !yo, yo, false), "variables of q");
        if (!fk.is_zero()) T.q[i][k] = to_y(fk.scaled(sgn));
      }
    }

    // Lowering-type operator on the own side: rho2(f_i) or rho1(e_i).
    const DiffOp& dn = side == 2 ? rho(2, li.F(ki)) : rho(1, li.E(ki));
    expect(dn.scalar.is_zero(), "scalar term in f/e");
    for (int j = 0; j < r; ++j)
      expect(dn.field[L_.z(j)] == (j == i ? mono(ovar(ki), 1).scaled(sgn) : BigCellPoly(nv)),
             "torus part of f/e");
    for (int k = 0; k < m; ++k) {
      const auto& fk = dn.field[ovar(k)];
      const auto& gk = dn.field[other(k)];
      if (k == ki) {
        expect(fk == mono(ovar(k), 2).scaled(-sgn), "leading term of f/e");
        expect(gk == z_neg(ki).scaled(sgn), "z^{-alpha_i} term of f/e");
      } else {
        expect(only_vars(fk, !yo, yo, false), "variables of r");
        if (!fk.is_zero()) T.r[i][k] = to_y(fk.scaled(sgn));
        if (rs.root(k).height == 1) {
          expect(gk.is_zero(), "simple-root cross term in f/e");
        } else if (!gk.is_zero()) {
          BigCellPoly s = strip_z(gk, ki);
          expect(only_vars(s, yo, !yo, false), "variables of s");
          // s is a polynomial in the other side's variables; store it in y.
          T.s[i][k] = (side == 2 ? s.swap_xy(L_) : s).scaled(sgn);
        }
      }
    }
  }
  return T;
}

BigCellPoly BigCell::monomial(const std::vector<int>& xa, const Weight& mu,
                              const std::vector<int>& yc, const Q& c) const {
  PolyMono e(L_.nvars(), 0);
  for (int k = 0; k < L_.m; ++k) {
    e[L_.x(k)] = xa.empty() ? 0 : xa[k];
    e[L_.y(k)] = yc.empty() ? 0 : yc[k];
  }
  for (int i = 0; i < L_.r; ++i) e[L_.z(i)] = mu[i];
  return BigCellPoly::monomial(e, c);
}

Weight BigCell::right_weight(const PolyMono& e) const {
  Weight w(L_.r);
  for (int i = 0; i < L_.r; ++i) w[i] = e[L_.z(i)];
  for (int k = 0; k < L_.m; ++k) w = w - e[L_.y(k)] * rs().root(k).weight;
  return w;
}

Weight BigCell::left_weight(const PolyMono& e) const {
  Weight w(L_.r);
  for (int i = 0; i < L_.r; ++i) w[i] = -e[L_.z(i)];
  for (int k = 0; k < L_.m; ++k) w = w + e[L_.x(k)] * rs().root(k).weight;
  return w;
}

BidegreeTable block_table_sl2(const BigCell& bc, Enveloping& U, int lambda, int depth) {
  if (bc.rs().label() != "A1") throw std::invalid_argument("block_table_sl2 needs A1");
  if (lambda > -1) throw std::invalid_argument("block_table_sl2 needs lambda <= -1");
  BidegreeTable T;
  T.lambda = lambda;
  T.depth = depth;
  T.top = std::max(lambda, -lambda - 2);
  Q chi = U.casimir_eigenvalue({lambda});
  UElement omega = U.casimir_sl2();
  UElement omega_star = U.antipode(omega);
  for (int k1 = 0; k1 <= depth; ++k1)
    for (int k2 = 0; k2 <= depth; ++k2) {
      int b1 = T.top - 2 * k1, b2 = T.top - 2 * k2;
      std::vector<PolyMono> basis;
      std::map<PolyMono, int> pos;
      for (int mu = std::max(b1, b2); mu <= T.top; mu += 2) {
        PolyMono e = bc.monomial({(mu - b1) / 2}, {mu}, {(mu - b2) / 2}).terms().begin()->first;
        pos[e] = static_cast<int>(basis.size());
        basis.push_back(e);
      }
      std::size_t n = basis.size();
      auto matrix_of = [&](int side, const UElement& u) {
        QMatrix M(n, n);
        for (std::size_t j = 0; j < n; ++j) {
          auto img = bc.apply_element(side, u, BigCellPoly::monomial(basis[j]));
          for (const auto& [e, c] : img.terms()) {
            auto it = pos.find(e);
            if (it == pos.end()) throw std::logic_error("Casimir left the bidegree space");
            M(it->second, j) = c;
          }
        }
        return M;
      };
      auto g2 = generalized_eigenspace(matrix_of(2, omega), chi).row_list();
      auto g1 = generalized_eigenspace(matrix_of(1, omega_star), chi).row_list();
      int d = static_cast<int>(intersect(g1, g2, n).size());
      if (d) T.dims[{b1, b2}] = d;
    }
  return T;
}

BidegreeTable expected_block_table_sl2(int lambda, int depth) {
  static const RootSystem rs("A1");
  BidegreeTable T;
  T.lambda = lambda;
  T.depth = depth;
  T.top = std::max(lambda, -lambda - 2);
  std::vector<int> orbit{lambda};
  if (lambda != -1) orbit.push_back(-lambda - 2);
  for (int mu : orbit) {
    auto ch = truncate(rs, verma_char(rs, {mu}), {T.top}, depth);
    for (const auto& [w1, m1] : ch.mult)
      for (const auto& [w2, m2] : ch.mult)
        if (m1 != 0 && m2 != 0) T.dims[{w1[0], w2[0]}] += static_cast<int>(m1 * m2);
  }
  return T;
}

WeightModule flag_module(const BigCell& bc, const Weight& lambda, int side, int depth) {
  const auto& rs = bc.rs();
  const auto& L = bc.layout();
  LieIndex li(rs);
  WeightModule V(rs, side == 1 ? "Cz^l[x]" : "Cz^l[y]");
  Weight zero(rs.rank(), 0);
  V.top = side == 1 ? zero - lambda : lambda;
  V.lowest_type = side == 1;
  V.depth = depth;
  std::map<Weight, std::vector<PolyMono>> by_weight;
  std::map<PolyMono, int> pos;
  for (const auto& a : root_monomials(rs, depth)) {
    BigCellPoly p = side == 1 ? bc.monomial(a, lambda, {}) : bc.monomial({}, lambda, a);
    PolyMono e = p.terms().begin()->first;
    Weight w = side == 1 ? bc.left_weight(e) : bc.right_weight(e);
    pos[e] = static_cast<int>(by_weight[w].size());
    by_weight[w].push_back(e);
  }
  for (const auto& [w, b] : by_weight) V.add_weight(w, static_cast<int>(b.size()));
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < V.num_weights(); ++k) {
      int t = V.target(g, k);
      if (t < 0) continue;
      const auto& src = by_weight[V.weight(k)];
      QMatrix M(V.dim(t), V.dim(k));
      for (std::size_t j = 0; j < src.size(); ++j) {
        auto img = bc.rho(side, g).apply(L, BigCellPoly::monomial(src[j]));
        for (const auto& [e, c] : img.terms()) {
          bool top_z = true;
          for (int i = 0; i < L.r; ++i)
            if (e[L.z(i)] != lambda[i]) top_z = false;
          if (!top_z) {
            Weight dz(rs.rank());
            for (int i = 0; i < L.r; ++i) dz[i] = lambda[i] - e[L.z(i)];
            if (!rs.leq(zero, dz)) throw std::logic_error("flag_module: z-weight increased");
            continue;  // lies in the lower filtration step
          }
          M(pos.at(e), j) = c;
        }
      }
      V.set_op(g, k, std::move(M));
    }
  }
  return V;
}

FlagReport flag_quotient_check(const BigCell& bc, Enveloping& U, const Weight& lambda, int depth) {
  FlagReport r;
  auto X = flag_module(bc, lambda, 1, depth);
  auto Y = flag_module(bc, lambda, 2, depth);
  auto Mdual = restricted_dual(verma(U, lambda, depth));
  auto Mc = contragredient_verma(U, lambda, depth);
  r.characters_match = X.character() == Mdual.character() && Y.character() == Mc.character();
  auto hx = hom_space(Mdual, X);
  r.x_side_iso_dual_verma = hx.size() == 1 && is_isomorphism(hx[0], Mdual, X);
  auto hy = hom_space(Mc, Y);
  r.y_side_iso_contragredient = hy.size() == 1 && is_isomorphism(hy[0], Mc, Y);
  return r;
}

Functional theta(const BigCell& bc, const BigCellPoly& psi, int depth) {
  const auto& rs = bc.rs();
  const auto& L = bc.layout();
  LieIndex li(rs);
  int m = L.m;
  Functional out;
  out.depth = depth;
  // Enumerate x^c = prod_k x_k^{c_k} for the PBW order, applying the rightmost
  // factor (largest k) first and sharing prefixes.
  auto walk = [&](const BigCellPoly& start, bool raising,
                  const std::function<void(const RootExps&, const BigCellPoly&)>& visit) {
    RootExps cur(m, 0);
    std::function<void(int, int, const BigCellPoly&)> rec = [&](int k, int left,
                                                                const BigCellPoly& p) {
      if (k < 0) {
        visit(cur, p);
        return;
      }
      BigCellPoly q = p;
      int h = rs.root(k).height;
      int gen = raising ? li.E(k) : li.F(k);
      for (int e = 0;; ++e) {
        cur[k] = e;
        rec(k - 1, left - e * h, q);
        if ((e + 1) * h > left || q.is_zero()) break;
        q = bc.rho(2, gen).apply(L, q);
      }
      cur[k] = 0;
    };
    rec(m - 1, depth, start);
  };
  walk(psi, true, [&](const RootExps& c, const BigCellPoly& ec) {
    if (ec.is_zero()) return;
    std::map<Weight, BigCellPoly> parts;
    for (const auto& [e, v] : ec.terms()) {
      Weight w = bc.right_weight(e);
      auto it = parts.find(w);
      if (it == parts.end()) it = parts.emplace(w, BigCellPoly(L.nvars())).first;
      it->second.add_term(e, v);
    }
    for (const auto& [nu, part] : parts)
      walk(part, false, [&](const RootExps& a, const BigCellPoly& fp) {
        Q v = fp.at_identity(L);
        if (!is_zero(v)) out.add(a, c, nu, v);
      });
  });
  return out;
}

}  // namespace bigproj
