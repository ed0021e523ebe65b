#include "bigproj/uqsl2.hpp"

#include <stdexcept>

namespace bigproj {

UqContext::UqContext(int ell) : ell_(ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and >= 3");
  field_ = std::make_shared<const CyclotomicField>(ell);
}

Cyc UqContext::qpow(int k) const { return Cyc::root_power(field_, k); }

Cyc UqContext::qint(int n) const { return (qpow(n) - qpow(-n)) / (qpow(1) - qpow(-1)); }

Cyc UqContext::casimir_value(int mu) const {
  Cyc d = qpow(1) - qpow(-1);
  return (qpow(mu + 1) + qpow(-mu - 1)) / (d * d);
}

int UqModule::dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

namespace {

// Basis vectors with weights and sparse images, converted to the per-weight form.
struct Flat {
  std::vector<int> wt;
  std::vector<std::vector<std::pair<int, Cyc>>> e, f;
  int add(int w) {
    wt.push_back(w);
    e.emplace_back();
    f.emplace_back();
    return static_cast<int>(wt.size()) - 1;
  }
};

UqModule from_flat(const UqContext& C, const Flat& fl, std::string name) {
  int ell = C.ell();
  UqModule V;
  V.name = std::move(name);
  V.dims.assign(ell, 0);
  std::vector<int> pos(fl.wt.size());
  for (std::size_t i = 0; i < fl.wt.size(); ++i) pos[i] = V.dims[C.mod(fl.wt[i])]++;
  for (int w = 0; w < ell; ++w) {
    V.E.emplace_back(V.dims[C.mod(w + 2)], V.dims[w]);
    V.F.emplace_back(V.dims[C.mod(w - 2)], V.dims[w]);
  }
  for (std::size_t i = 0; i < fl.wt.size(); ++i) {
    int w = C.mod(fl.wt[i]);
    for (const auto& [j, c] : fl.e[i]) V.E[w](pos[j], pos[i]) += c;
    for (const auto& [j, c] : fl.f[i]) V.F[w](pos[j], pos[i]) += c;
  }
  return V;
}

CVec unit_c(std::size_t n, std::size_t i) {
  CVec v(n, Cyc(0));
  v[i] = Cyc(1);
  return v;
}

// Restriction to a stable family of subspaces (rows per weight).
UqModule restrict_to(const UqContext& C, const UqModule& V, const std::vector<std::vector<CVec>>& basis,
                     std::string name) {
  int ell = C.ell();
  UqModule S;
  S.name = std::move(name);
  std::vector<CoordSolver<Cyc>> solvers;
  for (int w = 0; w < ell; ++w) {
    S.dims.push_back(static_cast<int>(basis[w].size()));
    solvers.emplace_back(basis[w], static_cast<std::size_t>(V.dims[w]));
  }
  for (int w = 0; w < ell; ++w) {
    int up = C.mod(w + 2), dn = C.mod(w - 2);
    CMatrix e(S.dims[up], S.dims[w]), f(S.dims[dn], S.dims[w]);
    for (int j = 0; j < S.dims[w]; ++j) {
      auto ce = solvers[up].coords_or_throw(V.E[w].apply(basis[w][j]));
      auto cf = solvers[dn].coords_or_throw(V.F[w].apply(basis[w][j]));
      for (int i = 0; i < S.dims[up]; ++i) e(i, j) = ce[i];
      for (int i = 0; i < S.dims[dn]; ++i) f(i, j) = cf[i];
    }
    S.E.push_back(std::move(e));
    S.F.push_back(std::move(f));
  }
  return S;
}

UqModule direct_sum_uq(const UqContext& C, const std::vector<UqModule>& parts) {
  int ell = C.ell();
  UqModule G;
  G.dims.assign(ell, 0);
  for (const auto& P : parts) {
    G.name += (G.name.empty() ? "" : " + ") + P.name;
    for (int w = 0; w < ell; ++w) G.dims[w] += P.dims[w];
  }
  for (int w = 0; w < ell; ++w) {
    int up = C.mod(w + 2), dn = C.mod(w - 2);
    CMatrix e(G.dims[up], G.dims[w]), f(G.dims[dn], G.dims[w]);
    int r_up = 0, r_dn = 0, c0 = 0;
    for (const auto& P : parts) {
      for (int i = 0; i < P.dims[up]; ++i)
        for (int j = 0; j < P.dims[w]; ++j) e(r_up + i, c0 + j) = P.E[w](i, j);
      for (int i = 0; i < P.dims[dn]; ++i)
        for (int j = 0; j < P.dims[w]; ++j) f(r_dn + i, c0 + j) = P.F[w](i, j);
      r_up += P.dims[up];
      r_dn += P.dims[dn];
      c0 += P.dims[w];
    }
    G.E.push_back(std::move(e));
    G.F.push_back(std::move(f));
  }
  return G;
}

CVec flatten(const UqMap& X) {
  CVec v;
  for (const auto& m : X)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

UqMap compose(const UqMap& a, const UqMap& b) {
  UqMap out;
  for (std::size_t w = 0; w < a.size(); ++w) out.push_back(a[w] * b[w]);
  return out;
}

// F^i E^c v for v in V[w].
CVec lower_raise(const UqContext& C, const UqModule& V, int w, CVec v, int c, int i, int* out_w) {
  for (int t = 0; t < c; ++t) {
    v = V.E[C.mod(w)].apply(v);
    w += 2;
  }
  for (int t = 0; t < i; ++t) {
    v = V.F[C.mod(w)].apply(v);
    w -= 2;
  }
  *out_w = C.mod(w);
  return v;
}

// Matrix elements of V at the bidegree (kappa, w): one row per pair (xi_a, v_b),
// indexed by c, with F^i K^b E^c determined by c.
std::vector<CVec> phi_rows(const UqContext& C, const UqModule& V, int kappa, int w) {
  int ell = C.ell();
  int inv2 = (ell + 1) / 2;
  std::vector<CVec> rows;
  for (int a = 0; a < V.dims[kappa]; ++a)
    for (int b = 0; b < V.dims[w]; ++b) rows.push_back(CVec(ell, Cyc(0)));
  for (int c = 0; c < ell; ++c) {
    int i = C.mod((w + 2 * c - kappa) * inv2);
    for (int b = 0; b < V.dims[w]; ++b) {
      int tw = 0;
      CVec u = lower_raise(C, V, w, unit_c(V.dims[w], b), c, i, &tw);
      if (tw != kappa) throw std::logic_error("phi_rows: weight mismatch");
      for (int a = 0; a < V.dims[kappa]; ++a) rows[a * V.dims[w] + b][c] = u[a];
    }
  }
  return rows;
}

std::vector<int> support(const UqContext& C, int x) {
  std::vector<int> s;
  for (int i = 0; i <= x; ++i) s.push_back(C.mod(x - 2 * i));
  return s;
}

}  // namespace

UqModule simple_uq(const UqContext& C, int mu) {
  if (mu < 0 || mu >= C.ell()) throw std::invalid_argument("simple_uq: 0 <= mu < ell");
  Flat fl;
  for (int i = 0; i <= mu; ++i) fl.add(mu - 2 * i);
  for (int i = 0; i <= mu; ++i) {
    if (i < mu) fl.f[i].push_back({i + 1, Cyc(1)});
    if (i > 0) fl.e[i].push_back({i - 1, C.qint(i) * C.qint(mu - i + 1)});
  }
  return from_flat(C, fl, "L(" + std::to_string(mu) + ")");
}

UqModule baby_verma_uq(const UqContext& C, int mu) {
  int ell = C.ell();
  Flat fl;
  for (int i = 0; i < ell; ++i) fl.add(mu - 2 * i);
  for (int i = 0; i < ell; ++i) {
    if (i + 1 < ell) fl.f[i].push_back({i + 1, Cyc(1)});
    if (i > 0) fl.e[i].push_back({i - 1, C.qint(i) * C.qint(mu - i + 1)});
  }
  return from_flat(C, fl, "Z(" + std::to_string(mu) + ")");
}

UqModule twist_omega(const UqContext& C, const UqModule& V) {
  int ell = C.ell();
  UqModule T;
  T.name = V.name + "^omega";
  for (int w = 0; w < ell; ++w) T.dims.push_back(V.dims[C.mod(-w)]);
  for (int w = 0; w < ell; ++w) {
    T.E.push_back(V.F[C.mod(-w)]);
    T.F.push_back(V.E[C.mod(-w)]);
  }
  return T;
}

UqModule weight_ideal_uq(const UqContext& C, int mu) {
  int ell = C.ell();
  Flat fl;
  auto idx = [&](int a, int c) { return a * ell + c; };
  for (int a = 0; a < ell; ++a)
    for (int c = 0; c < ell; ++c) fl.add(mu + 2 * c - 2 * a);
  Cyc d = C.qpow(1) - C.qpow(-1);
  for (int a = 0; a < ell; ++a)
    for (int c = 0; c < ell; ++c) {
      int i = idx(a, c);
      if (a + 1 < ell) fl.f[i].push_back({idx(a + 1, c), Cyc(1)});
      if (c + 1 < ell) fl.e[i].push_back({idx(a, c + 1), Cyc(1)});
      // E F^a = F^a E + [a] F^(a-1) (q^(1-a) K - q^(a-1) K^-1) / (q - q^-1)
      if (a > 0) {
        int nu = mu + 2 * c;
        Cyc s = C.qint(a) * (C.qpow(nu + 1 - a) - C.qpow(-nu - 1 + a)) / d;
        if (!s.zero()) fl.e[i].push_back({idx(a - 1, c), s});
      }
    }
  return from_flat(C, fl, "u e(" + std::to_string(mu) + ")");
}

UqModule projective_uq(const UqContext& C, int mu) {
  if (mu < 0 || mu >= C.ell()) throw std::invalid_argument("projective_uq: 0 <= mu < ell");
  UqModule V = weight_ideal_uq(C, mu);
  Cyc target = C.casimir_value(mu);
  std::vector<std::vector<CVec>> basis(C.ell());
  for (int w = 0; w < C.ell(); ++w) {
    int n = V.dims[w];
    CMatrix cas = V.F[C.mod(w + 2)] * V.E[w];
    Cyc s = C.casimir_value(w);
    for (int i = 0; i < n; ++i) cas(i, i) += s;
    basis[w] = generalized_eigenspace(cas, target).row_list();
  }
  return restrict_to(C, V, basis, "P(" + std::to_string(mu) + ")");
}

bool check_uq_relations(const UqContext& C, const UqModule& V) {
  int ell = C.ell();
  for (int w = 0; w < ell; ++w) {
    CMatrix ef = V.E[C.mod(w - 2)] * V.F[w];
    CMatrix fe = V.F[C.mod(w + 2)] * V.E[w];
    CMatrix d = ef - fe;
    Cyc k = C.qint(w);
    for (int i = 0; i < V.dims[w]; ++i)
      for (int j = 0; j < V.dims[w]; ++j)
        if (!(d(i, j) == (i == j ? k : Cyc(0)))) return false;
    CMatrix Ep = CMatrix::identity(V.dims[w]), Fp = CMatrix::identity(V.dims[w]);
    int we = w, wf = w;
    for (int t = 0; t < ell; ++t) {
      Ep = V.E[C.mod(we)] * Ep;
      Fp = V.F[C.mod(wf)] * Fp;
      we += 2;
      wf -= 2;
    }
    if (!Ep.is_zero_matrix() || !Fp.is_zero_matrix()) return false;
  }
  return true;
}

std::vector<UqMap> hom_uq(const UqModule& V, const UqModule& W) {
  int ell = static_cast<int>(V.dims.size());
  auto md = [&](int w) { return ((w % ell) + ell) % ell; };
  std::vector<int> off(ell + 1, 0);
  for (int w = 0; w < ell; ++w) off[w + 1] = off[w] + W.dims[w] * V.dims[w];
  int n = off[ell];
  auto var = [&](int w, int r, int s) { return off[w] + r * V.dims[w] + s; };
  std::vector<CVec> eqs;
  for (int w = 0; w < ell; ++w)
    for (int step : {2, -2}) {
      int t = md(w + step);
      const CMatrix& AV = step > 0 ? V.E[w] : V.F[w];
      const CMatrix& AW = step > 0 ? W.E[w] : W.F[w];
      // X_t AV - AW X_w = 0, entries (r, s) with r in W[t], s in V[w].
      for (int r = 0; r < W.dims[t]; ++r)
        for (int s = 0; s < V.dims[w]; ++s) {
          CVec eq(n, Cyc(0));
          bool any = false;
          for (int k = 0; k < V.dims[t]; ++k)
            if (!AV(k, s).zero()) {
              eq[var(t, r, k)] += AV(k, s);
              any = true;
            }
          for (int k = 0; k < W.dims[w]; ++k)
            if (!AW(r, k).zero()) {
              eq[var(w, k, s)] -= AW(r, k);
              any = true;
            }
          if (any) eqs.push_back(std::move(eq));
        }
    }
  CMatrix sys = eqs.empty() ? CMatrix(0, n) : CMatrix::from_rows(eqs, n);
  std::vector<CVec> sols;
  if (eqs.empty()) {
    for (int i = 0; i < n; ++i) sols.push_back(unit_c(n, i));
  } else {
    sols = nullspace(sys).row_list();
  }
  std::vector<UqMap> out;
  for (const auto& x : sols) {
    UqMap m;
    for (int w = 0; w < ell; ++w) {
      CMatrix b(W.dims[w], V.dims[w]);
      for (int r = 0; r < W.dims[w]; ++r)
        for (int s = 0; s < V.dims[w]; ++s) b(r, s) = x[var(w, r, s)];
      m.push_back(std::move(b));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::map<int, int>> socle_layers_uq(const UqContext& C, const UqModule& V) {
  int ell = C.ell();
  std::vector<RowSpace<Cyc>> S;
  for (int w = 0; w < ell; ++w) S.emplace_back(V.dims[w]);
  std::vector<std::map<int, int>> layers;
  auto full = [&] {
    for (int w = 0; w < ell; ++w)
      if (S[w].dim() != static_cast<std::size_t>(V.dims[w])) return false;
    return true;
  };
  auto constraint = [&](const CMatrix& M, const RowSpace<Cyc>& T, std::vector<CVec>& rows) {
    if (M.rows() == 0) return;
    for (const auto& a : annihilator(T.basis(), M.rows())) {
      CVec r(M.cols(), Cyc(0));
      for (std::size_t x = 0; x < M.rows(); ++x)
        if (!a[x].zero())
          for (std::size_t y = 0; y < M.cols(); ++y) r[y] += a[x] * M(x, y);
      rows.push_back(std::move(r));
    }
  };
  while (!full()) {
    std::vector<RowSpace<Cyc>> next = S;
    std::map<int, int> layer;
    for (int w = 0; w < ell; ++w) {
      std::size_t d = V.dims[w];
      if (d == 0) continue;
      std::vector<CVec> rows;
      constraint(V.E[w], S[C.mod(w + 2)], rows);
      if (w + 1 < ell) {
        CMatrix Fp = CMatrix::identity(d);
        int cw = w;
        for (int t = 0; t <= w; ++t) {
          Fp = V.F[C.mod(cw)] * Fp;
          cw -= 2;
        }
        constraint(Fp, S[C.mod(cw)], rows);
      }
      std::vector<CVec> cand;
      if (rows.empty()) {
        for (std::size_t b = 0; b < d; ++b) cand.push_back(unit_c(d, b));
      } else {
        cand = nullspace(CMatrix::from_rows(rows, d)).row_list();
      }
      std::size_t before = next[w].dim();
      next[w].add_all(cand);
      if (next[w].dim() > before) layer[w] = static_cast<int>(next[w].dim() - before);
    }
    if (layer.empty()) throw std::runtime_error("socle_layers_uq: no progress");
    for (bool grew = true; grew;) {
      grew = false;
      for (int w = 0; w < ell; ++w) {
        auto vs = next[w].basis();
        for (const auto& v : vs)
          if (next[C.mod(w - 2)].add(V.F[w].apply(v))) grew = true;
      }
    }
    S = std::move(next);
    layers.push_back(layer);
  }
  return {layers.rbegin(), layers.rend()};
}

std::vector<std::vector<int>> block_orbits(int ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and >= 3");
  std::vector<std::vector<int>> out;
  for (int mu = 0; mu <= (ell - 3) / 2; ++mu) out.push_back({mu, ell - mu - 2});
  out.push_back({ell - 1});
  return out;
}

namespace {

std::vector<int> orbit_of(int ell, int mu) {
  for (const auto& o : block_orbits(ell))
    for (int x : o)
      if (x == mu) return o;
  throw std::invalid_argument("weight outside 0..ell-1");
}

}  // namespace

UqEndo endo_algebra_uq(const UqContext& C, int mu) {
  auto orbit = orbit_of(C.ell(), mu);
  std::vector<UqModule> parts;
  for (int x : orbit) parts.push_back(projective_uq(C, x));
  UqModule G = direct_sum_uq(C, parts);
  auto A = hom_uq(G, G);
  UqEndo out;
  out.dim = static_cast<int>(A.size());
  // rad A = {a : tr(ab) = 0 for all b}, as A acts faithfully on G.
  std::size_t n = A.size();
  CMatrix T(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Cyc tr = 0;
      auto p = compose(A[s], A[t]);
      for (const auto& m : p)
        for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
      T(s, t) = tr;
    }
  std::vector<UqMap> J;
  for (const auto& c : nullspace(T).row_list()) {
    UqMap m;
    for (std::size_t w = 0; w < A[0].size(); ++w) {
      CMatrix b(A[0][w].rows(), A[0][w].cols());
      for (std::size_t s = 0; s < n; ++s)
        if (!c[s].zero()) b = b + A[s][w].scaled(c[s]);
      m.push_back(std::move(b));
    }
    J.push_back(std::move(m));
  }
  auto products = [&](const std::vector<UqMap>& X, const std::vector<UqMap>& Y) {
    std::vector<UqMap> out;
    RowSpace<Cyc> span(flatten(A[0]).size());
    for (const auto& x : X)
      for (const auto& y : Y) {
        auto p = compose(x, y);
        if (span.add(flatten(p))) out.push_back(p);
      }
    return out;
  };
  auto J2 = products(J, J);
  auto J3 = products(J2, J);
  out.radical_cubed_zero = J3.empty();
  out.graded_dims = {out.dim - static_cast<int>(J.size())};
  if (!J.empty()) out.graded_dims.push_back(static_cast<int>(J.size() - J2.size()));
  if (!J2.empty()) out.graded_dims.push_back(static_cast<int>(J2.size() - J3.size()));
  return out;
}

std::vector<UqLayer> expected_dual_layers(const std::vector<int>& orbit) {
  if (orbit.size() == 1) return {UqLayer{{{orbit[0], orbit[0]}, 1}}};
  int x = orbit[0], y = orbit[1];
  UqLayer outer{{{x, x}, 1}, {{y, y}, 1}};
  UqLayer middle{{{x, y}, 2}, {{y, x}, 2}};
  return {outer, middle, outer};
}

UqDualReport block_dual_dims(int ell, bool check_kernel) {
  UqContext C(ell);
  UqDualReport rep;
  rep.ell = ell;
  std::vector<std::vector<RowSpace<Cyc>>> all(ell);
  for (int k = 0; k < ell; ++k)
    for (int w = 0; w < ell; ++w) all[k].emplace_back(ell);

  for (const auto& orbit : block_orbits(ell)) {
    UqBlockDual B;
    B.orbit = orbit;
    std::vector<UqModule> parts;
    for (int x : orbit) parts.push_back(projective_uq(C, x));
    UqModule G = direct_sum_uq(C, parts);
    auto A = hom_uq(G, G);

    // Matrix element filtration by Loewy length.
    std::vector<std::vector<UqModule>> by_length(3);
    for (int x : orbit) {
      by_length[0].push_back(simple_uq(C, x));
      if (orbit.size() > 1) {
        auto Z = baby_verma_uq(C, x);
        by_length[1].push_back(twist_omega(C, Z));
        by_length[1].push_back(std::move(Z));
      }
    }
    if (orbit.size() > 1) by_length[2].push_back(G);
    else by_length.resize(1);

    std::vector<std::vector<RowSpace<Cyc>>> filt;
    for (int k = 0; k < ell; ++k) {
      filt.emplace_back();
      for (int w = 0; w < ell; ++w) filt.back().emplace_back(ell);
    }
    std::vector<std::vector<std::vector<int>>> tables;
    for (const auto& mods : by_length) {
      for (const auto& V : mods)
        for (int k = 0; k < ell; ++k)
          for (int w = 0; w < ell; ++w) filt[k][w].add_all(phi_rows(C, V, k, w));
      std::vector<std::vector<int>> t(ell, std::vector<int>(ell));
      for (int k = 0; k < ell; ++k)
        for (int w = 0; w < ell; ++w) t[k][w] = static_cast<int>(filt[k][w].dim());
      tables.push_back(t);
    }

    B.kernel_checked = check_kernel;
    B.kernel_ok = true;
    for (int k = 0; k < ell; ++k)
      for (int w = 0; w < ell; ++w) {
        auto rows = phi_rows(C, G, k, w);
        std::size_t n = rows.size();
        if (n == 0) continue;
        RowSpace<Cyc> img(ell);
        img.add_all(rows);
        all[k][w].add_all(rows);
        B.dim += static_cast<int>(img.dim());
        if (img.dim() != filt[k][w].dim()) throw std::logic_error("filtration does not exhaust the block");
        // A-relations xi o a (x) v - xi (x) a v.
        int dk = G.dims[k], dw = G.dims[w];
        RowSpace<Cyc> R(n);
        for (const auto& a : A)
          for (int x = 0; x < dk; ++x)
            for (int y = 0; y < dw; ++y) {
              CVec t(n, Cyc(0));
              for (int z = 0; z < dk; ++z) t[z * dw + y] += a[k](x, z);
              for (int z = 0; z < dw; ++z) t[x * dw + z] -= a[w](z, y);
              R.add(t);
            }
        B.tensor_dim += static_cast<int>(n - R.dim());
        if (check_kernel) {
          CMatrix M(ell, n);
          for (std::size_t p = 0; p < n; ++p)
            for (int c = 0; c < ell; ++c) M(c, p) = rows[p][c];
          RowSpace<Cyc> ker(n);
          ker.add_all(nullspace(M).row_list());
          if (!(ker == R)) B.kernel_ok = false;
        }
      }

    // Layers: differences of the filtration tables, read off at highest weights;
    // the simple supports are disjoint so the reading must reproduce the table.
    std::vector<std::vector<int>> prev(ell, std::vector<int>(ell, 0));
    for (const auto& t : tables) {
      UqLayer layer;
      std::vector<std::vector<int>> rebuilt(ell, std::vector<int>(ell, 0));
      for (int x : orbit)
        for (int y : orbit) {
          int m = t[x][y] - prev[x][y];
          if (m == 0) continue;
          layer[{x, y}] = m;
          for (int a : support(C, x))
            for (int b : support(C, y)) rebuilt[a][b] += m;
        }
      int dim = 0;
      for (int k = 0; k < ell; ++k)
        for (int w = 0; w < ell; ++w) {
          dim += t[k][w] - prev[k][w];
          if (rebuilt[k][w] != t[k][w] - prev[k][w]) layer[{-1, -1}] = 1;  // not semisimple-shaped
        }
      B.layers.push_back(layer);
      B.layer_dims.push_back(dim);
      prev = t;
    }
    rep.total += B.dim;
    rep.blocks.push_back(std::move(B));
  }
  for (int k = 0; k < ell; ++k)
    for (int w = 0; w < ell; ++w) rep.union_rank += static_cast<int>(all[k][w].dim());
  return rep;
}

}  // namespace bigproj
