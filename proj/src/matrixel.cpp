#include "bigproj/matrixel.hpp"

#include <array>
#include <set>
#include <stdexcept>

namespace bigproj {

namespace {

QVec basis_vec(std::size_t n, std::size_t i) {
  QVec v(n, Q(0));
  v[i] = 1;
  return v;
}

Q pair(const QVec& xi, const QVec& w) {
  Q s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!bigproj::is_zero(xi[i]) && !bigproj::is_zero(w[i])) s += xi[i] * w[i];
  return s;
}

std::vector<int> pbw_word(const LieIndex& li, const RootExps& a, bool lowering) {
  std::vector<int> w;
  for (int k = 0; k < li.m; ++k)
    for (int t = 0; t < a[k]; ++t) w.push_back(lowering ? li.F(k) : li.E(k));
  return w;
}

Weight exps_weight(const RootSystem& rs, const RootExps& a) {
  Weight w(rs.rank(), 0);
  for (int k = 0; k < rs.num_positive(); ++k)
    if (a[k] != 0) w = w + a[k] * rs.root(k).weight;
  return w;
}

// Independent functionals chosen from a spanning list, with coordinates for every
// member of the list.
struct Span {
  FunctionalCoords fc;
  std::vector<QVec> member;  // coordinates of each spanning functional in fc
  std::vector<std::size_t> chosen;
  CoordSolver<Q> solver;
  int depth = 0;

  explicit Span(const std::vector<Functional>& fs, int d) : depth(d) {
    for (const auto& f : fs) fc.register_keys(f);
    RowSpace<Q> rs(fc.size());
    std::vector<QVec> picked;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      member.push_back(fc.coords(fs[i]));
      if (rs.add(member.back())) {
        chosen.push_back(i);
        picked.push_back(member.back());
      }
    }
    solver = CoordSolver<Q>(picked, fc.size());
  }
  std::size_t dim() const { return chosen.size(); }
  QVec coords_of_member(std::size_t i) const { return solver.coords_or_throw(member[i]); }
  // Coordinates of an arbitrary functional, or nullopt if it is outside the span.
  std::optional<QVec> coords(const Functional& f) const {
    QVec v(fc.size(), Q(0));
    for (const auto& [key, w] : f.coeff)
      for (const auto& [nu, c] : w) {
        Functional one;
        one.add(key.first, key.second, nu, Q(1));
        try {
          auto e = fc.coords(one);
          for (std::size_t i = 0; i < e.size(); ++i)
            if (!bigproj::is_zero(e[i])) v[i] += c * e[i];
        } catch (const std::out_of_range&) {
          return std::nullopt;
        }
      }
    return solver.coords(v);
  }
  std::vector<Functional> basis() const {
    std::vector<Functional> out;
    for (std::size_t i = 0; i < chosen.size(); ++i) out.push_back(fc.from_coords(member[chosen[i]], depth));
    return out;
  }
};

void check_sl2(Enveloping& U) {
  if (U.lie().rs().label() != "A1") throw std::invalid_argument("sl2 only");
}

// The block of lambda <= -1: P_lambda and the window top - 2i, i = 0..depth.
struct Sl2Block {
  int lambda = 0, top = 0, depth = 0;
  bool regular = false;
  WeightModule P;
  Sl2Block(Enveloping& U, int lam, int d) : lambda(lam), depth(d) {
    check_sl2(U);
    if (lam > -1) throw std::invalid_argument("needs an antidominant weight lambda <= -1");
    regular = lam != -1;
    top = regular ? -lam - 2 : -1;
    P = big_projective_sl2(U, lam, d);
  }
  int weight(int i) const { return top - 2 * i; }
};

// P*[kappa] (x) P[mu] modulo ker Phi, one cell per bidegree of the window.
struct Cell {
  int nk = 0, nm = 0;  // dims of P at kappa and mu
  std::vector<Functional> phi;  // Phi(xi_a (x) v_b), index a * nm + b
  std::optional<Span> span;
  std::size_t dim() const { return span ? span->dim() : 0; }
  // Coordinates in M of Phi(xi_a (x) v_b).
  QVec coords(int a, int b) const { return span->coords_of_member(a * nm + b); }
};

struct BlockCells {
  const Sl2Block& B;
  std::vector<std::vector<Cell>> cell;  // [i][j]
  explicit BlockCells(const Sl2Block& blk) : B(blk) {
    int n = B.depth + 1;
    cell.assign(n, std::vector<Cell>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Cell& c = cell[i][j];
        int ki = B.P.find({B.weight(i)}), kj = B.P.find({B.weight(j)});
        c.nk = ki < 0 ? 0 : B.P.dim(ki);
        c.nm = kj < 0 ? 0 : B.P.dim(kj);
        for (int a = 0; a < c.nk; ++a)
          for (int b = 0; b < c.nm; ++b)
            c.phi.push_back(
                matrix_element(B.P, ki, basis_vec(c.nk, a), kj, basis_vec(c.nm, b), B.depth));
        c.span.emplace(c.phi, B.depth);
      }
  }
  int n() const { return B.depth + 1; }
};

// Module over sl2 + sl2 on the window of cells. The left factor acts by left
// translation phi -> phi(X .), twisted by the transpose so that both factors are
// of highest weight type in the (kappa, mu) grading.
struct BiModule {
  int top = 0, depth = 0;
  std::vector<std::vector<int>> dim;
  // kind 0 raises kappa (i -> i-1), 1 lowers it (i -> i+1), 2 raises mu (j -> j-1),
  // 3 lowers it (j -> j+1). nullopt: target beyond the window.
  std::array<std::vector<std::vector<std::optional<QMatrix>>>, 4> op;
  int n() const { return depth + 1; }
  int wt(int i) const { return top - 2 * i; }
};

using Cells = std::vector<std::vector<RowSpace<Q>>>;

Cells zero_cells(const BiModule& N) {
  Cells c;
  for (int i = 0; i < N.n(); ++i) {
    c.emplace_back();
    for (int j = 0; j < N.n(); ++j) c.back().emplace_back(N.dim[i][j]);
  }
  return c;
}

bool cells_equal(const Cells& a, const Cells& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

bool cells_full(const BiModule& N, const Cells& c) {
  for (int i = 0; i < N.n(); ++i)
    for (int j = 0; j < N.n(); ++j)
      if (c[i][j].dim() != static_cast<std::size_t>(N.dim[i][j])) return false;
  return true;
}

BiModule build_bimodule(const BlockCells& bc) {
  const auto& B = bc.B;
  const auto& P = B.P;
  LieIndex li(P.rs());
  int e = li.E(0), f = li.F(0);
  BiModule N;
  N.top = B.top;
  N.depth = B.depth;
  int n = bc.n();
  N.dim.assign(n, std::vector<int>(n, 0));
  for (auto& o : N.op) o.assign(n, std::vector<std::optional<QMatrix>>(n));
  auto Pop = [&](int g, int w) -> QMatrix {
    int k = P.find({w});
    return P.op(g, k);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) N.dim[i][j] = static_cast<int>(bc.cell[i][j].dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cell& c = bc.cell[i][j];
      const auto& lifts = c.span->chosen;
      std::size_t d = c.dim();
      auto fill = [&](int kind, int ti, int tj, auto&& image) {
        if (ti < 0 || tj < 0) {
          N.op[kind][i][j] = QMatrix(0, d);
          return;
        }
        if (ti >= n || tj >= n) return;
        const Cell& t = bc.cell[ti][tj];
        QMatrix m(t.dim(), d);
        for (std::size_t col = 0; col < d; ++col) {
          int a = static_cast<int>(lifts[col]) / c.nm, b = static_cast<int>(lifts[col]) % c.nm;
          QVec v = image(t, a, b);
          for (std::size_t r = 0; r < t.dim(); ++r) m(r, col) = v[r];
        }
        N.op[kind][i][j] = std::move(m);
      };
      auto combo = [](const Cell& t, const std::vector<std::pair<std::pair<int, int>, Q>>& terms) {
        QVec v(t.dim(), Q(0));
        for (const auto& [ab, s] : terms) {
          if (bigproj::is_zero(s)) continue;
          auto x = t.coords(ab.first, ab.second);
          for (std::size_t r = 0; r < v.size(); ++r) v[r] += s * x[r];
        }
        return v;
      };
      int kap = B.weight(i), mu = B.weight(j);
      // Right factor: Phi(xi (x) X v).
      fill(2, i, j - 1, [&](const Cell& t, int a, int b) {
        QMatrix E = Pop(e, mu);
        std::vector<std::pair<std::pair<int, int>, Q>> terms;
        for (int r = 0; r < t.nm; ++r) terms.push_back({{a, r}, E(r, b)});
        return combo(t, terms);
      });
      fill(3, i, j + 1, [&](const Cell& t, int a, int b) {
        QMatrix F = Pop(f, mu);
        std::vector<std::pair<std::pair<int, int>, Q>> terms;
        for (int r = 0; r < t.nm; ++r) terms.push_back({{a, r}, F(r, b)});
        return combo(t, terms);
      });
      // Left factor: xi -> xi o f raises kappa, xi -> xi o e lowers it.
      fill(0, i - 1, j, [&](const Cell& t, int a, int b) {
        QMatrix F = Pop(f, kap + 2);  // P[kap + 2] -> P[kap]
        std::vector<std::pair<std::pair<int, int>, Q>> terms;
        for (int r = 0; r < t.nk; ++r) terms.push_back({{r, b}, F(a, r)});
        return combo(t, terms);
      });
      fill(1, i + 1, j, [&](const Cell& t, int a, int b) {
        QMatrix E = Pop(e, kap - 2);  // P[kap - 2] -> P[kap]
        std::vector<std::pair<std::pair<int, int>, Q>> terms;
        for (int r = 0; r < t.nk; ++r) terms.push_back({{r, b}, E(a, r)});
        return combo(t, terms);
      });
    }
  return N;
}

BiModule dual_bimodule(const BiModule& N) {
  BiModule D = N;
  int n = N.n();
  for (auto& o : D.op) o.assign(n, std::vector<std::optional<QMatrix>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto d = static_cast<std::size_t>(N.dim[i][j]);
      D.op[0][i][j] = i == 0 ? QMatrix(0, d) : N.op[1][i - 1][j]->transpose();
      if (i + 1 < n) D.op[1][i][j] = N.op[0][i + 1][j]->transpose();
      D.op[2][i][j] = j == 0 ? QMatrix(0, d) : N.op[3][i][j - 1]->transpose();
      if (j + 1 < n) D.op[3][i][j] = N.op[2][i][j + 1]->transpose();
    }
  return D;
}

// Rows whose kernel is {v : M v in S}.
void constraint_rows(const QMatrix& M, const RowSpace<Q>& S, std::vector<QVec>& rows) {
  if (M.rows() == 0) return;
  auto ann = annihilator(S.basis(), M.rows());
  for (const auto& a : ann) {
    QVec r(M.cols(), Q(0));
    for (std::size_t x = 0; x < M.rows(); ++x)
      if (!bigproj::is_zero(a[x]))
        for (std::size_t y = 0; y < M.cols(); ++y) r[y] += a[x] * M(x, y);
    rows.push_back(std::move(r));
  }
}

// Socle series 0 = S_0 < S_1 < ... of a bimodule: at each step add the vectors
// that are highest weight modulo S and generate simple quotients, then their
// lowering strings.
std::vector<Cells> socle_series(const BiModule& N) {
  int n = N.n();
  std::vector<Cells> series{zero_cells(N)};
  for (int step = 0; step < 4 * n + 4; ++step) {
    const Cells& S = series.back();
    Cells C = S;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto d = static_cast<std::size_t>(N.dim[i][j]);
        if (d == 0) continue;
        std::vector<QVec> rows;
        if (i > 0) constraint_rows(*N.op[0][i][j], S[i - 1][j], rows);
        if (j > 0) constraint_rows(*N.op[2][i][j], S[i][j - 1], rows);
        // Finite strings on the dominant side.
        auto string_rows = [&](int kind, int len, bool left) {
          QMatrix M = QMatrix::identity(d);
          int ci = i, cj = j;
          for (int t = 0; t < len; ++t) {
            const auto& o = N.op[kind][ci][cj];
            if (!o) throw std::runtime_error("socle series: increase the depth");
            M = *o * M;
            (left ? ci : cj) += 1;
          }
          constraint_rows(M, S[ci][cj], rows);
        };
        if (N.wt(i) >= 0) string_rows(1, N.wt(i) + 1, true);
        if (N.wt(j) >= 0) string_rows(3, N.wt(j) + 1, false);
        if (rows.empty()) {
          for (std::size_t b = 0; b < d; ++b) C[i][j].add(basis_vec(d, b));
        } else {
          C[i][j].add_all(nullspace(QMatrix::from_rows(rows, d)).row_list());
        }
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto vs = C[i][j].basis();
        for (const auto& v : vs) {
          if (i + 1 < n && N.op[1][i][j]) C[i + 1][j].add(N.op[1][i][j]->apply(v));
          if (j + 1 < n && N.op[3][i][j]) C[i][j + 1].add(N.op[3][i][j]->apply(v));
        }
      }
    if (cells_equal(C, S)) break;
    series.push_back(std::move(C));
    if (cells_full(N, series.back())) break;
  }
  if (!cells_full(N, series.back())) throw std::runtime_error("socle series did not exhaust the module");
  return series;
}

Cells annihilator_cells(const BiModule& N, const Cells& T) {
  Cells out = zero_cells(N);
  for (int i = 0; i < N.n(); ++i)
    for (int j = 0; j < N.n(); ++j)
      out[i][j].add_all(annihilator(T[i][j].basis(), static_cast<std::size_t>(N.dim[i][j])));
  return out;
}

// Matrix elements of V as a family of subspaces of M in the cell coordinates.
Cells cells_of(const BlockCells& bc, const BiModule& N, const WeightModule& V) {
  Cells out = zero_cells(N);
  const auto& B = bc.B;
  for (int i = 0; i < bc.n(); ++i)
    for (int j = 0; j < bc.n(); ++j) {
      int ki = V.find({B.weight(i)}), kj = V.find({B.weight(j)});
      if (ki < 0 || kj < 0) continue;
      for (int a = 0; a < V.dim(ki); ++a)
        for (int b = 0; b < V.dim(kj); ++b) {
          auto f = matrix_element(V, ki, basis_vec(V.dim(ki), a), kj, basis_vec(V.dim(kj), b), B.depth);
          auto c = bc.cell[i][j].span->coords(f);
          if (!c) throw std::runtime_error(V.name() + ": matrix element outside the block");
          out[i][j].add(*c);
        }
    }
  return out;
}

Cells cells_sum(const Cells& a, const Cells& b) {
  Cells out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j].add_all(b[i][j].basis());
  return out;
}

SlTable cells_table(const BlockCells& bc, const Cells& c) {
  SlTable t;
  for (int i = 0; i < bc.n(); ++i)
    for (int j = 0; j < bc.n(); ++j)
      if (c[i][j].dim() > 0) t[{bc.B.weight(i), bc.B.weight(j)}] = static_cast<long long>(c[i][j].dim());
  return t;
}

MatrixElementSpace space_of(const BlockCells& bc, const Cells& c, const std::string& prov) {
  MatrixElementSpace out;
  out.provenance = prov;
  out.depth = bc.B.depth;
  for (int i = 0; i < bc.n(); ++i)
    for (int j = 0; j < bc.n(); ++j) {
      const auto& cell = bc.cell[i][j];
      if (c[i][j].dim() == 0) continue;
      auto basis = cell.span->basis();
      auto& slot = out.basis[{Weight{bc.B.weight(i)}, Weight{bc.B.weight(j)}}];
      for (const auto& v : c[i][j].basis()) {
        Functional f;
        f.depth = bc.B.depth;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (!bigproj::is_zero(v[k])) f = f + basis[k].scaled(v[k]);
        f.depth = bc.B.depth;
        slot.push_back(f);
      }
    }
  return out;
}

std::map<std::pair<int, int>, long long> subtract(std::map<std::pair<int, int>, long long> a,
                                                  const std::map<std::pair<int, int>, long long>& b) {
  for (const auto& [k, v] : b) {
    a[k] -= v;
    if (a[k] == 0) a.erase(k);
  }
  return a;
}

QMatrix map_at(const ModuleMap& f, const WeightModule& V, const WeightModule& W, int w) {
  int kv = V.find({w}), kw = W.find({w});
  std::size_t nv = kv < 0 ? 0 : V.dim(kv), nw = kw < 0 ? 0 : W.dim(kw);
  if (nv == 0 || nw == 0) return QMatrix(nw, nv);
  return f.blocks.at(kv);
}

}  // namespace

Functional matrix_element(const WeightModule& V, int kxi, const QVec& xi, int kv, const QVec& v,
                          int depth) {
  const auto& rs = V.rs();
  LieIndex li(rs);
  Functional out;
  out.depth = depth;
  const Weight kappa = V.weight(kxi);
  auto mons = root_monomials(rs, depth);
  for (const auto& c : mons) {
    int kn = -1;
    auto w = V.apply_word(pbw_word(li, c, false), kv, v, &kn);
    if (!w) throw std::runtime_error("matrix_element: raising beyond the window");
    if (w->empty() || kn < 0) continue;
    Weight nu = V.weight(kn);
    for (const auto& a : mons) {
      if (nu - exps_weight(rs, a) != kappa) continue;
      int kk = -1;
      auto u = V.apply_word(pbw_word(li, a, true), kn, *w, &kk);
      if (!u) throw std::runtime_error("matrix_element: lowering beyond the window");
      if (u->empty()) continue;
      out.add(a, c, nu, pair(xi, *u));
    }
  }
  return out;
}

std::map<Bidegree, int> MatrixElementSpace::dims() const {
  std::map<Bidegree, int> d;
  for (const auto& [k, b] : basis)
    if (!b.empty()) d[k] = static_cast<int>(b.size());
  return d;
}

std::size_t MatrixElementSpace::total_dim() const {
  std::size_t s = 0;
  for (const auto& [k, b] : basis) s += b.size();
  return s;
}

MatrixElementSpace matrix_elements_of(const WeightModule& V, int depth) {
  MatrixElementSpace out;
  out.provenance = V.name();
  out.depth = depth;
  for (int ki = 0; ki < V.num_weights(); ++ki)
    for (int kj = 0; kj < V.num_weights(); ++kj) {
      if (!V.in_window(V.weight(ki)) || !V.in_window(V.weight(kj))) continue;
      std::vector<Functional> fs;
      for (int a = 0; a < V.dim(ki); ++a)
        for (int b = 0; b < V.dim(kj); ++b)
          fs.push_back(matrix_element(V, ki, basis_vec(V.dim(ki), a), kj, basis_vec(V.dim(kj), b), depth));
      if (fs.empty()) continue;
      Span s(fs, depth);
      if (s.dim() > 0) out.basis[{V.weight(ki), V.weight(kj)}] = s.basis();
    }
  return out;
}

MatrixElementSpace span_sum(const MatrixElementSpace& a, const MatrixElementSpace& b) {
  MatrixElementSpace out;
  out.provenance = a.provenance + " + " + b.provenance;
  out.depth = std::min(a.depth, b.depth);
  std::set<Bidegree> keys;
  for (const auto& [k, v] : a.basis) keys.insert(k);
  for (const auto& [k, v] : b.basis) keys.insert(k);
  for (const auto& k : keys) {
    std::vector<Functional> fs;
    if (a.basis.count(k)) fs = a.basis.at(k);
    if (b.basis.count(k)) fs.insert(fs.end(), b.basis.at(k).begin(), b.basis.at(k).end());
    Span s(fs, out.depth);
    if (s.dim() > 0) out.basis[k] = s.basis();
  }
  return out;
}

bool contains(const MatrixElementSpace& a, const MatrixElementSpace& b) {
  for (const auto& [k, fs] : b.basis) {
    if (fs.empty()) continue;
    auto it = a.basis.find(k);
    if (it == a.basis.end()) return false;
    Span s(it->second, a.depth);
    for (const auto& f : fs)
      if (!s.coords(f)) return false;
  }
  return true;
}

std::map<std::pair<int, int>, long long> peel_sl2(SlTable table, int top, int depth) {
  int bottom = top - 2 * depth;
  auto weights = [&](int x) {
    std::vector<int> w;
    int low = x >= 0 ? -x : bottom;
    for (int t = x; t >= std::max(low, bottom); t -= 2) w.push_back(t);
    return w;
  };
  std::map<std::pair<int, int>, long long> mult;
  for (;;) {
    for (auto it = table.begin(); it != table.end();)
      it = it->second == 0 ? table.erase(it) : std::next(it);
    if (table.empty()) break;
    auto [key, m] = *table.rbegin();
    if (m < 0) throw std::runtime_error("peel_sl2: not a character");
    mult[key] += m;
    for (int x : weights(key.first))
      for (int y : weights(key.second)) table[{x, y}] -= m;
  }
  return mult;
}

SlTable sl2_table(const std::map<Bidegree, int>& dims) {
  SlTable t;
  for (const auto& [k, d] : dims) t[{k.first.at(0), k.second.at(0)}] = d;
  return t;
}

long long total(const std::map<std::pair<int, int>, long long>& mult) {
  long long s = 0;
  for (const auto& [k, v] : mult) s += v;
  return s;
}

MatrixElementSpace block_space(Enveloping& U, int lambda, int depth) {
  Sl2Block B(U, lambda, depth);
  BlockCells bc(B);
  MatrixElementSpace out;
  out.provenance = B.P.name();
  out.depth = depth;
  for (int i = 0; i < bc.n(); ++i)
    for (int j = 0; j < bc.n(); ++j)
      if (bc.cell[i][j].dim() > 0)
        out.basis[{Weight{B.weight(i)}, Weight{B.weight(j)}}] = bc.cell[i][j].span->basis();
  return out;
}

KernelReport kernel_vs_ideal_sl2(Enveloping& U, int lambda, int depth) {
  Sl2Block B(U, lambda, depth);
  BlockCells bc(B);
  auto omega = U.casimir_sl2();
  Q chi = U.casimir_eigenvalue({lambda});
  KernelReport rep;
  rep.equal_everywhere = true;
  rep.ideal_in_kernel = true;
  std::map<int, QMatrix> nil;  // (Omega - chi) on P[w]
  for (int i = 0; i < bc.n(); ++i) {
    int k = B.P.find({B.weight(i)});
    if (k < 0) continue;
    auto m = element_matrix(B.P, omega, k);
    if (!m) throw std::runtime_error("kernel_vs_ideal_sl2: Casimir beyond the window");
    nil[B.weight(i)] = *m - QMatrix::identity(m->rows()).scaled(chi);
  }
  for (int i = 0; i < bc.n(); ++i)
    for (int j = 0; j < bc.n(); ++j) {
      const Cell& c = bc.cell[i][j];
      std::size_t n = static_cast<std::size_t>(c.nk * c.nm);
      if (n == 0) continue;
      const auto& fc = c.span->fc;
      QMatrix A(fc.size(), n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < fc.size(); ++r) A(r, p) = c.span->member[p][r];
      RowSpace<Q> ker(n);
      ker.add_all(nullspace(A).row_list());
      RowSpace<Q> J(n);
      QMatrix Nk = nil.at(B.weight(i)), Nm = nil.at(B.weight(j));
      for (int e = 1; e <= 2; ++e) {
        QMatrix Zk = matrix_power(Nk, e), Zm = matrix_power(Nm, e);
        for (int a = 0; a < c.nk; ++a)
          for (int b = 0; b < c.nm; ++b) {
            QVec t(n, Q(0));
            for (int x = 0; x < c.nk; ++x) t[x * c.nm + b] += Zk(a, x);
            for (int y = 0; y < c.nm; ++y) t[a * c.nm + y] -= Zm(y, b);
            J.add(t);
          }
      }
      if (!ker.includes(J)) rep.ideal_in_kernel = false;
      if (!(ker == J)) rep.equal_everywhere = false;
      if (ker.dim() > 0) rep.kernel_dims[{B.weight(i), B.weight(j)}] = static_cast<long long>(ker.dim());
    }
  rep.constituents = peel_sl2(rep.kernel_dims, B.top, depth);
  rep.constituent_count = total(rep.constituents);
  rep.constituent_types = rep.constituents.size();
  return rep;
}

LoewyReport loewy_filtration_sl2(Enveloping& U, int lambda, int depth) {
  Sl2Block B(U, lambda, depth);
  if (!B.regular) throw std::invalid_argument("loewy_filtration_sl2 needs a regular block");
  BlockCells bc(B);
  BiModule N = build_bimodule(bc);
  const auto& g = U.lie();

  std::vector<Cells> filt;
  Cells m1 = cells_sum(cells_of(bc, N, simple_module(g, {B.top}, depth)),
                       cells_of(bc, N, verma(U, {lambda}, depth)));
  Cells m2 = cells_sum(m1, cells_sum(cells_of(bc, N, verma(U, {B.top}, depth)),
                                     cells_of(bc, N, contragredient_verma(U, {B.top}, depth))));
  Cells m3 = cells_sum(m2, cells_of(bc, N, B.P));
  filt = {m1, m2, m3};

  LoewyReport rep;
  std::map<std::pair<int, int>, long long> prev;
  for (std::size_t k = 0; k < filt.size(); ++k) {
    rep.filtration.push_back(space_of(bc, filt[k], "M^(" + std::to_string(k + 1) + ")"));
    auto mult = peel_sl2(cells_table(bc, filt[k]), B.top, depth);
    rep.layers.push_back(subtract(mult, prev));
    rep.layer_sizes.push_back(total(rep.layers.back()));
    prev = mult;
  }

  auto soc = socle_series(N);
  auto dual_soc = socle_series(dual_bimodule(N));
  rep.loewy_length = static_cast<int>(soc.size()) - 1;
  int L = rep.loewy_length;
  rep.socle_matches = L == static_cast<int>(filt.size()) && cells_full(N, filt.back());
  rep.radical_matches = rep.socle_matches && static_cast<int>(dual_soc.size()) - 1 == L;
  for (int k = 1; k <= L && rep.socle_matches; ++k)
    rep.socle_matches = cells_equal(soc[k], filt[k - 1]);
  // rad^j M = annihilator of soc^j of the dual; M^(k) should be rad^(L - k).
  for (int k = 1; k <= L && rep.radical_matches; ++k)
    rep.radical_matches = cells_equal(annihilator_cells(N, dual_soc[L - k]), filt[k - 1]);
  return rep;
}

EndoAlgebra endo_algebra_sl2(Enveloping& U, int lambda, int depth) {
  Sl2Block B(U, lambda, depth);
  auto Pb = [&](int d) { return big_projective_sl2(U, lambda, d); };
  EndoAlgebra out;
  auto endP = hom_space_certified(Pb, Pb, depth);
  if (!B.regular) {
    out.dim = static_cast<int>(endP.size());
    out.graded_dims = {out.dim};
    return out;
  }
  auto Mb = [&](int d) { return verma(U, {B.top}, d); };
  auto endM = hom_space_certified(Mb, Mb, depth);
  auto iotas = hom_space_certified(Mb, Pb, depth);
  auto taus = hom_space_certified(Pb, Mb, depth);
  out.dim = static_cast<int>(endP.size() + endM.size() + iotas.size() + taus.size());
  out.graded_dims = {2, static_cast<int>(iotas.size() + taus.size()),
                     static_cast<int>(endP.size() + endM.size()) - 2};
  if (iotas.size() != 1 || taus.size() != 1) return out;
  WeightModule P = Pb(depth), M = Mb(depth);
  ModuleMap Qm = compose(iotas[0], taus[0], M);
  out.q_nonzero = !is_zero_map(Qm);
  out.q_squared_zero = is_zero_map(compose(Qm, Qm, P));
  out.tau_iota_zero = is_zero_map(compose(taus[0], iotas[0], P));
  auto tf = trace_free_part(endP, P);
  if (tf.size() == 1 && out.q_nonzero) {
    // Q and the trace-free generator are proportional.
    bool prop = true;
    Q ratio = 0;
    for (std::size_t k = 0; k < Qm.blocks.size() && prop; ++k) {
      const auto& a = Qm.blocks[k];
      const auto& b = tf[0].blocks[k];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t s = 0; s < a.cols(); ++s) {
          if (bigproj::is_zero(b(r, s))) {
            if (!bigproj::is_zero(a(r, s))) prop = false;
            continue;
          }
          Q q = a(r, s) / b(r, s);
          if (bigproj::is_zero(ratio)) ratio = q;
          else if (q != ratio) prop = false;
        }
    }
    out.q_is_iota_tau = prop && !bigproj::is_zero(ratio);
  }
  return out;
}

KoszulReport koszul_tensor_check_sl2(Enveloping& U, int lambda, int depth) {
  Sl2Block B(U, lambda, depth);
  if (!B.regular) throw std::invalid_argument("koszul_tensor_check_sl2 needs a regular block");
  BlockCells bc(B);
  auto Pb = [&](int d) { return big_projective_sl2(U, lambda, d); };
  auto Mb = [&](int d) { return verma(U, {B.top}, d); };
  const WeightModule& P = B.P;
  WeightModule M = Mb(depth);
  auto endP = hom_space_certified(Pb, Pb, depth);
  auto endM = hom_space_certified(Mb, Mb, depth);
  auto iotas = hom_space_certified(Mb, Pb, depth);
  auto taus = hom_space_certified(Pb, Mb, depth);

  // The algebra A acting on G = P + M, one matrix per weight.
  auto dims = [&](int w) {
    int kp = P.find({w}), km = M.find({w});
    return std::make_pair(kp < 0 ? 0 : P.dim(kp), km < 0 ? 0 : M.dim(km));
  };
  auto algebra_at = [&](int w) {
    auto [np, nm] = dims(w);
    std::vector<QMatrix> out;
    auto place = [&](const QMatrix& blk, int r0, int c0) {
      QMatrix g(np + nm, np + nm);
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) g(r0 + r, c0 + c) = blk(r, c);
      out.push_back(std::move(g));
    };
    for (const auto& f : endP) place(map_at(f, P, P, w), 0, 0);
    for (const auto& f : endM) place(map_at(f, M, M, w), np, np);
    for (const auto& f : iotas) place(map_at(f, M, P, w), 0, np);
    for (const auto& f : taus) place(map_at(f, P, M, w), np, 0);
    return out;
  };

  KoszulReport rep;
  rep.dims_match = rep.cross_terms_vanish = rep.reduces_to_projective = true;
  for (int i = 0; i < bc.n(); ++i)
    for (int j = 0; j < bc.n(); ++j) {
      int kap = B.weight(i), mu = B.weight(j);
      auto [pk, mk] = dims(kap);
      auto [pm, mm] = dims(mu);
      int gk = pk + mk, gm = pm + mm;
      std::size_t n = static_cast<std::size_t>(gk * gm);
      if (n == 0) continue;
      auto Ak = algebra_at(kap), Am = algebra_at(mu);
      RowSpace<Q> R(n);
      for (std::size_t s = 0; s < Ak.size(); ++s)
        for (int a = 0; a < gk; ++a)
          for (int b = 0; b < gm; ++b) {
            QVec t(n, Q(0));
            for (int x = 0; x < gk; ++x) t[x * gm + b] += Ak[s](a, x);
            for (int y = 0; y < gm; ++y) t[a * gm + y] -= Am[s](y, b);
            R.add(t);
          }
      int qd = static_cast<int>(n - R.dim());
      rep.quotient_dims[{Weight{kap}, Weight{mu}}] = qd;
      if (qd != static_cast<int>(bc.cell[i][j].dim())) rep.dims_match = false;
      RowSpace<Q> PP = R;
      for (int a = 0; a < gk; ++a)
        for (int b = 0; b < gm; ++b) {
          bool a_in_P = a < pk, b_in_P = b < pm;
          QVec t = basis_vec(n, static_cast<std::size_t>(a * gm + b));
          if (a_in_P != b_in_P && !R.contains(t)) rep.cross_terms_vanish = false;
          if (a_in_P && b_in_P) PP.add(t);
        }
      if (PP.dim() != n) rep.reduces_to_projective = false;
    }
  return rep;
}

GeneratedModule functional_generated_module(const WeightModule& V, int kxi, const QVec& xi,
                                            int kv, const QVec& v, int depth) {
  const auto& rs = V.rs();
  LieIndex li(rs);
  // U(g) v inside V.
  std::vector<RowSpace<Q>> gen;
  for (int k = 0; k < V.num_weights(); ++k) gen.emplace_back(V.dim(k));
  std::vector<std::pair<int, QVec>> todo{{kv, v}};
  gen[kv].add(v);
  while (!todo.empty()) {
    auto [k, w] = todo.back();
    todo.pop_back();
    for (int g = 0; g < li.size(); ++g) {
      if (li.is_H(g)) continue;
      auto r = V.apply(g, k, w);
      if (!r || r->empty()) continue;
      int t = V.target(g, k);
      if (t >= 0 && gen[t].add(*r)) todo.push_back({t, *r});
    }
  }
  // Images w -> Phi_{xi (x) w}, one span per weight.
  GeneratedModule out;
  WeightModule& G = out.module;
  G = WeightModule(rs, "(1 (x) U) phi");
  G.top = V.top;
  G.depth = V.depth;
  std::vector<std::optional<Span>> spans(V.num_weights());
  std::vector<int> gidx(V.num_weights(), -1);
  for (int k = 0; k < V.num_weights(); ++k) {
    std::vector<Functional> fs;
    for (const auto& w : gen[k].basis()) fs.push_back(matrix_element(V, kxi, xi, k, w, depth));
    spans[k].emplace(fs, depth);
    if (spans[k]->dim() > 0) gidx[k] = G.add_weight(V.weight(k), static_cast<int>(spans[k]->dim()));
  }
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < V.num_weights(); ++k) {
      if (gidx[k] < 0) continue;
      int t = V.target(g, k);
      const auto& S = *spans[k];
      std::size_t tdim = t >= 0 && gidx[t] >= 0 ? spans[t]->dim() : 0;
      QMatrix m(tdim, S.dim());
      bool known = true;
      for (std::size_t col = 0; col < S.dim() && known; ++col) {
        auto r = V.apply(g, k, gen[k].basis()[S.chosen[col]]);
        if (!r) {
          known = false;
          break;
        }
        if (tdim == 0) continue;
        auto c = spans[t]->coords(matrix_element(V, kxi, xi, t, *r, depth));
        if (!c) throw std::runtime_error("functional_generated_module: image outside the span");
        for (std::size_t x = 0; x < tdim; ++x) m(x, col) = (*c)[x];
      }
      if (known && t >= 0 && gidx[t] >= 0) G.set_op(g, gidx[k], std::move(m));
    }
  }
  // phi* = evaluation at 1 lives on the weight of xi; phi is the class of v.
  Functional phi = matrix_element(V, kxi, xi, kv, v, depth);
  int gk = gidx[kxi], gv = gidx[kv];
  if (gk >= 0 && gv >= 0) {
    auto cv = spans[kv]->coords(phi);
    const auto& S = *spans[kxi];
    LieIndex l2(rs);
    Monomial one(l2.size(), 0);
    QVec star(S.dim(), Q(0));
    auto basis = S.basis();
    for (std::size_t x = 0; x < S.dim(); ++x) star[x] = basis[x].value(l2, one);
    out.recovers_phi = cv && matrix_element(G, gk, star, gv, *cv, depth) == phi;
  } else {
    out.recovers_phi = phi.is_zero();
  }
  return out;
}

}  // namespace bigproj
