#include "bigproj/cat_o.hpp"

#include <functional>
#include <stdexcept>

#include "bigproj/characters.hpp"
#include "bigproj/irreducible.hpp"

namespace bigproj {

namespace {

QVec unit(std::size_t n, std::size_t i) {
  QVec v(n, Q(0));
  v[i] = 1;
  return v;
}

// Matrix of a commutator-type combination sum_t c_t * word_t, or nullopt.
std::optional<QMatrix> word_combination(const WeightModule& V, int k, int target,
                                        const std::vector<std::pair<std::vector<int>, Q>>& terms) {
  QMatrix m(V.dim(target), V.dim(k));
  for (int b = 0; b < V.dim(k); ++b) {
    QVec v = unit(V.dim(k), b);
    for (const auto& [word, c] : terms) {
      int out = -1;
      auto r = V.apply_word(word, k, v, &out);
      if (!r) return std::nullopt;
      if (r->empty()) continue;
      for (int i = 0; i < V.dim(target); ++i) m(i, b) += c * (*r)[i];
    }
  }
  return m;
}

}  // namespace

void complete_root_vectors(WeightModule& V, const LieAlgebra& g) {
  const auto& rs = g.rs();
  const auto& li = g.index();
  for (int k = 0; k < li.m; ++k) {
    if (rs.root(k).height == 1) continue;
    const auto& c = g.construction(k);
    Q inv = Q(1) / Q(c.divisor);
    int Ea = li.E(c.alpha), Eb = li.E(c.beta), Fa = li.F(c.alpha), Fb = li.F(c.beta);
    for (int w = 0; w < V.num_weights(); ++w) {
      int te = V.target(li.E(k), w);
      if (te >= 0 && !V.has_op(li.E(k), w)) {
        auto m = word_combination(V, w, te, {{{Ea, Eb}, inv}, {{Eb, Ea}, -inv}});
        if (m) V.set_op(li.E(k), w, std::move(*m));
      }
      int tf = V.target(li.F(k), w);
      if (tf >= 0 && !V.has_op(li.F(k), w)) {
        auto m = word_combination(V, w, tf, {{{Fa, Fb}, -inv}, {{Fb, Fa}, inv}});
        if (m) V.set_op(li.F(k), w, std::move(*m));
      }
    }
  }
}

bool check_all_relations(const WeightModule& V, const LieAlgebra& g) {
  const auto& li = g.index();
  for (int a = 0; a < li.size(); ++a) {
    if (li.is_H(a)) continue;
    for (int b = 0; b < li.size(); ++b) {
      if (li.is_H(b) || b == a) continue;
      for (int w = 0; w < V.num_weights(); ++w) {
        Weight tw = V.weight(w) + generator_weight(V.rs(), a) + generator_weight(V.rs(), b);
        int t = V.find(tw);
        if (t < 0) continue;
        std::vector<std::pair<std::vector<int>, Q>> terms{{{a, b}, Q(1)}, {{b, a}, Q(-1)}};
        for (auto [h, c] : g.bracket(a, b)) terms.push_back({{h}, Q(-c)});
        auto m = word_combination(V, w, t, terms);
        if (m && !m->is_zero_matrix()) return false;
      }
    }
  }
  return true;
}

WeightModule verma(Enveloping& U, const Weight& lambda, int depth) {
  const auto& g = U.lie();
  const auto& rs = g.rs();
  const auto& li = g.index();
  WeightModule M(rs, "M" + weight_string(lambda));
  M.top = lambda;
  M.depth = depth;
  auto weights = window_weights(rs, lambda, depth);
  std::map<std::vector<int>, std::pair<int, int>> where;  // F-exponents -> (weight, position)
  std::vector<std::vector<std::vector<int>>> basis;
  for (const auto& mu : weights) {
    auto gamma = rs.root_coords(lambda - mu);
    std::vector<std::vector<int>> monos;
    std::vector<int> a(li.m, 0);
    std::function<void(int, std::vector<int>)> rec = [&](int k, std::vector<int> left) {
      if (k == li.m) {
        for (int x : left)
          if (x != 0) return;
        monos.push_back(a);
        return;
      }
      const auto& c = rs.root(k).simple_coords;
      for (int n = 0;; ++n) {
        a[k] = n;
        rec(k + 1, left);
        bool ok = true;
        for (int i = 0; i < li.r; ++i) {
          left[i] -= c[i];
          if (left[i] < 0) ok = false;
        }
        if (!ok) break;
      }
      a[k] = 0;
    };
    rec(0, gamma);
    if (monos.empty()) continue;
    int k = M.add_weight(mu, static_cast<int>(monos.size()));
    for (std::size_t p = 0; p < monos.size(); ++p) where[monos[p]] = {k, static_cast<int>(p)};
    basis.push_back(monos);
  }
  for (int gen = 0; gen < li.size(); ++gen) {
    if (li.is_H(gen)) continue;
    for (int k = 0; k < M.num_weights(); ++k) {
      int t = M.target(gen, k);
      if (t < 0) continue;
      QMatrix m(M.dim(t), M.dim(k));
      for (int p = 0; p < M.dim(k); ++p) {
        Monomial full(li.size(), 0);
        for (int x = 0; x < li.m; ++x) full[li.F(x)] = basis[k][p][x];
        for (const auto& [mono, c] : U.left_mult_gen(gen, full)) {
          bool has_e = false;
          for (int x = 0; x < li.m; ++x)
            if (mono[li.E(x)] != 0) has_e = true;
          if (has_e) continue;
          Q coef = c;
          for (int i = 0; i < li.r; ++i) coef *= rat_pow(Q(lambda[i]), mono[li.H(i)]);
          std::vector<int> fpart(li.m);
          for (int x = 0; x < li.m; ++x) fpart[x] = mono[li.F(x)];
          auto it = where.find(fpart);
          if (it == where.end() || it->second.first != t)
            throw std::logic_error("verma: PBW term outside target weight space");
          m(it->second.second, p) += coef;
        }
      }
      M.set_op(gen, k, std::move(m));
    }
  }
  return M;
}

WeightModule simple_module(const LieAlgebra& g, const Weight& lambda, int depth) {
  WeightModule L = irreducible_module(g.rs(), lambda, depth);
  complete_root_vectors(L, g);
  return L;
}

WeightModule contragredient(const WeightModule& V) {
  WeightModule C(V.rs(), V.name() + "^c");
  C.top = V.top;
  C.depth = V.depth;
  C.lowest_type = V.lowest_type;
  for (int k = 0; k < V.num_weights(); ++k) C.add_weight(V.weight(k), V.dim(k));
  LieIndex li(V.rs());
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    int sg = li.is_F(g) ? li.E(g) : li.F(li.root_of(g));
    for (int k = 0; k < V.num_weights(); ++k) {
      if (!V.has_op(g, k)) continue;
      // sigma(g) acts from the target of g back to k by the transpose.
      C.set_op(sg, V.target(g, k), V.op(g, k).transpose());
    }
  }
  return C;
}

WeightModule contragredient_verma(Enveloping& U, const Weight& lambda, int depth) {
  WeightModule C = contragredient(verma(U, lambda, depth));
  C.set_name("Mc" + weight_string(lambda));
  return C;
}

WeightModule restricted_dual(const WeightModule& V) {
  WeightModule D(V.rs(), V.name() + "*");
  Weight zero(V.rs().rank(), 0);
  if (!V.top.empty()) D.top = zero - V.top;
  D.depth = V.depth;
  D.lowest_type = !V.lowest_type;
  for (int k = 0; k < V.num_weights(); ++k) D.add_weight(zero - V.weight(k), V.dim(k));
  LieIndex li(V.rs());
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < V.num_weights(); ++k) {
      if (!V.has_op(g, k)) continue;
      int t = V.target(g, k);
      // (g phi)(v) = -phi(g v): maps V*[-mu'] to V*[-mu].
      D.set_op(g, D.find(zero - V.weight(t)), V.op(g, k).transpose().scaled(Q(-1)));
    }
  }
  return D;
}

WeightModule direct_sum(const WeightModule& A, const WeightModule& B) {
  WeightModule S(A.rs(), A.name() + "+" + B.name());
  if (A.top == B.top && A.lowest_type == B.lowest_type) {
    S.top = A.top;
    S.depth = std::min(A.depth, B.depth);
    S.lowest_type = A.lowest_type;
  }
  std::map<Weight, std::pair<int, int>> dims;
  for (int k = 0; k < A.num_weights(); ++k) dims[A.weight(k)].first = A.dim(k);
  for (int k = 0; k < B.num_weights(); ++k) dims[B.weight(k)].second = B.dim(k);
  for (const auto& [mu, d] : dims) S.add_weight(mu, d.first + d.second);
  LieIndex li(A.rs());
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < S.num_weights(); ++k) {
      int t = S.target(g, k);
      if (t < 0) continue;
      const Weight& mu = S.weight(k);
      const Weight& nu = S.weight(t);
      int ka = A.find(mu), kb = B.find(mu);
      auto da = dims[mu].first, db = dims[mu].second;
      auto ea = dims[nu].first, eb = dims[nu].second;
      bool okA = (da == 0 || ea == 0) || (ka >= 0 && A.has_op(g, ka));
      bool okB = (db == 0 || eb == 0) || (kb >= 0 && B.has_op(g, kb));
      if (!okA || !okB) continue;
      QMatrix m(ea + eb, da + db);
      if (da && ea)
        for (int i = 0; i < ea; ++i)
          for (int j = 0; j < da; ++j) m(i, j) = A.op(g, ka)(i, j);
      if (db && eb)
        for (int i = 0; i < eb; ++i)
          for (int j = 0; j < db; ++j) m(ea + i, da + j) = B.op(g, kb)(i, j);
      S.set_op(g, k, std::move(m));
    }
  }
  return S;
}

WeightModule tensor_product(const WeightModule& V, const WeightModule& F) {
  const auto& rs = V.rs();
  WeightModule T(rs, V.name() + "x" + F.name());
  if (!V.top.empty() && !F.top.empty()) T.top = V.top + F.top;
  T.depth = V.depth;
  T.lowest_type = V.lowest_type;
  // Candidate weights; keep those whose every summand is known.
  std::map<Weight, bool> cand;
  for (int a = 0; a < V.num_weights(); ++a)
    for (int b = 0; b < F.num_weights(); ++b) cand[V.weight(a) + F.weight(b)] = true;
  struct Block {
    int va, fb, offset;
  };
  std::map<Weight, std::vector<Block>> blocks;
  for (const auto& [nu, unused] : cand) {
    bool known = true;
    std::vector<Block> bl;
    int off = 0;
    for (int b = 0; b < F.num_weights(); ++b) {
      if (F.dim(b) == 0) continue;
      Weight mu = nu - F.weight(b);
      int a = V.find(mu);
      if (a < 0) {
        if (V.beyond_window(mu)) known = false;
        continue;
      }
      bl.push_back({a, b, off});
      off += V.dim(a) * F.dim(b);
    }
    if (!known || off == 0) continue;
    if (!T.top.empty() && !T.in_window(nu)) continue;
    T.add_weight(nu, off);
    blocks[nu] = bl;
  }
  LieIndex li(rs);
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < T.num_weights(); ++k) {
      int t = T.target(g, k);
      if (t < 0) continue;
      const auto& src = blocks[T.weight(k)];
      const auto& dst = blocks[T.weight(t)];
      auto dst_offset = [&](int va, int fb) {
        for (const auto& d : dst)
          if (d.va == va && d.fb == fb) return d.offset;
        return -1;
      };
      QMatrix m(T.dim(t), T.dim(k));
      bool ok = true;
      for (const auto& s : src) {
        int dv = V.dim(s.va), df = F.dim(s.fb);
        // g on the V factor
        int va2 = V.target(g, s.va);
        if (va2 >= 0) {
          if (!V.has_op(g, s.va)) ok = false;
          else {
            int o = dst_offset(va2, s.fb);
            if (o < 0) ok = false;
            else {
              const auto& A = V.op(g, s.va);
              for (int i = 0; i < dv; ++i)
                for (int j = 0; j < df; ++j)
                  for (int r = 0; r < V.dim(va2); ++r)
                    if (!is_zero(A(r, i))) m(o + r * df + j, s.offset + i * df + j) += A(r, i);
            }
          }
        } else if (V.beyond_window(V.weight(s.va) + generator_weight(rs, g))) {
          ok = false;
        }
        int fb2 = F.target(g, s.fb);
        if (fb2 >= 0 && F.has_op(g, s.fb)) {
          int o = dst_offset(s.va, fb2);
          if (o < 0) ok = false;
          else {
            const auto& B = F.op(g, s.fb);
            int df2 = F.dim(fb2);
            for (int i = 0; i < dv; ++i)
              for (int j = 0; j < df; ++j)
                for (int r = 0; r < df2; ++r)
                  if (!is_zero(B(r, j))) m(o + i * df2 + r, s.offset + i * df + j) += B(r, j);
          }
        }
      }
      if (ok) T.set_op(g, k, std::move(m));
    }
  }
  return T;
}

std::optional<QMatrix> element_matrix(const WeightModule& V, const UElement& x, int k) {
  QMatrix m(V.dim(k), V.dim(k));
  for (int b = 0; b < V.dim(k); ++b) {
    QVec v = unit(V.dim(k), b);
    for (const auto& [mono, c] : x) {
      std::vector<int> word;
      for (std::size_t g = 0; g < mono.size(); ++g)
        for (int e = 0; e < mono[g]; ++e) word.push_back(static_cast<int>(g));
      int out = -1;
      auto r = V.apply_word(word, k, v, &out);
      if (!r) return std::nullopt;
      if (r->empty()) continue;
      if (out != k) throw std::invalid_argument("element_matrix: element is not of weight zero");
      for (int i = 0; i < V.dim(k); ++i) m(i, b) += c * (*r)[i];
    }
  }
  return m;
}

WeightModule block_component(const WeightModule& V, const UElement& central, const Q& chi,
                             const std::string& name) {
  std::vector<std::vector<QVec>> basis(V.num_weights());
  for (int k = 0; k < V.num_weights(); ++k) {
    if (V.dim(k) == 0) continue;
    auto m = element_matrix(V, central, k);
    if (!m) throw std::runtime_error("block_component: central element leaves the window");
    basis[k] = generalized_eigenspace(*m, chi).row_list();
  }
  return submodule(V, basis, name);
}

WeightModule big_projective_sl2(Enveloping& U, int lambda, int depth) {
  if (U.lie().rs().label() != "A1") throw std::invalid_argument("big_projective_sl2 needs A1");
  if (lambda > -1) throw std::invalid_argument("big_projective_sl2 needs lambda <= -1");
  int n = -lambda - 1;
  WeightModule M = verma(U, {-1}, depth);
  WeightModule L = simple_module(U.lie(), {n}, n);
  WeightModule T = tensor_product(M, L);
  return block_component(T, U.casimir_sl2(), U.casimir_eigenvalue({lambda}),
                         "P(" + std::to_string(lambda) + ")");
}

std::vector<SingularSpace> singular_vectors(const WeightModule& V) {
  const auto& rs = V.rs();
  LieIndex li(rs);
  std::vector<SingularSpace> out;
  for (int k = 0; k < V.num_weights(); ++k) {
    std::size_t n = V.dim(k);
    if (n == 0) continue;
    std::vector<QVec> rows;
    bool known = true;
    for (int i = 0; i < rs.rank() && known; ++i) {
      int e = li.E(rs.simple_index(i));
      for (std::size_t b = 0; b < n; ++b) {
        auto r = V.apply(e, k, unit(n, b));
        if (!r) {
          known = false;
          break;
        }
      }
      if (!known) break;
      int t = V.target(e, k);
      if (t >= 0 && V.has_op(e, k))
        for (const auto& row : V.op(e, k).row_list()) rows.push_back(row);
    }
    if (!known) continue;
    auto ker = rows.empty() ? QMatrix::identity(n).row_list()
                            : nullspace(QMatrix::from_rows(rows, n)).row_list();
    if (!ker.empty()) out.push_back({V.weight(k), ker});
  }
  return out;
}

}  // namespace bigproj
