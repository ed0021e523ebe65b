#include "bigproj/enveloping.hpp"

#include <stdexcept>

#include "bigproj/irreducible.hpp"

namespace bigproj {

LieAlgebra::LieAlgebra(const RootSystem& rs) : rs_(&rs), li_(rs) {
  const int m = li_.m, r = li_.r, n = li_.size();
  const Weight theta = rs.root(rs.highest_root()).weight;
  WeightModule adj = irreducible_module(rs, theta, 2 * rs.root(rs.highest_root()).height);
  if (adj.total_dim() != n) throw std::logic_error("adjoint module has wrong dimension");

  std::vector<int> offset(adj.num_weights());
  int total = 0;
  for (int k = 0; k < adj.num_weights(); ++k) {
    offset[k] = total;
    total += adj.dim(k);
  }
  auto embed = [&](int g) {
    QMatrix big(total, total);
    for (int k = 0; k < adj.num_weights(); ++k) {
      if (!adj.has_op(g, k)) continue;
      int t = adj.target(g, k);
      const auto& blk = adj.op(g, k);
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) big(offset[t] + i, offset[k] + j) = blk(i, j);
    }
    return big;
  };

  mats_.assign(n, QMatrix(total, total));
  for (int i = 0; i < r; ++i) {
    int s = rs.simple_index(i);
    mats_[li_.E(s)] = embed(li_.E(s));
    mats_[li_.F(s)] = embed(li_.F(s));
    QMatrix h(total, total);
    for (int k = 0; k < adj.num_weights(); ++k)
      for (int j = 0; j < adj.dim(k); ++j) h(offset[k] + j, offset[k] + j) = adj.weight(k)[i];
    mats_[li_.H(i)] = h;
  }

  construction_.assign(m, Construction{});
  for (int k = 0; k < m; ++k) {
    const auto& xi = rs.root(k);
    if (xi.height == 1) continue;
    Construction c;
    for (int a = 0; a < m && c.alpha < 0; ++a) {
      int b = rs.root_index_of_weight(xi.weight - rs.root(a).weight);
      if (b >= 0) {
        c.alpha = a;
        c.beta = b;
      }
    }
    int p = 0;
    while (rs.root_index_of_weight(rs.root(c.beta).weight - (p + 1) * rs.root(c.alpha).weight) >= 0)
      ++p;
    c.divisor = p + 1;
    construction_[k] = c;
    Q inv(1, c.divisor);
    const auto& ea = mats_[li_.E(c.alpha)];
    const auto& eb = mats_[li_.E(c.beta)];
    mats_[li_.E(k)] = (ea * eb - eb * ea).scaled(inv);
    const auto& fa = mats_[li_.F(c.alpha)];
    const auto& fb = mats_[li_.F(c.beta)];
    mats_[li_.F(k)] = (fa * fb - fb * fa).scaled(-inv);
  }

  std::vector<QVec> flat(n);
  for (int g = 0; g < n; ++g) {
    flat[g].reserve(total * total);
    for (int i = 0; i < total; ++i)
      for (int j = 0; j < total; ++j) flat[g].push_back(mats_[g](i, j));
  }
  CoordSolver<Q> solver(flat, static_cast<std::size_t>(total * total));
  table_.assign(n, std::vector<SparseLie>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      QMatrix c = mats_[a] * mats_[b] - mats_[b] * mats_[a];
      QVec v;
      v.reserve(total * total);
      for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) v.push_back(c(i, j));
      auto coords = solver.coords_or_throw(v);
      SparseLie s;
      for (int g = 0; g < n; ++g) {
        if (is_zero(coords[g])) continue;
        if (coords[g].get_den() != 1) throw std::logic_error("non-integral structure constant");
        s.push_back({g, static_cast<int>(coords[g].get_num().get_si())});
      }
      table_[a][b] = std::move(s);
    }
}

int LieAlgebra::N(int alpha, int beta) const {
  int g = rs_->root_index_of_weight(rs_->root(alpha).weight + rs_->root(beta).weight);
  if (g < 0) return 0;
  for (auto [idx, c] : bracket(li_.E(alpha), li_.E(beta)))
    if (idx == li_.E(g)) return c;
  return 0;
}

std::vector<int> LieAlgebra::h_of_root(int k) const {
  std::vector<int> out(li_.r, 0);
  for (auto [idx, c] : bracket(li_.E(k), li_.F(k))) {
    if (!li_.is_H(idx)) throw std::logic_error("[e, f] left the Cartan subalgebra");
    out[idx - li_.m] = c;
  }
  return out;
}

int LieAlgebra::sigma(int g) const {
  if (li_.is_F(g)) return li_.E(g);
  if (li_.is_E(g)) return li_.F(li_.root_of(g));
  return g;
}

namespace {

using Dense = std::vector<long long>;

Dense densify(const SparseLie& s, int n) {
  Dense d(n, 0);
  for (auto [g, c] : s) d[g] += c;
  return d;
}

}  // namespace

bool LieAlgebra::check_jacobi() const {
  int n = dim();
  auto br = [&](const Dense& x, int c) {
    Dense out(n, 0);
    for (int g = 0; g < n; ++g) {
      if (x[g] == 0) continue;
      for (auto [h, k] : bracket(g, c)) out[h] += x[g] * k;
    }
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
        Dense t1 = br(densify(bracket(a, b), n), c);
        Dense t2 = br(densify(bracket(b, c), n), a);
        Dense t3 = br(densify(bracket(c, a), n), b);
        for (int g = 0; g < n; ++g)
          if (t1[g] + t2[g] + t3[g] != 0) return false;
      }
  return true;
}

bool LieAlgebra::check_antisymmetry() const {
  int n = dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Dense x = densify(bracket(a, b), n), y = densify(bracket(b, a), n);
      for (int g = 0; g < n; ++g)
        if (x[g] + y[g] != 0) return false;
    }
  return true;
}

std::string LieAlgebra::basis_name(int g) const {
  if (li_.is_H(g)) return "h" + std::to_string(g - li_.m + 1);
  const auto& c = rs_->root(li_.root_of(g)).simple_coords;
  std::string s = li_.is_E(g) ? "e" : "f";
  for (int x : c) s += std::to_string(x);
  return s;
}

}  // namespace bigproj
