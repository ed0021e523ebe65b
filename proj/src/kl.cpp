#include <algorithm>
#include <stdexcept>

#include "bigproj/characters.hpp"

namespace bigproj {

namespace {

void add_shifted(IntPoly& acc, const IntPoly& p, int shift, long long scale) {
  if (p.empty() || scale == 0) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += scale * p[i];
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

const IntPoly kZero;

}  // namespace

KLTable::KLTable(const WeylGroup& W) : W_(&W) {
  int n = W.order();
  table_.assign(n, std::vector<IntPoly>(n));
  done_.assign(n, std::vector<bool>(n, false));
}

long long KLTable::mu(int x, int w) {
  int d = W_->length(w) - W_->length(x);
  if (d <= 0 || d % 2 == 0) return 0;
  const auto& p = P(x, w);
  std::size_t k = static_cast<std::size_t>((d - 1) / 2);
  return k < p.size() ? p[k] : 0;
}

const IntPoly& KLTable::P(int x, int w) {
  if (!W_->bruhat_leq(x, w)) return kZero;
  if (done_[x][w]) return table_[x][w];
  IntPoly out;
  if (x == w) {
    out = {1};
  } else {
    int r = W_->root_system().rank();
    int s = 0;
    while (W_->length(W_->left_simple(s, w)) > W_->length(w)) ++s;
    if (s >= r) throw std::logic_error("no left descent");
    int v = W_->left_simple(s, w);
    int sx = W_->left_simple(s, x);
    int c = W_->length(sx) < W_->length(x) ? 1 : 0;
    add_shifted(out, P(sx, v), 1 - c, 1);
    add_shifted(out, P(x, v), c, 1);
    for (int z = 0; z < W_->order(); ++z) {
      if (z == v || !W_->bruhat_leq(z, v)) continue;
      if (W_->length(W_->left_simple(s, z)) > W_->length(z)) continue;
      long long m = mu(z, v);
      if (m == 0) continue;
      int shift = (W_->length(w) - W_->length(z)) / 2;
      add_shifted(out, P(x, z), shift, -m);
    }
    trim(out);
  }
  table_[x][w] = out;
  done_[x][w] = true;
  return table_[x][w];
}

namespace {

int rep_position(const OrbitData& od, int w) {
  auto it = std::find(od.coset_reps.begin(), od.coset_reps.end(), w);
  if (it == od.coset_reps.end())
    throw std::invalid_argument("Weyl element is not a minimal coset representative");
  return static_cast<int>(it - od.coset_reps.begin());
}

long long eval_at_one(const IntPoly& p) {
  long long s = 0;
  for (auto c : p) s += c;
  return s;
}

}  // namespace

long long mult_verma_simple(const WeylGroup& W, KLTable& kl, const Weight& lambda,
                            int x, int y) {
  if (!W.root_system().is_antidominant(lambda))
    throw std::invalid_argument("mult_verma_simple needs an antidominant weight");
  auto od = orbit_data(W, lambda);
  rep_position(od, x);
  rep_position(od, y);
  int w0 = W.longest();
  return eval_at_one(kl.P(W.multiply(w0, y), W.multiply(w0, x)));
}

std::vector<std::vector<long long>> block_decomposition_matrix(const WeylGroup& W,
                                                               KLTable& kl,
                                                               const Weight& lambda) {
  auto od = orbit_data(W, lambda);
  std::size_t n = od.coset_reps.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      m[y][x] = mult_verma_simple(W, kl, lambda, od.coset_reps[x], od.coset_reps[y]);
  return m;
}

std::vector<std::vector<long long>> cartan_matrix_block(const WeylGroup& W, KLTable& kl,
                                                        const Weight& lambda) {
  auto m = block_decomposition_matrix(W, kl, lambda);
  std::size_t n = m.size();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w) c[x][y] += m[w][x] * m[w][y];
  return c;
}

FormalCharacter simple_char(const WeylGroup& W, KLTable& kl, const Weight& lambda, int x) {
  auto od = orbit_data(W, lambda);
  auto m = block_decomposition_matrix(W, kl, lambda);
  std::size_t n = m.size();
  int xi = rep_position(od, x);
  // ch M_y = sum_x m[y][x] ch L_x, so ch L = m^{-1} ch M.
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Q(static_cast<long>(m[i][j]));
    aug(i, n + i) = 1;
  }
  rref_inplace(aug);
  FormalCharacter ch;
  ch.denominator_power = 1;
  for (std::size_t y = 0; y < n; ++y) {
    Q c = aug(xi, n + y);
    if (c.get_den() != 1) throw std::logic_error("non-integral inverse multiplicity");
    long long ci = c.get_num().get_si();
    if (ci != 0) ch.numerator[od.orbit[y]] += ci;
  }
  return ch;
}

}  // namespace bigproj
