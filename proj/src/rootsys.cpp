#include "bigproj/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bigproj {

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator*(int k, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

RootSystem::RootSystem(const std::string& label) : label_(label) {
  if (label == "A1") cartan_ = {{2}};
  else if (label == "A2") cartan_ = {{2, -1}, {-1, 2}};
  else if (label == "A3") cartan_ = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  else if (label == "B2") cartan_ = {{2, -1}, {-2, 2}};
  else if (label == "G2") cartan_ = {{2, -3}, {-1, 2}};
  else throw std::invalid_argument("unsupported root system: " + label);
  rank_ = static_cast<int>(cartan_.size());

  // Symmetrizer: d_i a_ij = d_j a_ji.
  if (label == "B2") d_ = {2, 1};
  else if (label == "G2") d_ = {1, 3};
  else d_ = std::vector<int>(rank_, 1);

  QMatrix a(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) a(i, j) = cartan_[i][j];
  QMatrix aug(rank_, 2 * rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) aug(i, j) = a(i, j);
    aug(i, rank_ + i) = 1;
  }
  rref_inplace(aug);
  inv_cartan_ = QMatrix(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) inv_cartan_(i, j) = aug(i, rank_ + j);

  int dmax = *std::max_element(d_.begin(), d_.end());
  // (omega_i, omega_j) = (A^{-1})_{ij} (alpha_i, alpha_i) / 2.
  gram_ = QMatrix(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      gram_(i, j) = inv_cartan_(i, j) * rat(d_[i], dmax);

  // Positive roots by closing the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      int pair = 0;
      for (int j = 0; j < rank_; ++j) pair += c[j] * cartan_[i][j];
      auto r = c;
      r[i] -= pair;
      if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<std::vector<int>> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0);
    int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  for (const auto& c : roots) {
    PositiveRoot pr;
    pr.simple_coords = c;
    pr.height = std::accumulate(c.begin(), c.end(), 0);
    pr.weight = Weight(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) pr.weight[i] += c[j] * cartan_[i][j];
    lookup_[c] = static_cast<int>(positive_.size());
    positive_.push_back(pr);
  }
  simple_index_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    simple_index_[i] = lookup_.at(c);
  }
  // beta^vee = sum_i c_i (alpha_i, alpha_i) / (beta, beta) alpha_i^vee.
  for (int k = 0; k < num_positive(); ++k) {
    auto& pr = positive_[k];
    Q len = root_length2(k);
    pr.coroot.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
      Q c = Q(pr.simple_coords[i]) * rat(2 * d_[i], dmax) / len;
      if (c.get_den() != 1) throw std::logic_error("non-integral coroot");
      pr.coroot[i] = static_cast<int>(c.get_num().get_si());
    }
  }
}

Weight RootSystem::simple_root(int i) const {
  Weight w(rank_);
  for (int k = 0; k < rank_; ++k) w[k] = cartan_[k][i];
  return w;
}

int RootSystem::root_index(const std::vector<int>& simple_coords) const {
  auto it = lookup_.find(simple_coords);
  return it == lookup_.end() ? -1 : it->second;
}

int RootSystem::root_index_of_weight(const Weight& w) const {
  if (!in_root_lattice(w)) return -1;
  return root_index(root_coords(w));
}

int RootSystem::highest_root() const { return num_positive() - 1; }

Q RootSystem::form(const Weight& a, const Weight& b) const {
  Q s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a[i] != 0 && b[j] != 0) s += gram_(i, j) * a[i] * b[j];
  return s;
}

Q RootSystem::root_length2(int k) const {
  const auto& w = positive_.at(k).weight;
  return form(w, w);
}

std::vector<int> RootSystem::root_coords(const Weight& w) const {
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    Q s = 0;
    for (int j = 0; j < rank_; ++j) s += inv_cartan_(i, j) * w[j];
    if (s.get_den() != 1)
      throw std::invalid_argument("weight not in root lattice: " + weight_string(w));
    out[i] = static_cast<int>(s.get_num().get_si());
  }
  return out;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  for (int i = 0; i < rank_; ++i) {
    Q s = 0;
    for (int j = 0; j < rank_; ++j) s += inv_cartan_(i, j) * w[j];
    if (s.get_den() != 1) return false;
  }
  return true;
}

bool RootSystem::leq(const Weight& b, const Weight& a) const {
  Weight d = a - b;
  if (!in_root_lattice(d)) return false;
  auto c = root_coords(d);
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

int RootSystem::height(const Weight& w) const {
  auto c = root_coords(w);
  return std::accumulate(c.begin(), c.end(), 0);
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

bool RootSystem::is_antidominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](int x) { return x <= -1; });
}

bool RootSystem::is_regular_antidominant(const Weight& w) const {
  // Regular for the dot action: (lambda + rho, beta^vee) != 0 for all roots.
  if (!is_antidominant(w)) return false;
  for (const auto& pr : positive_) {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += (w[i] + 1) * pr.coroot[i];
    if (s == 0) return false;
  }
  return true;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  Weight r = w;
  for (int k = 0; k < rank_; ++k) r[k] -= w[i] * cartan_[k][i];
  return r;
}

namespace {

IMatrix mat_mul(const IMatrix& a, const IMatrix& b) {
  std::size_t n = a.size();
  IMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  int r = rs.rank();
  std::vector<IMatrix> simple(r, IMatrix(r, std::vector<int>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      simple[i][k][k] = 1;
      simple[i][k][i] -= rs.cartan()[k][i];
    }
  IMatrix id(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) id[i][i] = 1;

  std::vector<int> len;
  matrices_.push_back(id);
  lookup_[id] = 0;
  len.push_back(0);
  for (std::size_t head = 0; head < matrices_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      IMatrix m = mat_mul(simple[i], matrices_[head]);
      if (lookup_.count(m)) continue;
      lookup_[m] = static_cast<int>(matrices_.size());
      matrices_.push_back(m);
      len.push_back(len[head] + 1);
    }
  }
  int n = static_cast<int>(matrices_.size());
  left_.assign(r, std::vector<int>(n));
  right_.assign(r, std::vector<int>(n));
  for (int i = 0; i < r; ++i)
    for (int w = 0; w < n; ++w) {
      left_[i][w] = lookup_.at(mat_mul(simple[i], matrices_[w]));
      right_[i][w] = lookup_.at(mat_mul(matrices_[w], simple[i]));
    }
  elements_.resize(n);
  for (int w = 0; w < n; ++w) {
    auto& e = elements_[w];
    e.index = w;
    e.length = len[w];
    int cur = w;
    while (len[cur] > 0) {
      int i = 0;
      while (len[left_[i][cur]] > len[cur]) ++i;
      e.reduced_word.push_back(i);
      cur = left_[i][cur];
    }
  }
  inverse_.resize(n);
  for (int w = 0; w < n; ++w) {
    int cur = 0;
    for (auto it = elements_[w].reduced_word.rbegin();
         it != elements_[w].reduced_word.rend(); ++it)
      cur = right_[*it][cur];
    // cur = s_{ik} ... s_{i1}, the inverse
    inverse_[w] = cur;
  }
  longest_ = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());

  below_.assign(n, std::vector<bool>(n, false));
  for (int y = 0; y < n; ++y) {
    const auto& word = elements_[y].reduced_word;
    std::size_t l = word.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << l); ++mask) {
      int cur = 0;
      for (std::size_t k = 0; k < l; ++k)
        if (mask & (std::size_t(1) << k)) cur = right_[word[k]][cur];
      below_[y][cur] = true;
    }
  }
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int cur = 0;
  for (int i : word) {
    if (i < 0 || i >= rs_->rank()) throw std::invalid_argument("bad simple reflection index");
    cur = right_[i][cur];
  }
  return cur;
}

int WeylGroup::multiply(int a, int b) const {
  return lookup_.at(mat_mul(matrices_.at(a), matrices_.at(b)));
}

Weight WeylGroup::act(int w, const Weight& lambda) const {
  const auto& m = matrices_.at(w);
  Weight out(lambda.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * lambda[j];
  return out;
}

Weight WeylGroup::dot(int w, const Weight& lambda) const {
  Weight rho = rs_->rho();
  return act(w, lambda + rho) - rho;
}

OrbitData orbit_data(const WeylGroup& W, const Weight& lambda) {
  OrbitData d;
  d.lambda = lambda;
  std::vector<int> order(W.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (W.length(a) != W.length(b)) return W.length(a) < W.length(b);
    return W.element(a).reduced_word < W.element(b).reduced_word;
  });
  std::set<Weight> seen;
  for (int w : order) {
    Weight mu = W.dot(w, lambda);
    if (mu == lambda) d.stabilizer.push_back(w);
    if (seen.insert(mu).second) {
      d.orbit.push_back(mu);
      d.coset_reps.push_back(w);
    }
  }
  return d;
}

int l_lambda(const WeylGroup& W, const Weight& lambda) {
  Weight target = W.dot(W.longest(), lambda);
  int best = -1;
  for (const auto& e : W.elements())
    if (W.dot(e.index, lambda) == target && (best < 0 || e.length < best)) best = e.length;
  return best;
}

}  // namespace bigproj
