#include "bigproj/weight_module.hpp"

#include <stdexcept>

namespace bigproj {

Weight generator_weight(const RootSystem& rs, int g) {
  LieIndex li(rs);
  if (li.is_F(g)) return Weight(rs.rank(), 0) - rs.root(g).weight;
  if (li.is_H(g)) return Weight(rs.rank(), 0);
  return rs.root(li.root_of(g)).weight;
}

WeightModule::WeightModule(const RootSystem& rs, std::string name)
    : rs_(&rs), name_(std::move(name)) {}

int WeightModule::add_weight(const Weight& mu, int dim) {
  if (index_.count(mu)) throw std::invalid_argument("weight already present");
  int k = static_cast<int>(weights_.size());
  weights_.push_back(mu);
  dims_.push_back(dim);
  index_[mu] = k;
  return k;
}

int WeightModule::find(const Weight& mu) const {
  auto it = index_.find(mu);
  return it == index_.end() ? -1 : it->second;
}

int WeightModule::dim_at(const Weight& mu) const {
  int k = find(mu);
  return k < 0 ? 0 : dims_[k];
}

int WeightModule::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

int WeightModule::target(int g, int k) const {
  return find(weights_.at(k) + generator_weight(*rs_, g));
}

bool WeightModule::has_op(int g, int k) const { return ops_.count({g, k}) > 0; }

const QMatrix& WeightModule::op(int g, int k) const {
  auto it = ops_.find({g, k});
  if (it == ops_.end()) throw std::out_of_range("missing action matrix in " + name_);
  return it->second;
}

void WeightModule::set_op(int g, int k, QMatrix m) {
  int t = target(g, k);
  if (t < 0) throw std::invalid_argument("set_op: target weight outside module");
  if (static_cast<int>(m.rows()) != dims_[t] || static_cast<int>(m.cols()) != dims_[k])
    throw std::invalid_argument("set_op: shape mismatch");
  ops_[{g, k}] = std::move(m);
}

std::optional<QVec> WeightModule::apply(int g, int k, const QVec& v) const {
  LieIndex li(*rs_);
  if (li.is_H(g)) {
    QVec out = v;
    int c = weights_.at(k).at(g - li.m);
    for (auto& x : out) x *= c;
    return out;
  }
  Weight tw = weights_.at(k) + generator_weight(*rs_, g);
  int t = find(tw);
  if (t < 0) {
    if (beyond_window(tw)) return std::nullopt;
    return QVec{};  // zero weight space
  }
  auto it = ops_.find({g, k});
  if (it == ops_.end()) {
    if (dims_[t] == 0 || dims_[k] == 0) return QVec(dims_[t], Q(0));
    return std::nullopt;
  }
  return it->second.apply(v);
}

std::optional<QVec> WeightModule::apply_word(const std::vector<int>& word, int k,
                                             const QVec& v, int* out_k) const {
  LieIndex li(*rs_);
  Weight final_w = weights_.at(k);
  for (int g : word) final_w = final_w + generator_weight(*rs_, g);
  int final_k = find(final_w);
  if (out_k) *out_k = final_k;
  QVec cur = v;
  int cur_k = k;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto r = apply(*it, cur_k, cur);
    if (!r) return std::nullopt;
    if (!li.is_H(*it)) cur_k = target(*it, cur_k);
    if (cur_k < 0) {
      // Passed through a zero weight space; the result is zero if it is known to be.
      if (final_k < 0) return beyond_window(final_w) ? std::nullopt : std::optional<QVec>(QVec{});
      return QVec(dims_[final_k], Q(0));
    }
    cur = *r;
  }
  return cur;
}

std::map<Weight, int> WeightModule::character() const {
  std::map<Weight, int> ch;
  for (int k = 0; k < num_weights(); ++k)
    if (dims_[k] > 0) ch[weights_[k]] = dims_[k];
  return ch;
}

bool WeightModule::beyond_window(const Weight& mu) const {
  if (top.empty()) return false;
  if (lowest_type) return rs_->leq(top, mu) && rs_->height(mu - top) > depth;
  return rs_->leq(mu, top) && rs_->height(top - mu) > depth;
}

bool WeightModule::in_window(const Weight& mu) const {
  if (top.empty()) return find(mu) >= 0;
  if (lowest_type) {
    if (!rs_->leq(top, mu)) return false;
    return rs_->height(mu - top) <= depth;
  }
  if (!rs_->leq(mu, top)) return false;
  return rs_->height(top - mu) <= depth;
}

WeightModule submodule(const WeightModule& V, const std::vector<std::vector<QVec>>& basis,
                       const std::string& name) {
  WeightModule S(V.rs(), name);
  S.top = V.top;
  S.depth = V.depth;
  S.lowest_type = V.lowest_type;
  std::vector<CoordSolver<Q>> solvers;
  for (int k = 0; k < V.num_weights(); ++k) {
    S.add_weight(V.weight(k), static_cast<int>(basis.at(k).size()));
    solvers.emplace_back(basis[k], static_cast<std::size_t>(V.dim(k)));
  }
  LieIndex li(V.rs());
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < V.num_weights(); ++k) {
      if (!V.has_op(g, k)) continue;
      int t = V.target(g, k);
      QMatrix m(basis[t].size(), basis[k].size());
      for (std::size_t j = 0; j < basis[k].size(); ++j) {
        auto img = V.op(g, k).apply(basis[k][j]);
        auto c = solvers[t].coords(img);
        if (!c) throw std::runtime_error("submodule: family not stable in " + V.name());
        for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
      }
      S.set_op(g, k, std::move(m));
    }
  }
  return S;
}

WeightModule quotient(const WeightModule& V, const std::vector<std::vector<QVec>>& sub,
                      const std::string& name) {
  WeightModule Qm(V.rs(), name);
  Qm.top = V.top;
  Qm.depth = V.depth;
  Qm.lowest_type = V.lowest_type;
  std::vector<CoordSolver<Q>> solvers;
  std::vector<std::vector<QVec>> complement(V.num_weights());
  std::vector<std::size_t> sub_dim(V.num_weights());
  for (int k = 0; k < V.num_weights(); ++k) {
    std::size_t n = V.dim(k);
    RowSpace<Q> rs(n);
    std::vector<QVec> full;
    for (const auto& s : sub.at(k))
      if (rs.add(s)) full.push_back(s);
    sub_dim[k] = full.size();
    for (std::size_t i = 0; i < n; ++i) {
      QVec e(n, Q(0));
      e[i] = 1;
      if (rs.add(e)) {
        full.push_back(e);
        complement[k].push_back(e);
      }
    }
    Qm.add_weight(V.weight(k), static_cast<int>(complement[k].size()));
    solvers.emplace_back(full, n);
  }
  LieIndex li(V.rs());
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < V.num_weights(); ++k) {
      if (!V.has_op(g, k)) continue;
      int t = V.target(g, k);
      QMatrix m(complement[t].size(), complement[k].size());
      for (std::size_t j = 0; j < complement[k].size(); ++j) {
        auto c = solvers[t].coords_or_throw(V.op(g, k).apply(complement[k][j]));
        for (std::size_t i = 0; i < complement[t].size(); ++i) m(i, j) = c[sub_dim[t] + i];
      }
      Qm.set_op(g, k, std::move(m));
    }
  }
  // Stability of sub: images of sub vectors must have no complement part.
  for (int g = 0; g < li.size(); ++g) {
    if (li.is_H(g)) continue;
    for (int k = 0; k < V.num_weights(); ++k) {
      if (!V.has_op(g, k)) continue;
      int t = V.target(g, k);
      for (const auto& s : sub[k]) {
        auto c = solvers[t].coords_or_throw(V.op(g, k).apply(s));
        for (std::size_t i = sub_dim[t]; i < c.size(); ++i)
          if (!is_zero(c[i])) throw std::runtime_error("quotient: subfamily not stable");
      }
    }
  }
  return Qm;
}

bool check_simple_relations(const WeightModule& V) {
  const auto& rs = V.rs();
  LieIndex li(rs);
  for (int k = 0; k < V.num_weights(); ++k) {
    std::size_t n = V.dim(k);
    if (n == 0) continue;
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        int ei = li.E(rs.simple_index(i)), fj = li.F(rs.simple_index(j));
        for (std::size_t b = 0; b < n; ++b) {
          QVec v(n, Q(0));
          v[b] = 1;
          int t1 = 0, t2 = 0;
          auto ef = V.apply_word({ei, fj}, k, v, &t1);
          auto fe = V.apply_word({fj, ei}, k, v, &t2);
          Weight tw = V.weight(k) + generator_weight(rs, ei) + generator_weight(rs, fj);
          if (V.find(tw) < 0) continue;
          if (!ef || !fe) continue;
          QVec d(ef->size());
          for (std::size_t x = 0; x < d.size(); ++x) d[x] = (*ef)[x] - (*fe)[x];
          if (i == j) d[b] -= V.weight(k)[i];
          for (const auto& x : d)
            if (!is_zero(x)) return false;
        }
      }
  }
  return true;
}

}  // namespace bigproj
