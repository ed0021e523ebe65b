#include "bigproj/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bigproj {

FormalCharacter& FormalCharacter::add(const FormalCharacter& o, long long scale) {
  if (!numerator.empty() && o.denominator_power != denominator_power)
    throw std::invalid_argument("adding characters with different denominators");
  denominator_power = o.denominator_power;
  for (const auto& [mu, c] : o.numerator) {
    auto& slot = numerator[mu];
    slot += scale * c;
    if (slot == 0) numerator.erase(mu);
  }
  return *this;
}

namespace {

using Sparse = std::map<Weight, long long>;

Sparse sparse_mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out[x + y] += cx * cy;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Sparse denominator_power(const RootSystem& rs, int p) {
  Sparse out{{Weight(rs.rank(), 0), 1}};
  for (int k = 0; k < p; ++k)
    for (const auto& pr : rs.positive_roots())
      out = sparse_mul(out, Sparse{{Weight(rs.rank(), 0), 1}, {Weight(rs.rank(), 0) - pr.weight, -1}});
  return out;
}

}  // namespace

bool same_character(const RootSystem& rs, const FormalCharacter& a,
                    const FormalCharacter& b) {
  int p = std::max(a.denominator_power, b.denominator_power);
  Sparse lhs = sparse_mul(a.numerator, denominator_power(rs, p - a.denominator_power));
  Sparse rhs = sparse_mul(b.numerator, denominator_power(rs, p - b.denominator_power));
  return lhs == rhs;
}

long long TruncatedCharacter::at(const Weight& mu) const {
  auto it = mult.find(mu);
  return it == mult.end() ? 0 : it->second;
}

bool TruncatedCharacter::operator==(const TruncatedCharacter& o) const {
  if (top != o.top || depth != o.depth) return false;
  for (const auto& [mu, c] : mult)
    if (o.at(mu) != c) return false;
  for (const auto& [mu, c] : o.mult)
    if (at(mu) != c) return false;
  return true;
}

std::vector<Weight> window_weights(const RootSystem& rs, const Weight& top, int depth) {
  std::vector<std::pair<int, Weight>> out;
  int r = rs.rank();
  std::vector<int> gamma(r, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r) {
      Weight mu = top;
      int h = 0;
      for (int j = 0; j < r; ++j) {
        mu = mu - gamma[j] * rs.simple_root(j);
        h += gamma[j];
      }
      out.push_back({h, mu});
      return;
    }
    for (int n = 0; n <= left; ++n) {
      gamma[i] = n;
      rec(i + 1, left - n);
    }
    gamma[i] = 0;
  };
  rec(0, depth);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Weight> ws;
  for (auto& p : out) ws.push_back(p.second);
  return ws;
}

KostantPartition::KostantPartition(const RootSystem& rs, int copies) : rs_(&rs) {
  for (int c = 0; c < copies; ++c)
    for (const auto& pr : rs.positive_roots()) parts_.push_back(pr.simple_coords);
}

long long KostantPartition::operator()(const std::vector<int>& gamma) {
  for (int x : gamma)
    if (x < 0) return 0;
  return count(gamma, 0);
}

long long KostantPartition::of_weight(const Weight& gamma) {
  if (!rs_->in_root_lattice(gamma)) return 0;
  return (*this)(rs_->root_coords(gamma));
}

long long KostantPartition::count(const std::vector<int>& gamma, std::size_t k) {
  bool zero = std::all_of(gamma.begin(), gamma.end(), [](int x) { return x == 0; });
  if (zero) return 1;
  if (k == parts_.size()) return 0;
  auto key = std::make_pair(gamma, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  long long total = 0;
  std::vector<int> g = gamma;
  while (true) {
    total += count(g, k + 1);
    bool ok = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] -= parts_[k][i];
      if (g[i] < 0) ok = false;
    }
    if (!ok) break;
  }
  memo_[key] = total;
  return total;
}

TruncatedCharacter truncate(const RootSystem& rs, const FormalCharacter& ch,
                            const Weight& top, int depth) {
  TruncatedCharacter t;
  t.top = top;
  t.depth = depth;
  KostantPartition kp(rs, std::max(ch.denominator_power, 1));
  for (const auto& mu : window_weights(rs, top, depth)) {
    long long m = 0;
    for (const auto& [nu, c] : ch.numerator) {
      Weight diff = nu - mu;
      if (!rs.in_root_lattice(diff)) continue;
      auto coords = rs.root_coords(diff);
      if (ch.denominator_power == 0) {
        if (std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; })) m += c;
      } else {
        m += c * kp(coords);
      }
    }
    if (m != 0) t.mult[mu] = m;
  }
  return t;
}

FormalCharacter verma_char(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw std::invalid_argument("weight rank mismatch");
  FormalCharacter ch;
  ch.numerator[lambda] = 1;
  ch.denominator_power = 1;
  return ch;
}

FormalCharacter weyl_char(const WeylGroup& W, const Weight& lambda) {
  const auto& rs = W.root_system();
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("weyl_char needs a dominant weight: " + weight_string(lambda));
  FormalCharacter ch;
  ch.denominator_power = 1;
  for (const auto& e : W.elements())
    ch.numerator[W.dot(e.index, lambda)] += (e.length % 2 == 0) ? 1 : -1;
  return ch;
}

std::map<Weight, long long> weyl_char_finite(const WeylGroup& W, const Weight& lambda) {
  const auto& rs = W.root_system();
  FormalCharacter ch = weyl_char(W, lambda);
  int depth = rs.height(lambda - W.act(W.longest(), lambda));
  auto t = truncate(rs, ch, lambda, depth);
  for (const auto& [mu, c] : t.mult)
    if (c < 0) throw std::logic_error("negative multiplicity in finite character");
  return t.mult;
}

FormalCharacter big_proj_char(const WeylGroup& W, const Weight& lambda) {
  const auto& rs = W.root_system();
  if (!rs.is_antidominant(lambda))
    throw std::invalid_argument("big_proj_char needs an antidominant weight: " +
                                weight_string(lambda));
  FormalCharacter ch;
  ch.denominator_power = 1;
  for (const auto& mu : orbit_data(W, lambda).orbit) ch.numerator[mu] += 1;
  return ch;
}

}  // namespace bigproj
