#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

std::vector<std::vector<bool>> bruhat_by_reflections(const WeylGroup& W) {
  int n = W.order();
  std::set<int> refl;
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < W.root_system().rank(); ++i)
      refl.insert(W.multiply(W.multiply(w, W.from_word({i})), W.inverse(w)));
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    std::vector<int> stack{x};
    le[x][x] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int t : refl) {
        int b = W.multiply(a, t);
        if (W.length(b) > W.length(a) && !le[x][b]) {
          le[x][b] = true;
          stack.push_back(b);
        }
      }
    }
  }
  return le;
}

namespace {

using Laurent = std::map<int, long long>;
using HeckeElt = std::map<int, Laurent>;

void add(Laurent& a, const Laurent& b, long long s = 1) {
  for (auto [k, c] : b) {
    a[k] += s * c;
    if (a[k] == 0) a.erase(k);
  }
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto [i, x] : a)
    for (auto [j, y] : b) out[i + j] += x * y;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

void add(HeckeElt& a, const HeckeElt& b, const Laurent& s) {
  for (const auto& [w, p] : b) {
    add(a[w], mul(p, s));
    if (a[w].empty()) a.erase(w);
  }
}

HeckeElt times_Hs(const WeylGroup& W, const HeckeElt& x, int s) {
  HeckeElt out;
  for (const auto& [w, p] : x) {
    int ws = W.right_simple(s, w);
    add(out[ws], p);
    if (W.length(ws) < W.length(w)) add(out[w], mul(p, Laurent{{-1, 1}, {1, -1}}));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> kl_from_hecke(const WeylGroup& W) {
  int n = W.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return W.length(a) < W.length(b); });
  std::vector<HeckeElt> kl(n);
  kl[0] = HeckeElt{{0, Laurent{{0, 1}}}};
  for (int w : order) {
    if (w == 0) continue;
    int s = W.element(w).reduced_word.back();
    int v = W.right_simple(s, w);
    HeckeElt p = times_Hs(W, kl[v], s);
    add(p, kl[v], Laurent{{1, 1}});
    std::vector<int> lower;
    for (const auto& [y, c] : p)
      if (y != w) lower.push_back(y);
    std::sort(lower.begin(), lower.end(), [&](int a, int b) { return W.length(a) > W.length(b); });
    for (int y : lower) {
      auto it = p.find(y);
      if (it == p.end()) continue;
      Laurent c;
      for (auto [k, a] : it->second) {
        if (k == 0) c[0] += a;
        if (k < 0) {
          c[k] += a;
          c[-k] += a;
        }
      }
      if (!c.empty()) add(p, kl[y], mul(c, Laurent{{0, -1}}));
    }
    kl[w] = p;
  }
  std::vector<std::vector<std::vector<long long>>> P(n, std::vector<std::vector<long long>>(n));
  for (int w = 0; w < n; ++w)
    for (const auto& [x, h] : kl[w]) {
      int d = W.length(w) - W.length(x);
      std::vector<long long> poly;
      for (auto [k, c] : h) {
        // h = v^d P(v^{-2}) so v^k corresponds to q^{(d - k)/2}
        int e = (d - k) / 2;
        if (static_cast<int>(poly.size()) <= e) poly.resize(e + 1, 0);
        poly[e] += c;
      }
      while (!poly.empty() && poly.back() == 0) poly.pop_back();
      P[x][w] = poly;
    }
  return P;
}

}  // namespace oracle
