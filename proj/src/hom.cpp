#include <stdexcept>

#include "bigproj/cat_o.hpp"

namespace bigproj {

namespace {

enum class Slot { Stored, Zero, Unknown };

Slot slot_of(const WeightModule& M, const Weight& mu, int* idx) {
  int k = M.find(mu);
  *idx = k;
  if (k >= 0) return M.dim(k) > 0 ? Slot::Stored : Slot::Zero;
  return M.beyond_window(mu) ? Slot::Unknown : Slot::Zero;
}

}  // namespace

std::vector<ModuleMap> hom_space(const WeightModule& V, const WeightModule& W) {
  const auto& rs = V.rs();
  LieIndex li(rs);
  int nw = V.num_weights();
  std::vector<int> offset(nw, -1), widx(nw, -1);
  std::vector<Slot> tslot(nw);
  int nvars = 0;
  for (int k = 0; k < nw; ++k) {
    if (V.dim(k) == 0) {
      tslot[k] = Slot::Zero;
      continue;
    }
    tslot[k] = slot_of(W, V.weight(k), &widx[k]);
    if (tslot[k] == Slot::Stored) {
      offset[k] = nvars;
      nvars += W.dim(widx[k]) * V.dim(k);
    }
  }
  std::vector<QVec> rows;
  auto var = [&](int k, int r, int c) { return offset[k] + r * V.dim(k) + c; };
  for (int i = 0; i < li.r; ++i) {
    for (int g : {li.E(rs.simple_index(i)), li.F(rs.simple_index(i))}) {
      for (int k = 0; k < nw; ++k) {
        if (V.dim(k) == 0 || tslot[k] == Slot::Unknown) continue;
        Weight mu2 = V.weight(k) + generator_weight(rs, g);
        int w2 = -1;
        Slot wt = slot_of(W, mu2, &w2);
        if (wt != Slot::Stored) continue;  // both sides vanish or are unknown
        int v2 = -1;
        Slot vt = slot_of(V, mu2, &v2);
        if (vt == Slot::Unknown) continue;
        int k2 = vt == Slot::Stored ? v2 : -1;
        if (k2 >= 0 && tslot[k2] == Slot::Unknown) continue;
        if (k2 >= 0 && !V.has_op(g, k)) continue;
        if (tslot[k] == Slot::Stored && !W.has_op(g, widx[k])) continue;
        int rows_out = W.dim(w2);
        for (int r = 0; r < rows_out; ++r)
          for (int c = 0; c < V.dim(k); ++c) {
            QVec row(nvars, Q(0));
            // (W.g T_mu)[r][c]
            if (tslot[k] == Slot::Stored) {
              const auto& Wg = W.op(g, widx[k]);
              for (int s = 0; s < W.dim(widx[k]); ++s)
                if (!is_zero(Wg(r, s))) row[var(k, s, c)] += Wg(r, s);
            }
            // - (T_mu2 V.g)[r][c]
            if (k2 >= 0 && tslot[k2] == Slot::Stored) {
              const auto& Vg = V.op(g, k);
              for (int t = 0; t < V.dim(k2); ++t)
                if (!is_zero(Vg(t, c))) row[var(k2, r, t)] -= Vg(t, c);
            }
            bool nz = false;
            for (const auto& x : row)
              if (!is_zero(x)) {
                nz = true;
                break;
              }
            if (nz) rows.push_back(std::move(row));
          }
      }
    }
  }
  QMatrix sys = rows.empty() ? QMatrix(0, nvars) : QMatrix::from_rows(rows, nvars);
  QMatrix ns = nullspace(sys);
  std::vector<ModuleMap> out;
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    ModuleMap f;
    f.blocks.resize(nw);
    f.target_index = widx;
    for (int k = 0; k < nw; ++k) {
      int rows_k = (tslot[k] == Slot::Stored) ? W.dim(widx[k]) : 0;
      f.blocks[k] = QMatrix(rows_k, V.dim(k));
      if (tslot[k] != Slot::Stored) continue;
      for (int r = 0; r < rows_k; ++r)
        for (int c = 0; c < V.dim(k); ++c) f.blocks[k](r, c) = ns(s, var(k, r, c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ModuleMap> hom_space_certified(const std::function<WeightModule(int)>& Vb,
                                           const std::function<WeightModule(int)>& Wb,
                                           int depth, HomCertificate* cert) {
  WeightModule V0 = Vb(depth), W0 = Wb(depth);
  WeightModule V1 = Vb(depth + 1), W1 = Wb(depth + 1);
  auto h0 = hom_space(V0, W0);
  auto h1 = hom_space(V1, W1);
  // Restrict depth+1 maps to the weights of the depth window.
  std::vector<QVec> restricted;
  for (const auto& f : h1) {
    QVec flat;
    for (int k = 0; k < V1.num_weights(); ++k) {
      if (V0.find(V1.weight(k)) < 0) continue;
      const auto& b = f.blocks[k];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) flat.push_back(b(r, c));
    }
    restricted.push_back(std::move(flat));
  }
  HomCertificate c;
  c.depth = depth;
  c.dim_at_depth = h0.size();
  c.dim_at_next = h1.size();
  c.restriction_injective =
      restricted.empty() || rank_of(restricted, restricted.front().size()) == restricted.size();
  if (cert) *cert = c;
  if (!c.stable())
    throw std::runtime_error("hom_space: dimension not stable at depth " + std::to_string(depth) +
                             "; increase the depth");
  return h0;
}

QVec apply_map(const ModuleMap& f, int k, const QVec& v) { return f.blocks.at(k).apply(v); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f, const WeightModule& mid) {
  ModuleMap h;
  h.blocks.resize(f.blocks.size());
  h.target_index.assign(f.blocks.size(), -1);
  for (std::size_t k = 0; k < f.blocks.size(); ++k) {
    int m = f.target_index[k];
    if (m < 0 || f.blocks[k].rows() == 0 || mid.dim(m) == 0) {
      int rows = (m >= 0 && g.target_index[m] >= 0) ? static_cast<int>(g.blocks[m].rows()) : 0;
      h.blocks[k] = QMatrix(rows, f.blocks[k].cols());
      h.target_index[k] = m >= 0 ? g.target_index[m] : -1;
      continue;
    }
    h.blocks[k] = g.blocks[m] * f.blocks[k];
    h.target_index[k] = g.target_index[m];
  }
  return h;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const std::vector<Q>& coeffs) {
  if (maps.empty()) throw std::invalid_argument("linear_combination of nothing");
  ModuleMap out = maps[0];
  for (auto& b : out.blocks) b = b.scaled(coeffs[0]);
  for (std::size_t i = 1; i < maps.size(); ++i)
    for (std::size_t k = 0; k < out.blocks.size(); ++k)
      out.blocks[k] = out.blocks[k] + maps[i].blocks[k].scaled(coeffs[i]);
  return out;
}

bool is_isomorphism(const ModuleMap& f, const WeightModule& V, const WeightModule& W) {
  int hit = 0;
  for (int k = 0; k < V.num_weights(); ++k) {
    if (V.dim(k) == 0) continue;
    int t = f.target_index[k];
    if (t < 0 || W.dim(t) != V.dim(k)) return false;
    if (rank(f.blocks[k]) != static_cast<std::size_t>(V.dim(k))) return false;
    ++hit;
  }
  int nonzero = 0;
  for (int k = 0; k < W.num_weights(); ++k)
    if (W.dim(k) > 0) ++nonzero;
  return hit == nonzero;
}

std::vector<ModuleMap> trace_free_part(const std::vector<ModuleMap>& end, const WeightModule& V) {
  std::vector<QVec> rows;
  for (int k = 0; k < V.num_weights(); ++k) {
    if (V.dim(k) == 0) continue;
    QVec tr(end.size(), Q(0));
    for (std::size_t i = 0; i < end.size(); ++i) {
      const auto& b = end[i].blocks[k];
      if (b.rows() != b.cols()) throw std::invalid_argument("trace_free_part: not an endomorphism");
      for (std::size_t j = 0; j < b.rows(); ++j) tr[i] += b(j, j);
    }
    rows.push_back(tr);
  }
  std::vector<ModuleMap> out;
  if (end.empty()) return out;
  QMatrix ns = rows.empty() ? QMatrix::identity(end.size())
                            : nullspace(QMatrix::from_rows(rows, end.size()));
  for (std::size_t r = 0; r < ns.rows(); ++r) out.push_back(linear_combination(end, ns.row(r)));
  return out;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero_matrix()) return false;
  return true;
}

}  // namespace bigproj
