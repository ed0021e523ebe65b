#include <sstream>
#include <stdexcept>

#include "bigproj/cat_o.hpp"

namespace bigproj {

namespace {

void require_sl2(const WeightModule& V) {
  if (V.rs().label() != "A1") throw std::invalid_argument("Loewy series implemented for A1 only");
}

std::vector<RowSpace<Q>> as_spaces(const WeightModule& V, const Family& fam) {
  std::vector<RowSpace<Q>> out;
  for (int k = 0; k < V.num_weights(); ++k) {
    RowSpace<Q> s(V.dim(k));
    if (k < static_cast<int>(fam.size())) s.add_all(fam[k]);
    out.push_back(std::move(s));
  }
  return out;
}

Family as_family(const std::vector<RowSpace<Q>>& sp) {
  Family f;
  for (const auto& s : sp) f.push_back(s.basis());
  return f;
}

// Matrix of g on weight k with rows indexed by the target; zero rows when the
// target space is zero.
std::optional<QMatrix> gen_matrix(const WeightModule& V, int g, int k) {
  int t = V.target(g, k);
  if (t < 0) {
    Weight tw = V.weight(k) + generator_weight(V.rs(), g);
    if (V.beyond_window(tw)) return std::nullopt;
    return QMatrix(0, V.dim(k));
  }
  if (V.has_op(g, k)) return V.op(g, k);
  if (V.dim(t) == 0 || V.dim(k) == 0) return QMatrix(V.dim(t), V.dim(k));
  return std::nullopt;
}

// Vectors of V[k] whose image under M lies in the subspace S (of the target).
std::vector<QVec> preimage(const QMatrix& M, const RowSpace<Q>& S, std::size_t n) {
  if (M.rows() == 0) {
    std::vector<QVec> all;
    for (std::size_t i = 0; i < n; ++i) {
      QVec e(n, Q(0));
      e[i] = 1;
      all.push_back(e);
    }
    return all;
  }
  // Compose M with the projection onto a complement of S: v -> annihilator(S) . M v
  auto ann = annihilator(S.basis(), M.rows());
  if (ann.empty()) return preimage(QMatrix(0, n), S, n);
  QMatrix P = QMatrix::from_rows(ann, M.rows()) * M;
  return nullspace(P).row_list();
}

}  // namespace

LoewySeries socle_series_sl2(const WeightModule& V) {
  require_sl2(V);
  LieIndex li(V.rs());
  const int e = li.E(0), f = li.F(0);
  int nw = V.num_weights();
  std::vector<RowSpace<Q>> S;
  for (int k = 0; k < nw; ++k) S.emplace_back(V.dim(k));
  LoewySeries out;
  out.filtration.push_back(as_family(S));
  std::vector<Layer> bottom_first;
  for (int guard = 0; guard <= V.total_dim(); ++guard) {
    bool full = true;
    for (int k = 0; k < nw; ++k)
      if (S[k].dim() != static_cast<std::size_t>(V.dim(k))) full = false;
    if (full) break;
    auto next = S;
    Layer layer;
    for (int k = 0; k < nw; ++k) {
      std::size_t n = V.dim(k);
      if (n == 0) continue;
      auto em = gen_matrix(V, e, k);
      if (!em) throw std::runtime_error("socle_series_sl2: e leaves the window");
      int te = V.target(e, k);
      RowSpace<Q> empty(em->rows());
      auto cand = preimage(*em, te >= 0 ? S[te] : empty, n);
      int mu = V.weight(k)[0];
      if (mu >= 0 && !cand.empty()) {
        // f^{mu+1} v must also vanish modulo S.
        QMatrix acc = QMatrix::identity(n);
        int cur = k;
        bool zero_target = false;
        for (int j = 0; j <= mu; ++j) {
          auto fm = gen_matrix(V, f, cur);
          if (!fm) throw std::runtime_error("socle_series_sl2: f^(mu+1) leaves the window");
          int t = V.target(f, cur);
          if (t < 0) {
            zero_target = true;
            break;
          }
          acc = *fm * acc;
          cur = t;
        }
        if (!zero_target) {
          QMatrix C = QMatrix::from_rows(cand, n).transpose();  // columns = candidates
          auto coeffs = preimage(acc * C, S[cur], cand.size());
          std::vector<QVec> kept;
          for (const auto& c : coeffs) kept.push_back(C.apply(c));
          cand = kept;
        }
      }
      RowSpace<Q> sing = S[k];
      sing.add_all(cand);
      int fresh = static_cast<int>(sing.dim() - S[k].dim());
      if (fresh == 0) continue;
      layer.push_back({V.weight(k), fresh});
      // Add the f-strings generated by the new singular vectors.
      for (const auto& v0 : cand) {
        QVec v = v0;
        int cur = k;
        while (cur >= 0 && !v.empty()) {
          next[cur].add(v);
          auto fm = gen_matrix(V, f, cur);
          if (!fm || fm->rows() == 0) break;
          v = fm->apply(v);
          cur = V.target(f, cur);
        }
      }
    }
    if (layer.empty()) throw std::runtime_error("socle_series_sl2: no progress");
    S = std::move(next);
    out.filtration.push_back(as_family(S));
    bottom_first.push_back(layer);
  }
  out.layers.assign(bottom_first.rbegin(), bottom_first.rend());
  return out;
}

LoewySeries radical_series_sl2(const WeightModule& V) {
  require_sl2(V);
  auto dual = socle_series_sl2(contragredient(V));
  LoewySeries out;
  for (const auto& fam : dual.filtration) {
    Family r;
    for (int k = 0; k < V.num_weights(); ++k) r.push_back(annihilator(fam[k], V.dim(k)));
    out.filtration.push_back(std::move(r));
  }
  out.layers.assign(dual.layers.rbegin(), dual.layers.rend());
  return out;
}

bool is_rigid_sl2(const WeightModule& V) {
  auto soc = socle_series_sl2(V);
  auto rad = radical_series_sl2(V);
  std::size_t L = soc.layers.size();
  if (rad.layers.size() != L) return false;
  for (std::size_t j = 0; j <= L; ++j) {
    auto a = as_spaces(V, rad.filtration[j]);
    auto b = as_spaces(V, soc.filtration[L - j]);
    for (int k = 0; k < V.num_weights(); ++k)
      if (!(a[k] == b[k])) return false;
  }
  return true;
}

std::string describe_layers(const std::vector<Layer>& layers) {
  std::ostringstream os;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) os << " ; ";
    for (std::size_t j = 0; j < layers[i].size(); ++j) {
      if (j) os << " + ";
      const auto& c = layers[i][j];
      if (c.multiplicity != 1) os << c.multiplicity << "*";
      os << "L" << weight_string(c.highest);
    }
  }
  return os.str();
}

}  // namespace bigproj
