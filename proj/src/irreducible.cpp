#include "bigproj/irreducible.hpp"

#include "bigproj/characters.hpp"

namespace bigproj {

WeightModule irreducible_module(const RootSystem& rs, const Weight& lambda, int depth) {
  WeightModule L(rs, "L" + weight_string(lambda));
  L.top = lambda;
  L.depth = depth;
  LieIndex li(rs);
  int r = rs.rank();
  std::vector<int> E(r), F(r);
  for (int i = 0; i < r; ++i) {
    E[i] = li.E(rs.simple_index(i));
    F[i] = li.F(rs.simple_index(i));
  }
  auto weights = window_weights(rs, lambda, depth);
  L.add_weight(lambda, 1);

  for (std::size_t w = 1; w < weights.size(); ++w) {
    const Weight& mu = weights[w];
    // Raised weights mu + alpha_i that carry a nonzero space.
    std::vector<int> up(r, -1);
    std::size_t image_dim = 0;
    std::vector<std::size_t> offset(r, 0);
    for (int i = 0; i < r; ++i) {
      up[i] = L.find(mu + rs.simple_root(i));
      offset[i] = image_dim;
      if (up[i] >= 0) image_dim += L.dim(up[i]);
    }
    if (image_dim == 0) continue;

    struct Candidate {
      int j;
      int b;
      QVec image;
    };
    std::vector<Candidate> cands;
    for (int j = 0; j < r; ++j) {
      if (up[j] < 0) continue;
      int src = up[j];
      for (int b = 0; b < L.dim(src); ++b) {
        QVec bvec(L.dim(src), Q(0));
        bvec[b] = 1;
        QVec img(image_dim, Q(0));
        for (int i = 0; i < r; ++i) {
          if (up[i] < 0) continue;
          // e_i f_j b = f_j e_i b + delta_ij <mu + alpha_j, h_i> b
          auto eb = L.apply(E[i], src, bvec);
          if (eb && !eb->empty()) {
            int mid = L.find(mu + rs.simple_root(i) + rs.simple_root(j));
            auto feb = L.apply(F[j], mid, *eb);
            if (feb)
              for (std::size_t x = 0; x < feb->size(); ++x) img[offset[i] + x] += (*feb)[x];
          }
          if (i == j) {
            int c = (mu + rs.simple_root(j))[i];
            img[offset[i] + b] += c;
          }
        }
        cands.push_back({j, b, std::move(img)});
      }
    }
    RowSpace<Q> span(image_dim);
    std::vector<QVec> chosen;
    for (const auto& c : cands)
      if (span.add(c.image)) chosen.push_back(c.image);
    if (chosen.empty()) continue;
    int k = L.add_weight(mu, static_cast<int>(chosen.size()));
    CoordSolver<Q> solver(chosen, image_dim);
    for (int i = 0; i < r; ++i) {
      if (up[i] < 0) continue;
      QMatrix m(L.dim(up[i]), chosen.size());
      for (std::size_t col = 0; col < chosen.size(); ++col)
        for (int x = 0; x < L.dim(up[i]); ++x) m(x, col) = chosen[col][offset[i] + x];
      L.set_op(E[i], k, std::move(m));
    }
    for (int j = 0; j < r; ++j) {
      if (up[j] < 0) continue;
      QMatrix m(chosen.size(), L.dim(up[j]));
      for (const auto& c : cands) {
        if (c.j != j) continue;
        auto coords = solver.coords_or_throw(c.image);
        for (std::size_t x = 0; x < coords.size(); ++x) m(x, c.b) = coords[x];
      }
      L.set_op(F[j], up[j], std::move(m));
    }
  }
  return L;
}

}  // namespace bigproj
