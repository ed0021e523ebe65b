#pragma once

// Formal characters, Kostant partition function and Kazhdan-Lusztig data for
// integral blocks of category O.

#include <map>
#include <vector>

#include "bigproj/rootsys.hpp"

namespace bigproj {

// numerator / prod_{beta > 0} (1 - e^{-beta})^denominator_power
struct FormalCharacter {
  std::map<Weight, long long> numerator;
  int denominator_power = 0;

  FormalCharacter& add(const FormalCharacter& o, long long scale = 1);
};

// Equality after clearing denominators.
bool same_character(const RootSystem& rs, const FormalCharacter& a,
                    const FormalCharacter& b);

// Multiplicities on the window {mu <= top, ht(top - mu) <= depth}.
struct TruncatedCharacter {
  Weight top;
  int depth = 0;
  std::map<Weight, long long> mult;

  long long at(const Weight& mu) const;
  bool operator==(const TruncatedCharacter& o) const;
};

// All weights of the window, sorted by depth then descending coordinates.
std::vector<Weight> window_weights(const RootSystem& rs, const Weight& top, int depth);

class KostantPartition {
 public:
  // copies > 1 counts partitions into positive roots taken with that multiplicity.
  explicit KostantPartition(const RootSystem& rs, int copies = 1);
  long long operator()(const std::vector<int>& gamma_simple_coords);
  long long of_weight(const Weight& gamma);

 private:
  long long count(const std::vector<int>& gamma, std::size_t k);
  const RootSystem* rs_;
  std::vector<std::vector<int>> parts_;
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo_;
};

TruncatedCharacter truncate(const RootSystem& rs, const FormalCharacter& ch,
                            const Weight& top, int depth);

FormalCharacter verma_char(const RootSystem& rs, const Weight& lambda);
// Weyl character of a dominant weight, as an alternating sum over W.
FormalCharacter weyl_char(const WeylGroup& W, const Weight& lambda);
// Finite weight multiplicities of the simple module of a dominant weight.
std::map<Weight, long long> weyl_char_finite(const WeylGroup& W, const Weight& lambda);
// Sum of Verma characters over the dot orbit of an antidominant weight.
FormalCharacter big_proj_char(const WeylGroup& W, const Weight& lambda);

using IntPoly = std::vector<long long>;  // coefficients, low degree first

class KLTable {
 public:
  explicit KLTable(const WeylGroup& W);
  const IntPoly& P(int x, int w);
  long long mu(int x, int w);

 private:
  const WeylGroup* W_;
  std::vector<std::vector<IntPoly>> table_;
  std::vector<std::vector<bool>> done_;
};

// [M(y.lambda) : L(x.lambda)] for antidominant lambda and x, y minimal coset reps.
long long mult_verma_simple(const WeylGroup& W, KLTable& kl, const Weight& lambda,
                            int x, int y);

// Multiplicity matrix m[y][x] = [M(y.lambda) : L(x.lambda)] over the orbit reps.
std::vector<std::vector<long long>> block_decomposition_matrix(const WeylGroup& W,
                                                               KLTable& kl,
                                                               const Weight& lambda);

// C[x][y] = sum_w [M_w : L_x][M_w : L_y].
std::vector<std::vector<long long>> cartan_matrix_block(const WeylGroup& W, KLTable& kl,
                                                        const Weight& lambda);

// Character of L(x.lambda) via the inverse decomposition matrix.
FormalCharacter simple_char(const WeylGroup& W, KLTable& kl, const Weight& lambda, int x);

}  // namespace bigproj
