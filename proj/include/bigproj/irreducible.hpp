#pragma once

#include "bigproj/weight_module.hpp"

namespace bigproj {

// Simple highest weight module L(lambda) on the window of the given depth,
// with matrices for the simple root vectors. Each weight space is realised
// through its image under the raising operators, which is injective below the
// highest weight, so no Verma module or Shapovalov form is needed.
WeightModule irreducible_module(const RootSystem& rs, const Weight& lambda, int depth);

}  // namespace bigproj
