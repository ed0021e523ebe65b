#pragma once

// Independent reference computations used only by the tests.

#include <map>
#include <vector>

#include "bigproj/rootsys.hpp"

namespace oracle {

using namespace bigproj;

// x <= y via chains of reflections increasing length.
std::vector<std::vector<bool>> bruhat_by_reflections(const WeylGroup& W);

// Kazhdan-Lusztig polynomials P_{x,w}(q) from the Hecke algebra in the
// normalisation H_s^2 = 1 + (v^{-1} - v) H_s, returned as coefficient lists.
std::vector<std::vector<std::vector<long long>>> kl_from_hecke(const WeylGroup& W);

}  // namespace oracle
