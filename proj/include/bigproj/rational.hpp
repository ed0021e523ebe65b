#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bigproj {

using Q = mpq_class;

inline bool is_zero(const Q& x) { return sgn(x) == 0; }

// Always "p/q", including integers ("3/1").
std::string rat_string(const Q& x);
Q parse_rat(const std::string& s);

inline Q rat(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

Q rat_pow(const Q& base, int exponent);

}  // namespace bigproj
