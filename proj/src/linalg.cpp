#include "bigproj/linalg.hpp"

#include <stdexcept>

namespace bigproj {

std::string rat_string(const Q& x) {
  Q c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Q parse_rat(const std::string& s) {
  Q r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Q rat_pow(const Q& base, int exponent) {
  Q out = 1;
  if (exponent < 0) {
    if (is_zero(base)) throw std::domain_error("0 to a negative power");
    Q inv = 1 / base;
    for (int i = 0; i < -exponent; ++i) out *= inv;
    return out;
  }
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace bigproj
