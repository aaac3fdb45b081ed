#include "bloch/mobius.hpp"

#include <cmath>
#include <sstream>

namespace bloch {

ExprPtr make_mobius(Complex a) {
  if (!(std::abs(a) <= kMaxMobiusCenter)) {
    std::ostringstream msg;
    msg << "make_mobius: |a| = " << std::abs(a) << " exceeds " << kMaxMobiusCenter;
    throw InvalidParameter(msg.str());
  }
  return Expr::mobius(a);
}

double pseudo_hyperbolic(Complex z, Complex w) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw InvalidParameter("pseudo_hyperbolic: arguments must lie strictly inside the disk");
  return std::abs(mobius_value(w, z));
}

}  // namespace bloch
