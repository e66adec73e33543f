#include <stdexcept>

#include "singmod/jacobi.hpp"
#include "singmod/plusspace.hpp"

namespace singmod {

DualityResult dualityCheck(long D, long d, long p) {
  if (!admissibleG(D, p) || !admissibleF(d, p)) throw std::domain_error("index not in plus-space support");
  DualityResult r;
  r.A = coeffA(p, D, d);
  r.B = p == 1 ? coeffB(D, d) : coeffBLevelP(p, D, d);
  r.ok = r.A == -r.B;
  return r;
}

}  // namespace singmod
