#include "biaslab/bigint.hpp"

namespace biaslab {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

Integer binomial(const Integer& n, unsigned k) {
  if (n < 0) return 0;
  if (n < k) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step: product of i+1 consecutive integers
  }
  return r;
}

}  // namespace biaslab
