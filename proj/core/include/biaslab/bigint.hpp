#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace biaslab {

// GMP-backed exact arithmetic: all counting and bound checks run over these,
// never over machine floats.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer factorial(unsigned n);

// binomial(n, k) with arbitrary-size n; returns 0 for k > n.
Integer binomial(const Integer& n, unsigned k);

}  // namespace biaslab
