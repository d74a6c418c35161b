#pragma once

#include <mpfr.h>

#include <string>

#include "biaslab/bigint.hpp"

namespace biaslab {

// Outward-rounded interval [lo, hi] at 256-bit precision. Every operation
// rounds lo down and hi up, so a comparison that reports "definitely"
// is a rigorous statement about the exact real values. Arithmetic is
// restricted to non-negative operands except subtraction, which is all this
// project needs; mul/div/sqrt assert non-negativity.
class Interval {
 public:
  static constexpr mpfr_prec_t precision = 256;

  Interval();
  explicit Interval(unsigned long v);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(const Integer& v);
  static Interval of_rational(const Rational& q);
  static Interval euler_e();                 // the constant e = exp(1)
  static Interval log2_of(unsigned long n);  // binary logarithm
  static Interval sqrt_of(const Interval& x);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;

  // Rigorous comparisons; false means "not provable from this enclosure",
  // not "the opposite holds".
  bool definitely_lt(const Interval& o) const;
  bool definitely_le(const Interval& o) const;
  bool definitely_lt(const Rational& q) const;  // hi < q
  bool definitely_gt(const Rational& q) const;  // lo > q
  bool definitely_ge(const Rational& q) const;
  bool definitely_lt(const Integer& z) const;
  bool definitely_gt(const Integer& z) const;

  // Deterministic integer-size comparison used by the container step:
  // true iff the integer k exceeds the upper endpoint. Exact inputs give
  // exact semantics; irrational inputs are pinned to within 2^-250.
  bool size_exceeds(std::uint64_t k) const;

  bool is_exact() const;  // lo == hi
  double midpoint_double() const;
  std::string decimal(int digits = 30) const;  // midpoint, round-to-nearest

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace biaslab
