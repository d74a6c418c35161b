#include "biaslab/interval.hpp"

#include <cassert>
#include <stdexcept>

namespace biaslab {

Interval::Interval() {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(unsigned long v) : Interval() {
  mpfr_set_ui(lo_, v, MPFR_RNDD);
  mpfr_set_ui(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Integer& v) {
  Interval r;
  mpfr_set_z(r.lo_, v.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::of_rational(const Rational& q) {
  Interval r;
  mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::euler_e() {
  Interval r;
  mpfr_t one;
  mpfr_init2(one, precision);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one, MPFR_RNDD);
  mpfr_exp(r.hi_, one, MPFR_RNDU);
  mpfr_clear(one);
  return r;
}

Interval Interval::log2_of(unsigned long n) {
  if (n == 0) throw std::domain_error("log2_of: n must be positive");
  Interval r;
  mpfr_t x;
  mpfr_init2(x, precision);
  mpfr_set_ui(x, n, MPFR_RNDN);  // exact for any 64-bit n
  mpfr_log2(r.lo_, x, MPFR_RNDD);
  mpfr_log2(r.hi_, x, MPFR_RNDU);
  mpfr_clear(x);
  return r;
}

Interval Interval::sqrt_of(const Interval& x) {
  assert(mpfr_sgn(x.lo_) >= 0);
  Interval r;
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r;
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r;
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  assert(mpfr_sgn(lo_) >= 0 && mpfr_sgn(o.lo_) >= 0);
  Interval r;
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  assert(mpfr_sgn(lo_) >= 0 && mpfr_sgn(o.lo_) > 0);
  Interval r;
  mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

bool Interval::definitely_lt(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::definitely_le(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool Interval::definitely_lt(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.backend().data()) < 0;
}

bool Interval::definitely_gt(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.backend().data()) > 0;
}

bool Interval::definitely_ge(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.backend().data()) >= 0;
}

bool Interval::definitely_lt(const Integer& z) const {
  return mpfr_cmp_z(hi_, z.backend().data()) < 0;
}

bool Interval::definitely_gt(const Integer& z) const {
  return mpfr_cmp_z(lo_, z.backend().data()) > 0;
}

bool Interval::size_exceeds(std::uint64_t k) const {
  return mpfr_cmp_ui(hi_, static_cast<unsigned long>(k)) < 0;
}

bool Interval::is_exact() const { return mpfr_cmp(lo_, hi_) == 0; }

double Interval::midpoint_double() const {
  mpfr_t m;
  mpfr_init2(m, precision);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Interval::decimal(int digits) const {
  mpfr_t m;
  mpfr_init2(m, precision);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, m);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(m);
  return out;
}

}  // namespace biaslab
