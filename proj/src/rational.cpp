#include "ibn/rational.hpp"

#include <numeric>

namespace ibn {

namespace {

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) {
    throw Error(errc::arithmetic_overflow, "integer overflow negating coefficient");
  }
  return r;
}

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(errc::arithmetic_overflow, "integer overflow in coefficient addition");
  }
  return r;
}

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(errc::arithmetic_overflow, "integer overflow in coefficient multiplication");
  }
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(errc::invalid_argument, "zero denominator");
  // std::gcd is undefined on INT64_MIN (its magnitude is unrepresentable).
  if (num_ == INT64_MIN || den_ == INT64_MIN) {
    throw Error(errc::arithmetic_overflow, "coefficient magnitude out of range");
  }
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t l = den_ / g;
  const std::int64_t r = o.den_ / g;
  *this = Rational(checked_add_i64(checked_mul_i64(num_, r), checked_mul_i64(o.num_, l)),
                   checked_mul_i64(den_, r));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  *this = Rational(checked_mul_i64(num_ / g1, o.num_ / g2),
                   checked_mul_i64(den_ / g2, o.den_ / g1));
  return *this;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace ibn
