#pragma once

#include <cstdint>
#include <string>

#include "ibn/errors.hpp"

namespace ibn {

/// Exact rational coefficient on checked 64-bit integers; always normalized
/// (positive denominator, coprime). Overflow throws, never wraps.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : Rational(n, 1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend bool operator==(const Rational&, const Rational&) = default;

  /// Complex conjugate; rationals are real, so the identity.
  Rational conjugate() const { return *this; }

  std::string to_string() const;  // "p" or "p/q"

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

}  // namespace ibn
