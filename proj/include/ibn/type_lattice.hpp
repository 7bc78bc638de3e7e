#pragma once

#include <optional>
#include <string>

#include "ibn/rank_congruence.hpp"

// Lattice structure on basis types:
//   (N1,K1) <= (N2,K2)  iff  N1 <= N2 and K1 | K2,
//   join = (max, lcm), meet = (min, gcd); (1,1) is the bottom element.
// ExtendedType adjoins a Top meaning "has invariant basis number", which
// makes the hom-monotonicity rule uniform: a unital hom A -> B forces
// type(B) <= type(A), with IBN algebras sitting at the maximum.

namespace ibn {

bool leq(const BasisType& t1, const BasisType& t2);
BasisType join(const BasisType& t1, const BasisType& t2);  // throws on lcm overflow
BasisType meet(const BasisType& t1, const BasisType& t2);

class ExtendedType {
public:
  static ExtendedType top() { return ExtendedType(std::nullopt); }
  static ExtendedType of(const BasisType& t) { return ExtendedType(t); }

  bool is_top() const { return !value_.has_value(); }
  const BasisType& value() const { return *value_; }  // pre: !is_top()

  friend bool operator==(const ExtendedType&, const ExtendedType&) = default;

private:
  explicit ExtendedType(std::optional<BasisType> v) : value_(v) {}
  std::optional<BasisType> value_;
};

ExtendedType ext_join(const ExtendedType& e1, const ExtendedType& e2);
ExtendedType ext_meet(const ExtendedType& e1, const ExtendedType& e2);
bool ext_leq(const ExtendedType& e1, const ExtendedType& e2);

std::string to_string(const ExtendedType& e);

}  // namespace ibn
