#include "ibn/type_lattice.hpp"

#include <algorithm>
#include <numeric>

#include "ibn/checked.hpp"

namespace ibn {

bool leq(const BasisType& t1, const BasisType& t2) {
  return t1.n_min() <= t2.n_min() && t2.k_period() % t1.k_period() == 0;
}

BasisType join(const BasisType& t1, const BasisType& t2) {
  return BasisType(std::max(t1.n_min(), t2.n_min()),
                   checked_lcm(t1.k_period(), t2.k_period()));
}

BasisType meet(const BasisType& t1, const BasisType& t2) {
  return BasisType(std::min(t1.n_min(), t2.n_min()),
                   std::gcd(t1.k_period(), t2.k_period()));
}

ExtendedType ext_join(const ExtendedType& e1, const ExtendedType& e2) {
  if (e1.is_top() || e2.is_top()) return ExtendedType::top();
  return ExtendedType::of(join(e1.value(), e2.value()));
}

ExtendedType ext_meet(const ExtendedType& e1, const ExtendedType& e2) {
  if (e1.is_top()) return e2;
  if (e2.is_top()) return e1;
  return ExtendedType::of(meet(e1.value(), e2.value()));
}

bool ext_leq(const ExtendedType& e1, const ExtendedType& e2) {
  if (e2.is_top()) return true;
  if (e1.is_top()) return false;
  return leq(e1.value(), e2.value());
}

std::string to_string(const ExtendedType& e) {
  return e.is_top() ? "Top" : to_string(e.value());
}

}  // namespace ibn
