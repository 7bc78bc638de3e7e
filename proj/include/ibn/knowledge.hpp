#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ibn/type_lattice.hpp"

namespace ibn {

enum class IbnStatus { known_ibn, known_non_ibn, unknown };

/// What is known about an algebra's basis type: a definite IBN/non-IBN
/// status, a lower bound in the type lattice, and componentwise upper
/// bounds. `upper_n == nullopt` means unbounded N (Infinity); `upper_k ==
/// nullopt` means unconstrained K (AnyK, the top of the divisibility order).
/// Bounds are meaningful only when status != known_ibn; for an unknown
/// status the lower bound is conditional on the algebra lacking IBN.
class Knowledge {
public:
  IbnStatus status = IbnStatus::unknown;
  BasisType lower{1, 1};
  std::optional<std::uint64_t> upper_n;  // nullopt = Infinity
  std::optional<std::uint64_t> upper_k;  // nullopt = AnyK

  static Knowledge known_ibn();
  static Knowledge exact(const BasisType& t);
  static Knowledge known_non_ibn(const BasisType& lower,
                                 std::optional<std::uint64_t> upper_n,
                                 std::optional<std::uint64_t> upper_k);
  static Knowledge unconstrained(BasisType lower = BasisType(1, 1));  // status unknown

  /// Bounds are consistent: lower.N <= upper_n and lower.K | upper_k where finite.
  bool bounds_well_formed() const;

  friend bool operator==(const Knowledge&, const Knowledge&) = default;
};

/// The basis type when the bounds pin a single value (status known_non_ibn,
/// lower == upper componentwise); nullopt otherwise.
std::optional<BasisType> normalize_exact(const Knowledge& k);

std::string to_string(IbnStatus s);  // "IBN" | "NonIBN" | "Unknown"

}  // namespace ibn
