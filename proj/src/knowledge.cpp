#include "ibn/knowledge.hpp"

#include "ibn/errors.hpp"

namespace ibn {

Knowledge Knowledge::known_ibn() {
  Knowledge k;
  k.status = IbnStatus::known_ibn;
  return k;
}

Knowledge Knowledge::exact(const BasisType& t) {
  return known_non_ibn(t, t.n_min(), t.k_period());
}

Knowledge Knowledge::known_non_ibn(const BasisType& lower,
                                   std::optional<std::uint64_t> upper_n,
                                   std::optional<std::uint64_t> upper_k) {
  Knowledge k;
  k.status = IbnStatus::known_non_ibn;
  k.lower = lower;
  k.upper_n = upper_n;
  k.upper_k = upper_k;
  if (!k.bounds_well_formed()) {
    throw Error(errc::invalid_argument, "inconsistent type bounds");
  }
  return k;
}

Knowledge Knowledge::unconstrained(BasisType lower) {
  Knowledge k;
  k.status = IbnStatus::unknown;
  k.lower = lower;
  return k;
}

bool Knowledge::bounds_well_formed() const {
  if (upper_n && lower.n_min() > *upper_n) return false;
  if (upper_k && *upper_k % lower.k_period() != 0) return false;
  return true;
}

std::optional<BasisType> normalize_exact(const Knowledge& k) {
  if (k.status != IbnStatus::known_non_ibn) return std::nullopt;
  if (k.upper_n && *k.upper_n == k.lower.n_min() && k.upper_k &&
      *k.upper_k == k.lower.k_period()) {
    return k.lower;
  }
  return std::nullopt;
}

std::string to_string(IbnStatus s) {
  switch (s) {
    case IbnStatus::known_ibn: return "IBN";
    case IbnStatus::known_non_ibn: return "NonIBN";
    case IbnStatus::unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace ibn
