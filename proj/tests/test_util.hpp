#pragma once

#include <random>

#include "ibn/rank_congruence.hpp"

namespace ibn::test {

inline std::mt19937_64 rng(std::uint64_t seed = 0x1b0cafe) {
  return std::mt19937_64(seed);
}

/// The oracle partition and the closed-form relation agree on {0,...,bound}.
inline bool relation_matches(const RankPartition& p, const BasisType& t) {
  const Rank bound = p.bound();
  for (Rank a = 0; a <= bound; ++a) {
    for (Rank b = a; b <= bound; ++b) {
      if (p.same_class(a, b) != equiv_ranks(t, a, b)) return false;
    }
  }
  return true;
}

}  // namespace ibn::test
