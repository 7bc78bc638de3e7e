#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ibn/errors.hpp"

// Rank equivalence of standard Hilbert modules A^n, encoded purely through
// the pair (N, K): ranks n, m are equivalent iff n = m, or both are >= N and
// n == m (mod K). Rank 0 is the zero module and is a class of its own.

namespace ibn {

/// Rank of a standard module A^n; 0 denotes the zero module.
using Rank = std::uint64_t;

/// The (N, K) classifying the standard-module equivalences of an algebra
/// without invariant basis number: N is the least rank involved in a
/// nontrivial equivalence, K the minimal jump between equivalent ranks.
class BasisType {
public:
  BasisType() : BasisType(1, 1) {}
  BasisType(std::uint64_t n_min, std::uint64_t k_period);

  std::uint64_t n_min() const { return n_min_; }
  std::uint64_t k_period() const { return k_period_; }

  friend bool operator==(const BasisType&, const BasisType&) = default;

private:
  std::uint64_t n_min_;
  std::uint64_t k_period_;
};

std::string to_string(const BasisType& t);  // "(N,K)"

/// A finite set of unordered pairs of distinct positive ranks, each pair
/// witnessing one equivalence A^a = A^b. Pairs are stored normalized
/// (a < b), deduplicated. Empty means: no evidence against IBN.
class EquivalenceWitnessSet {
public:
  EquivalenceWitnessSet() = default;

  /// Rejects a == b (a trivial pair is evidence of nothing and likely a
  /// caller bug) and zero ranks.
  void add(Rank a, Rank b);

  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<Rank, Rank>>& pairs() const { return pairs_; }

private:
  std::vector<std::pair<Rank, Rank>> pairs_;  // sorted, unique, first < second
};

/// True iff A^n and A^m are equivalent for an algebra of type t.
bool equiv_ranks(const BasisType& t, Rank n, Rank m);

/// Least rank equivalent to n: n itself below N, else N + ((n - N) mod K).
Rank canonical_rank(const BasisType& t, Rank n);

/// Number of equivalence classes of standard modules, rank 0 included: N + K.
std::uint64_t class_count(const BasisType& t);

/// Closed-form type of the congruence generated by a witness set:
/// N = min over pairs of min(a,b), K = gcd over pairs of |a - b|.
/// Throws errc::empty_witness_set when there is no evidence.
BasisType derive_type(const EquivalenceWitnessSet& ws);

/// Partition of {0,...,bound} as a union-find forest.
class RankPartition {
public:
  explicit RankPartition(Rank bound);

  Rank bound() const { return static_cast<Rank>(parent_.size()) - 1; }
  Rank find(Rank x) const;
  bool same_class(Rank a, Rank b) const { return find(a) == find(b); }
  void unite(Rank a, Rank b);

  /// Classes sorted by least element, members ascending.
  std::vector<std::vector<Rank>> classes() const;
  std::size_t class_count() const;

private:
  mutable std::vector<Rank> parent_;
};

/// Brute-force oracle: the smallest equivalence relation on {0,...,bound}
/// containing ws and closed under translation (a ~ b implies a+c ~ b+c
/// whenever both stay within bound). Union-find iterated to fixpoint.
RankPartition oracle_closure(const EquivalenceWitnessSet& ws, Rank bound);

}  // namespace ibn
