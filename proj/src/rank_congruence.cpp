#include "ibn/rank_congruence.hpp"

#include <algorithm>
#include <numeric>

#include "ibn/checked.hpp"

namespace ibn {

BasisType::BasisType(std::uint64_t n_min, std::uint64_t k_period)
    : n_min_(n_min), k_period_(k_period) {
  if (n_min < 1 || k_period < 1) {
    throw Error(errc::invalid_argument, "basis type components must be positive");
  }
}

std::string to_string(const BasisType& t) {
  return "(" + std::to_string(t.n_min()) + "," + std::to_string(t.k_period()) + ")";
}

void EquivalenceWitnessSet::add(Rank a, Rank b) {
  if (a == 0 || b == 0) {
    throw Error(errc::invalid_argument, "witness ranks must be positive");
  }
  if (a == b) {
    throw Error(errc::invalid_argument, "trivial witness pair (a = b) rejected");
  }
  std::pair<Rank, Rank> p{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

bool equiv_ranks(const BasisType& t, Rank n, Rank m) {
  if (n == m) return true;
  if (n < t.n_min() || m < t.n_min()) return false;
  const Rank diff = n > m ? n - m : m - n;
  return diff % t.k_period() == 0;
}

Rank canonical_rank(const BasisType& t, Rank n) {
  if (n < t.n_min()) return n;
  return t.n_min() + (n - t.n_min()) % t.k_period();
}

std::uint64_t class_count(const BasisType& t) {
  return checked_add(t.n_min(), t.k_period());
}

BasisType derive_type(const EquivalenceWitnessSet& ws) {
  if (ws.empty()) {
    throw Error(errc::empty_witness_set,
                "witness set is empty: no evidence against invariant basis number");
  }
  Rank n_min = 0;
  std::uint64_t k = 0;
  bool first = true;
  for (const auto& [a, b] : ws.pairs()) {
    n_min = first ? a : std::min(n_min, a);
    k = std::gcd(k, b - a);
    first = false;
  }
  return BasisType(n_min, k);
}

namespace {
constexpr Rank kMaxPartitionBound = 1'000'000;  // brute-force structure, desk scale
}

RankPartition::RankPartition(Rank bound) {
  if (bound > kMaxPartitionBound) {
    throw Error(errc::invalid_argument, "partition bound too large for brute-force closure");
  }
  parent_.resize(bound + 1);
  std::iota(parent_.begin(), parent_.end(), Rank{0});
}

Rank RankPartition::find(Rank x) const {
  Rank root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    Rank next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

void RankPartition::unite(Rank a, Rank b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  // Keep the smaller rank as representative so class minima are roots.
  if (b < a) std::swap(a, b);
  parent_[b] = a;
}

std::vector<std::vector<Rank>> RankPartition::classes() const {
  std::vector<std::vector<Rank>> by_root(parent_.size());
  for (Rank x = 0; x < parent_.size(); ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<Rank>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  // Members ascend by construction; roots are class minima, so `out` is
  // already ordered by least element.
  return out;
}

std::size_t RankPartition::class_count() const {
  std::size_t n = 0;
  for (Rank x = 0; x < parent_.size(); ++x) {
    if (find(x) == x) ++n;
  }
  return n;
}

RankPartition oracle_closure(const EquivalenceWitnessSet& ws, Rank bound) {
  for (const auto& [a, b] : ws.pairs()) {
    if (a > bound || b > bound) {
      throw Error(errc::invalid_argument, "witness pair exceeds oracle bound");
    }
  }
  RankPartition p(bound);
  for (const auto& [a, b] : ws.pairs()) p.unite(a, b);
  // Close under translation by +1; translation by any c follows by iteration,
  // and every intermediate value stays within the bound.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Rank a = 0; a + 1 <= bound; ++a) {
      for (Rank b = a + 1; b + 1 <= bound; ++b) {
        if (p.same_class(a, b) && !p.same_class(a + 1, b + 1)) {
          p.unite(a + 1, b + 1);
          changed = true;
        }
      }
    }
  }
  return p;
}

}  // namespace ibn
