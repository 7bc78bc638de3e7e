#include "ibn/construction_calculus.hpp"

#include <algorithm>
#include <numeric>

#include "ibn/checked.hpp"
#include "ibn/errors.hpp"
#include "ibn/type_lattice.hpp"

namespace ibn {

namespace {

using OptU64 = std::optional<std::uint64_t>;

// Upper-bound joins for direct sums: the unbounded sentinel absorbs.
OptU64 join_upper_n(OptU64 a, OptU64 b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}
OptU64 join_upper_k(OptU64 a, OptU64 b) {
  if (!a || !b) return std::nullopt;
  return checked_lcm(*a, *b);
}

// Upper-bound meets for tensors and limits: the unbounded sentinel is neutral.
OptU64 meet_upper_n(OptU64 a, OptU64 b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}
OptU64 meet_upper_k(OptU64 a, OptU64 b) {
  if (!a) return b;
  if (!b) return a;
  return std::gcd(*a, *b);
}

bool is_ibn(const Knowledge& k) { return k.status == IbnStatus::known_ibn; }
bool is_non_ibn(const Knowledge& k) { return k.status == IbnStatus::known_non_ibn; }

Knowledge sum_rule(const Knowledge& a, const Knowledge& b) {
  if (is_ibn(a) || is_ibn(b)) return Knowledge::known_ibn();
  BasisType lower = join(a.lower, b.lower);
  if (is_non_ibn(a) && is_non_ibn(b)) {
    return Knowledge::known_non_ibn(lower, join_upper_n(a.upper_n, b.upper_n),
                                    join_upper_k(a.upper_k, b.upper_k));
  }
  return Knowledge::unconstrained(lower);
}

// Upper bounds contributed by the sides known to lack IBN; bounds of unknown
// sides are contingent on an unresolved status and must not flow in.
std::pair<OptU64, OptU64> meet_uppers_of_non_ibn(std::initializer_list<const Knowledge*> sides) {
  OptU64 n, k;
  for (const Knowledge* s : sides) {
    if (!is_non_ibn(*s)) continue;
    n = meet_upper_n(n, s->upper_n);
    k = meet_upper_k(k, s->upper_k);
  }
  return {n, k};
}

Knowledge tensor_rule(const Knowledge& a, const Knowledge& b) {
  auto [upper_n, upper_k] = meet_uppers_of_non_ibn({&a, &b});
  if (is_non_ibn(a) || is_non_ibn(b)) {
    return Knowledge::known_non_ibn(BasisType(1, 1), upper_n, upper_k);
  }
  return Knowledge::unconstrained();
}

Knowledge image_rule(const Knowledge& inner) {
  if (is_non_ibn(inner)) {
    return Knowledge::known_non_ibn(BasisType(1, 1), inner.upper_n, inner.upper_k);
  }
  return Knowledge::unconstrained();
}

Knowledge extension_rule(const Knowledge& quotient_target) {
  if (is_ibn(quotient_target)) return Knowledge::known_ibn();
  if (is_non_ibn(quotient_target)) return Knowledge::unconstrained(quotient_target.lower);
  return Knowledge::unconstrained();
}

Knowledge corner_rule() {
  // The corner's unit class is zero in K0, so the period is 1; nothing
  // constrains how high the threshold N sits.
  return Knowledge::known_non_ibn(BasisType(1, 1), std::nullopt, 1);
}

Knowledge limit_rule(const std::vector<Knowledge>& components) {
  if (std::all_of(components.begin(), components.end(),
                  [](const Knowledge& k) { return is_ibn(k); })) {
    return Knowledge::known_ibn();
  }
  OptU64 upper_n, upper_k;
  bool any_non_ibn = false;
  for (const Knowledge& k : components) {
    if (!is_non_ibn(k)) continue;
    any_non_ibn = true;
    upper_n = meet_upper_n(upper_n, k.upper_n);
    upper_k = meet_upper_k(upper_k, k.upper_k);
  }
  if (any_non_ibn) return Knowledge::known_non_ibn(BasisType(1, 1), upper_n, upper_k);
  return Knowledge::unconstrained();
}

}  // namespace

Knowledge infer(const AlgebraExpr& e, const Catalog& catalog) {
  return std::visit(
      [&](const auto& x) -> Knowledge {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          auto entry = catalog.lookup(x.catalog_id);
          if (!entry) {
            throw Error(errc::unknown_catalog_id,
                        "catalog id '" + x.catalog_id + "' does not resolve");
          }
          return entry->knowledge;
        } else if constexpr (std::is_same_v<T, ExactLeaf>) {
          return Knowledge::exact(x.type);
        } else if constexpr (std::is_same_v<T, IbnLeaf>) {
          return Knowledge::known_ibn();
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          return sum_rule(infer(*x.left, catalog), infer(*x.right, catalog));
        } else if constexpr (std::is_same_v<T, Tensor>) {
          return tensor_rule(infer(*x.left, catalog), infer(*x.right, catalog));
        } else if constexpr (std::is_same_v<T, Quotient>) {
          return image_rule(infer(*x.inner, catalog));
        } else if constexpr (std::is_same_v<T, HomImage>) {
          return image_rule(infer(*x.inner, catalog));
        } else if constexpr (std::is_same_v<T, ExtensionOf>) {
          return extension_rule(infer(*x.quotient_target, catalog));
        } else if constexpr (std::is_same_v<T, CornerOfInfiniteSimple>) {
          return corner_rule();
        } else {
          static_assert(std::is_same_v<T, InductiveLimit>);
          std::vector<Knowledge> components;
          components.reserve(x.components.size());
          for (const auto& c : x.components) components.push_back(infer(*c, catalog));
          return limit_rule(components);
        }
      },
      e.node);
}

}  // namespace ibn
