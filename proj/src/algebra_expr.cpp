#include "ibn/algebra_expr.hpp"

#include "ibn/errors.hpp"

namespace ibn {

namespace {

template <class T>
ExprPtr wrap(T node) {
  return std::make_shared<const AlgebraExpr>(AlgebraExpr{std::move(node)});
}

// Catalog ids of the parametric families print back as calls: "O:3" -> "O(3)",
// "Unc:2,5" -> "Unc(2,5)", "Rordam:4" -> "Rordam(4)". Fixed ids are verbatim.
std::string leaf_to_dsl(const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos) return id;
  return id.substr(0, colon) + "(" + id.substr(colon + 1) + ")";
}

}  // namespace

ExprPtr make_leaf(std::string catalog_id) { return wrap(Leaf{std::move(catalog_id)}); }
ExprPtr make_exact(const BasisType& t) { return wrap(ExactLeaf{t}); }
ExprPtr make_ibn_leaf() { return wrap(IbnLeaf{}); }
ExprPtr make_direct_sum(ExprPtr l, ExprPtr r) { return wrap(DirectSum{std::move(l), std::move(r)}); }
ExprPtr make_tensor(ExprPtr l, ExprPtr r) { return wrap(Tensor{std::move(l), std::move(r)}); }
ExprPtr make_quotient(ExprPtr inner) { return wrap(Quotient{std::move(inner)}); }
ExprPtr make_hom_image(ExprPtr inner) { return wrap(HomImage{std::move(inner)}); }
ExprPtr make_extension_of(ExprPtr q) { return wrap(ExtensionOf{std::move(q)}); }
ExprPtr make_corner_of_infinite_simple() { return wrap(CornerOfInfiniteSimple{}); }

ExprPtr make_inductive_limit(std::vector<ExprPtr> components) {
  if (components.empty()) {
    throw Error(errc::invalid_argument, "inductive limit needs at least one component");
  }
  return wrap(InductiveLimit{std::move(components)});
}

bool equal(const AlgebraExpr& a, const AlgebraExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Leaf>) {
          return x.catalog_id == y.catalog_id;
        } else if constexpr (std::is_same_v<T, ExactLeaf>) {
          return x.type == y.type;
        } else if constexpr (std::is_same_v<T, IbnLeaf> ||
                             std::is_same_v<T, CornerOfInfiniteSimple>) {
          return true;
        } else if constexpr (std::is_same_v<T, DirectSum> || std::is_same_v<T, Tensor>) {
          return equal(*x.left, *y.left) && equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, Quotient> || std::is_same_v<T, HomImage>) {
          return equal(*x.inner, *y.inner);
        } else if constexpr (std::is_same_v<T, ExtensionOf>) {
          return equal(*x.quotient_target, *y.quotient_target);
        } else {
          static_assert(std::is_same_v<T, InductiveLimit>);
          if (x.components.size() != y.components.size()) return false;
          for (std::size_t i = 0; i < x.components.size(); ++i) {
            if (!equal(*x.components[i], *y.components[i])) return false;
          }
          return true;
        }
      },
      a.node);
}

std::string to_dsl(const AlgebraExpr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Leaf>) {
          return leaf_to_dsl(x.catalog_id);
        } else if constexpr (std::is_same_v<T, ExactLeaf>) {
          return "type(" + std::to_string(x.type.n_min()) + "," +
                 std::to_string(x.type.k_period()) + ")";
        } else if constexpr (std::is_same_v<T, IbnLeaf>) {
          return "ibn";
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          return "oplus(" + to_dsl(*x.left) + "," + to_dsl(*x.right) + ")";
        } else if constexpr (std::is_same_v<T, Tensor>) {
          return "tensor(" + to_dsl(*x.left) + "," + to_dsl(*x.right) + ")";
        } else if constexpr (std::is_same_v<T, Quotient>) {
          return "quotient(" + to_dsl(*x.inner) + ")";
        } else if constexpr (std::is_same_v<T, HomImage>) {
          return "hom(" + to_dsl(*x.inner) + ")";
        } else if constexpr (std::is_same_v<T, ExtensionOf>) {
          return "ext(" + to_dsl(*x.quotient_target) + ")";
        } else if constexpr (std::is_same_v<T, CornerOfInfiniteSimple>) {
          return "corner_infinite_simple";
        } else {
          static_assert(std::is_same_v<T, InductiveLimit>);
          std::string s = "limit(";
          for (std::size_t i = 0; i < x.components.size(); ++i) {
            if (i) s += ",";
            s += to_dsl(*x.components[i]);
          }
          return s + ")";
        }
      },
      e.node);
}

}  // namespace ibn
