#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ibn/rank_congruence.hpp"

// AST of C*-algebra constructions over catalog leaves. Nodes carry only the
// structure the propagation rules consume; in particular Tensor does not
// record a norm (the rules hold for any choice) and InductiveLimit assumes
// all connecting maps unital.

namespace ibn {

struct AlgebraExpr;
using ExprPtr = std::shared_ptr<const AlgebraExpr>;

struct Leaf {
  std::string catalog_id;
};
struct ExactLeaf {
  BasisType type;
};
struct IbnLeaf {};
struct DirectSum {
  ExprPtr left, right;
};
struct Tensor {
  ExprPtr left, right;
};
struct Quotient {
  ExprPtr inner;
};
struct HomImage {
  ExprPtr inner;
};
struct ExtensionOf {
  ExprPtr quotient_target;  // the algebra this one surjects onto
};
struct CornerOfInfiniteSimple {};
struct InductiveLimit {
  std::vector<ExprPtr> components;  // nonempty
};

struct AlgebraExpr {
  std::variant<Leaf, ExactLeaf, IbnLeaf, DirectSum, Tensor, Quotient, HomImage,
               ExtensionOf, CornerOfInfiniteSimple, InductiveLimit>
      node;
};

ExprPtr make_leaf(std::string catalog_id);
ExprPtr make_exact(const BasisType& t);
ExprPtr make_ibn_leaf();
ExprPtr make_direct_sum(ExprPtr left, ExprPtr right);
ExprPtr make_tensor(ExprPtr left, ExprPtr right);
ExprPtr make_quotient(ExprPtr inner);
ExprPtr make_hom_image(ExprPtr inner);
ExprPtr make_extension_of(ExprPtr quotient_target);
ExprPtr make_corner_of_infinite_simple();
ExprPtr make_inductive_limit(std::vector<ExprPtr> components);  // throws if empty

bool equal(const AlgebraExpr& a, const AlgebraExpr& b);

/// Renders the expression in the CLI surface syntax; inverse of dsl parse.
std::string to_dsl(const AlgebraExpr& e);

}  // namespace ibn
