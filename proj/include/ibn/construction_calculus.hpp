#pragma once

#include "ibn/algebra_expr.hpp"
#include "ibn/catalog.hpp"
#include "ibn/knowledge.hpp"

namespace ibn {

/// Propagates basis-type knowledge bottom-up through a construction tree:
/// direct sums join types exactly, tensors and unital images only bound them
/// from above, corners of infinite simple algebras force period 1, and
/// inductive limits with unital maps inherit non-IBN from any component (and
/// IBN from all of them). Throws errc::unknown_catalog_id for unresolved
/// leaves and propagates overflow from lcm.
Knowledge infer(const AlgebraExpr& e, const Catalog& catalog);

}  // namespace ibn
