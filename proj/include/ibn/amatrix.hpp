#pragma once

#include <cstdint>
#include <vector>

#include "ibn/ncpoly.hpp"
#include "ibn/presentation.hpp"
#include "ibn/rank_congruence.hpp"

namespace ibn {

/// Rectangular matrix with *-polynomial entries, row-major.
class AMatrix {
public:
  AMatrix(std::size_t rows, std::size_t cols);  // zero-filled; dims >= 1
  static AMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  NCPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const NCPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Conjugate transpose: entries involuted, indices swapped.
  AMatrix adjoint() const;

  /// Block diagonal [a 0; 0 b].
  static AMatrix direct_sum(const AMatrix& a, const AMatrix& b);

  friend AMatrix operator*(const AMatrix& a, const AMatrix& b);
  friend AMatrix operator-(const AMatrix& a, const AMatrix& b);
  friend bool operator==(const AMatrix&, const AMatrix&) = default;

private:
  std::size_t rows_, cols_;
  std::vector<NCPoly> entries_;
};

enum class VerifyStatus { verified, inconclusive };

/// Verified iff U U* - I_rows and U* U - I_cols both rewrite to zero
/// entrywise. Inconclusive otherwise; rewriting never disproves equality.
VerifyStatus verify_unitary(const AMatrix& u, const Presentation& pres,
                            std::uint64_t step_bound = kDefaultStepBound);

/// An algebra that carries a canonical rectangular unitary: its presentation,
/// its basis type, and the base matrix (1 x p generator row for cuntz,
/// m x n generator matrix for unc).
struct WitnessAlgebra {
  Presentation presentation;
  BasisType type;
  AMatrix base;

  static WitnessAlgebra cuntz(std::uint32_t p);                   // type (1, p-1)
  static WitnessAlgebra unc(std::uint32_t m, std::uint32_t n);    // type (m, n-m)
};

/// An a x b unitary witnessing the equivalence of ranks a and b, built as the
/// product of block lifts I_j (+) base, each lifting a rank by K. Requires
/// 1 <= a <= b; throws errc::not_equivalent when the ranks are not related by
/// the algebra's type. The result always passes verify_unitary.
AMatrix witness(const WitnessAlgebra& alg, Rank a, Rank b);

/// Removes 1-based column j; throws errc::index_out_of_range when j is
/// invalid or the matrix has a single column.
AMatrix delete_column(const AMatrix& u, std::size_t j);

enum class Properness { syntactically_proper, unknown };

struct IsometryReport {
  VerifyStatus isometry;   // verified iff V* V - I rewrites to zero
  Properness properness;   // syntactically_proper iff V V* - I has a nonzero
                           // normal form; not a proof of inequality
};

IsometryReport verify_isometry(const AMatrix& v, const Presentation& pres,
                               std::uint64_t step_bound = kDefaultStepBound);

}  // namespace ibn
