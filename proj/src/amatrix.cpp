#include "ibn/amatrix.hpp"

#include <string>

#include "ibn/errors.hpp"

namespace ibn {

AMatrix::AMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw Error(errc::invalid_argument, "matrix dimensions must be positive");
  }
  entries_.resize(rows * cols);
}

AMatrix AMatrix::identity(std::size_t n) {
  AMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NCPoly::unit();
  return m;
}

AMatrix AMatrix::adjoint() const {
  AMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = involute(at(r, c));
  }
  return out;
}

AMatrix AMatrix::direct_sum(const AMatrix& a, const AMatrix& b) {
  AMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) out.at(a.rows_ + r, a.cols_ + c) = b.at(r, c);
  }
  return out;
}

AMatrix operator*(const AMatrix& a, const AMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(errc::invalid_argument, "matrix dimensions do not match for product");
  }
  AMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      NCPoly sum;
      for (std::size_t k = 0; k < a.cols_; ++k) sum += a.at(r, k) * b.at(k, c);
      out.at(r, c) = std::move(sum);
    }
  }
  return out;
}

AMatrix operator-(const AMatrix& a, const AMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(errc::invalid_argument, "matrix dimensions do not match for difference");
  }
  AMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    out.entries_[i] = a.entries_[i] - b.entries_[i];
  }
  return out;
}

namespace {

enum class ZeroCheck { all_zero, nonzero, inconclusive };

// Rewrites every entry of m - I; reports whether all normal forms vanish.
ZeroCheck normalizes_to_identity(const AMatrix& m, const Presentation& pres,
                                 std::uint64_t step_bound) {
  ZeroCheck result = ZeroCheck::all_zero;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      NCPoly target = m.at(r, c);
      if (r == c) target -= NCPoly::unit();
      auto nf = normalize(target, pres, step_bound);
      if (!nf) return ZeroCheck::inconclusive;
      if (!nf->is_zero()) result = ZeroCheck::nonzero;
    }
  }
  return result;
}

}  // namespace

VerifyStatus verify_unitary(const AMatrix& u, const Presentation& pres,
                            std::uint64_t step_bound) {
  const ZeroCheck left = normalizes_to_identity(u * u.adjoint(), pres, step_bound);
  if (left != ZeroCheck::all_zero) return VerifyStatus::inconclusive;
  const ZeroCheck right = normalizes_to_identity(u.adjoint() * u, pres, step_bound);
  return right == ZeroCheck::all_zero ? VerifyStatus::verified : VerifyStatus::inconclusive;
}

WitnessAlgebra WitnessAlgebra::cuntz(std::uint32_t p) {
  Presentation pres = Presentation::cuntz(p);
  AMatrix base(1, p);
  for (std::uint32_t j = 0; j < p; ++j) {
    base.at(0, j) = NCPoly::monomial(Word{Letter{j, false}});
  }
  return WitnessAlgebra{std::move(pres), BasisType(1, p - 1), std::move(base)};
}

WitnessAlgebra WitnessAlgebra::unc(std::uint32_t m, std::uint32_t n) {
  Presentation pres = Presentation::unc(m, n);
  AMatrix base(m, n);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      base.at(i, j) = NCPoly::monomial(Word{Letter{i * n + j, false}});
    }
  }
  return WitnessAlgebra{std::move(pres), BasisType(m, n - m), std::move(base)};
}

AMatrix witness(const WitnessAlgebra& alg, Rank a, Rank b) {
  if (a < 1 || b < a) {
    throw Error(errc::invalid_argument, "witness requires 1 <= a <= b");
  }
  if (!equiv_ranks(alg.type, a, b)) {
    throw Error(errc::not_equivalent,
                "ranks " + std::to_string(a) + " and " + std::to_string(b) +
                    " are not equivalent for type " + to_string(alg.type),
                "rank_congruence.equiv_ranks");
  }
  if (a == b) return AMatrix::identity(a);
  // a != b and equivalent, so a >= N and K | b - a. Each factor
  // I_(r-N) (+) base is an r x (r+K) unitary lifting rank r to r + K.
  const std::uint64_t n_min = alg.type.n_min();
  const std::uint64_t period = alg.type.k_period();
  auto lift = [&](Rank r) {
    if (r == n_min) return alg.base;
    return AMatrix::direct_sum(AMatrix::identity(r - n_min), alg.base);
  };
  AMatrix w = lift(a);
  for (Rank r = a + period; r < b; r += period) w = w * lift(r);
  return w;
}

AMatrix delete_column(const AMatrix& u, std::size_t j) {
  if (j < 1 || j > u.cols()) {
    throw Error(errc::index_out_of_range,
                "column index " + std::to_string(j) + " outside 1.." + std::to_string(u.cols()));
  }
  if (u.cols() < 2) {
    throw Error(errc::index_out_of_range, "cannot delete the only column");
  }
  AMatrix out(u.rows(), u.cols() - 1);
  for (std::size_t r = 0; r < u.rows(); ++r) {
    std::size_t out_c = 0;
    for (std::size_t c = 0; c < u.cols(); ++c) {
      if (c == j - 1) continue;
      out.at(r, out_c++) = u.at(r, c);
    }
  }
  return out;
}

IsometryReport verify_isometry(const AMatrix& v, const Presentation& pres,
                               std::uint64_t step_bound) {
  IsometryReport report{VerifyStatus::inconclusive, Properness::unknown};
  if (normalizes_to_identity(v.adjoint() * v, pres, step_bound) == ZeroCheck::all_zero) {
    report.isometry = VerifyStatus::verified;
  }
  if (normalizes_to_identity(v * v.adjoint(), pres, step_bound) == ZeroCheck::nonzero) {
    report.properness = Properness::syntactically_proper;
  }
  return report;
}

}  // namespace ibn
