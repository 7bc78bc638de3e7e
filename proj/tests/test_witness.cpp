#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ibn/amatrix.hpp"
#include "ibn/errors.hpp"
#include "ibn/poly_text.hpp"

using namespace ibn;

namespace {

AMatrix row_matrix(const Presentation& pres, std::initializer_list<std::string> entries) {
  AMatrix m(1, entries.size());
  std::size_t c = 0;
  for (const auto& e : entries) m.at(0, c++) = parse_poly(e, pres);
  return m;
}

}  // namespace

TEST_CASE("generator matrices verify as unitaries") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    auto alg = WitnessAlgebra::cuntz(n);
    CHECK(verify_unitary(alg.base, alg.presentation) == VerifyStatus::verified);
  }
  for (auto [m, n] : {std::pair{1u, 2u}, {1u, 3u}, {2u, 3u}, {2u, 5u}, {3u, 7u}}) {
    auto alg = WitnessAlgebra::unc(m, n);
    CHECK(verify_unitary(alg.base, alg.presentation) == VerifyStatus::verified);
  }
}

TEST_CASE("toeplitz row is inconclusive: rewriting cannot prove completeness") {
  const Presentation t2 = Presentation::toeplitz2();
  const AMatrix row = row_matrix(t2, {"v1", "v2"});
  CHECK(verify_unitary(row, t2) == VerifyStatus::inconclusive);

  // The failure is one-sided: the defect polynomial survives rewriting.
  NCPoly defect = (row * row.adjoint()).at(0, 0) - NCPoly::unit();
  auto nf = normalize(defect, t2);
  REQUIRE(nf.has_value());
  CHECK(*nf == parse_poly("v1 v1' + v2 v2' - 1", t2));
}

TEST_CASE("witness: frozen small cases") {
  SUBCASE("cuntz(2), 1 -> 3, the chained row") {
    auto alg = WitnessAlgebra::cuntz(2);
    const AMatrix w = witness(alg, 1, 3);
    CHECK(w == row_matrix(alg.presentation, {"v1", "v2 v1", "v2 v2"}));
    CHECK(verify_unitary(w, alg.presentation) == VerifyStatus::verified);
  }
  SUBCASE("cuntz(3), 2 -> 4, a single block lift") {
    auto alg = WitnessAlgebra::cuntz(3);
    const AMatrix w = witness(alg, 2, 4);
    AMatrix expected = AMatrix::direct_sum(AMatrix::identity(1), alg.base);
    CHECK(w == expected);
    CHECK(verify_unitary(w, alg.presentation) == VerifyStatus::verified);
  }
  SUBCASE("equal ranks give the identity") {
    auto alg = WitnessAlgebra::cuntz(3);
    CHECK(witness(alg, 2, 2) == AMatrix::identity(2));
  }
  SUBCASE("non-equivalent ranks raise NotEquivalent") {
    auto alg = WitnessAlgebra::cuntz(3);
    try {
      witness(alg, 1, 2);
      FAIL("expected NotEquivalent");
    } catch (const Error& e) {
      CHECK(e.code() == errc::not_equivalent);
    }
    CHECK_THROWS_AS(witness(alg, 2, 1), Error);  // order violates the pre
  }
}

TEST_CASE("witness chains verify across the corpus") {
  for (std::uint32_t p : {2u, 3u, 4u}) {
    auto alg = WitnessAlgebra::cuntz(p);
    const std::uint64_t period = alg.type.k_period();
    for (Rank a = 1; a <= 3; ++a) {
      for (std::uint64_t s = 1; s <= 3; ++s) {
        const Rank b = a + s * period;
        const AMatrix w = witness(alg, a, b);
        CHECK(w.rows() == a);
        CHECK(w.cols() == b);
        REQUIRE(verify_unitary(w, alg.presentation) == VerifyStatus::verified);
      }
    }
  }
  for (auto [m, n] : {std::pair{1u, 2u}, {1u, 3u}, {2u, 3u}, {2u, 5u}, {3u, 7u}}) {
    auto alg = WitnessAlgebra::unc(m, n);
    const AMatrix w = witness(alg, m, n);
    REQUIRE(verify_unitary(w, alg.presentation) == VerifyStatus::verified);
  }
}

TEST_CASE("witness chain over a rectangular base") {
  // Two lifts of the 1x2 rectangular-unitary generator matrix.
  auto alg = WitnessAlgebra::unc(1, 2);
  const AMatrix w = witness(alg, 1, 3);
  CHECK(w.cols() == 3);
  CHECK(verify_unitary(w, alg.presentation) == VerifyStatus::verified);

  // Chained lifts of a wider base produce genuine polynomial entries; the
  // contraction matcher has to find its sums inside nontrivial contexts.
  auto u25 = WitnessAlgebra::unc(2, 5);
  const AMatrix chained = witness(u25, 2, 8);
  CHECK(chained.rows() == 2);
  CHECK(chained.cols() == 8);
  CHECK(chained.at(0, 4).term_count() == 2);
  CHECK(verify_unitary(chained, u25.presentation) == VerifyStatus::verified);

  const AMatrix high = witness(u25, 5, 11);
  CHECK(verify_unitary(high, u25.presentation) == VerifyStatus::verified);
}

TEST_CASE("column deletion yields proper isometries") {
  auto alg = WitnessAlgebra::cuntz(3);
  const AMatrix row = alg.base;  // [v1 v2 v3]

  SUBCASE("deleting any column leaves a verified, syntactically proper isometry") {
    for (std::size_t j = 1; j <= 3; ++j) {
      const AMatrix v = delete_column(row, j);
      CHECK(v.rows() == 1);
      CHECK(v.cols() == 2);
      const auto report = verify_isometry(v, alg.presentation);
      CHECK(report.isometry == VerifyStatus::verified);
      CHECK(report.properness == Properness::syntactically_proper);
    }
  }

  SUBCASE("a genuine unitary is not flagged proper") {
    auto c2 = WitnessAlgebra::cuntz(2);
    const auto report = verify_isometry(c2.base, c2.presentation);
    CHECK(report.isometry == VerifyStatus::verified);
    CHECK(report.properness == Properness::unknown);
  }

  SUBCASE("shape contract") {
    const AMatrix v = delete_column(row_matrix(alg.presentation, {"v1", "v2"}), 1);
    CHECK(v.rows() == 1);
    CHECK(v.cols() == 1);
    CHECK(v.at(0, 0) == parse_poly("v2", alg.presentation));
  }

  SUBCASE("out of range") {
    AMatrix m(2, 3);
    try {
      delete_column(m, 5);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == errc::index_out_of_range);
    }
    CHECK_THROWS_AS(delete_column(m, 0), Error);
    CHECK_THROWS_AS(delete_column(AMatrix(1, 1), 1), Error);
  }
}
