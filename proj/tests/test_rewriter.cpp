#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ibn/amatrix.hpp"
#include "ibn/poly_text.hpp"
#include "ibn/presentation.hpp"
#include "test_util.hpp"

using namespace ibn;

namespace {

NCPoly nf(const std::string& text, const Presentation& pres) {
  auto result = normalize(parse_poly(text, pres), pres);
  REQUIRE(result.has_value());
  return *result;
}

// Entry pool for the corpus properties: witness-matrix entries and their
// adjoints for each built-in presentation.
std::vector<NCPoly> entry_pool(const Presentation& pres, const AMatrix& m) {
  std::vector<NCPoly> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      out.push_back(m.at(r, c));
      out.push_back(involute(m.at(r, c)));
    }
  }
  (void)pres;
  return out;
}

struct Corpus {
  Presentation pres;
  std::vector<NCPoly> polys;  // products of <= 3 pool entries
};

Corpus make_corpus(const Presentation& pres, const AMatrix& base) {
  Corpus corpus{pres, {}};
  const auto pool = entry_pool(pres, base);
  for (const auto& p : pool) corpus.polys.push_back(p);
  for (const auto& p : pool) {
    for (const auto& q : pool) corpus.polys.push_back(p * q);
  }
  auto gen = ibn::test::rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 150; ++i) {
    corpus.polys.push_back(pool[pick(gen)] * pool[pick(gen)] * pool[pick(gen)]);
  }
  return corpus;
}

std::vector<Corpus> corpora() {
  std::vector<Corpus> out;
  {
    auto alg = WitnessAlgebra::cuntz(2);
    out.push_back(make_corpus(alg.presentation, witness(alg, 1, 3)));
  }
  {
    auto alg = WitnessAlgebra::cuntz(3);
    out.push_back(make_corpus(alg.presentation, witness(alg, 2, 4)));
  }
  {
    auto alg = WitnessAlgebra::unc(2, 3);
    out.push_back(make_corpus(alg.presentation, alg.base));
  }
  {
    Presentation t2 = Presentation::toeplitz2();
    AMatrix row(1, 2);
    row.at(0, 0) = parse_poly("v1", t2);
    row.at(0, 1) = parse_poly("v2", t2);
    out.push_back(make_corpus(t2, row));
  }
  return out;
}

}  // namespace

TEST_CASE("normalize: defining relations of the built-ins") {
  const Presentation c2 = Presentation::cuntz(2);
  CHECK(nf("v1' v1", c2) == NCPoly::unit());
  CHECK(nf("v2' v1", c2) == NCPoly::zero());
  CHECK(nf("v1 v1' + v2 v2'", c2) == NCPoly::unit());

  const Presentation t2 = Presentation::toeplitz2();
  CHECK(nf("v1' v1", t2) == NCPoly::unit());
  // No completeness rule: the range projections do not sum to 1 here.
  CHECK(nf("v1 v1' + v2 v2'", t2) == parse_poly("v1 v1' + v2 v2'", t2));

  const Presentation u25 = Presentation::unc(2, 5);
  std::string row = "u1_1 u1_1' + u1_2 u1_2' + u1_3 u1_3' + u1_4 u1_4' + u1_5 u1_5'";
  CHECK(nf(row, u25) == NCPoly::unit());
  std::string cross = "u1_1 u2_1' + u1_2 u2_2' + u1_3 u2_3' + u1_4 u2_4' + u1_5 u2_5'";
  CHECK(nf(cross, u25) == NCPoly::zero());
  CHECK(nf("u1_1' u1_1 + u2_1' u2_1", u25) == NCPoly::unit());
  CHECK(nf("u1_1' u1_2 + u2_1' u2_2", u25) == NCPoly::zero());
}

TEST_CASE("normalize handles nested contexts and coefficients") {
  const Presentation c2 = Presentation::cuntz(2);
  // Same context on both range projections, under a coefficient.
  CHECK(nf("3/2 v2 v1 v1' v2' + 3/2 v2 v2 v2' v2'", c2) ==
        (Rational(3, 2) * parse_poly("v2 v2'", c2)));
  // Different coefficients must not contract.
  const NCPoly mixed = parse_poly("v1 v1' + 2 v2 v2'", c2);
  CHECK(*normalize(mixed, c2) == mixed);
  // Partial sums must not contract.
  const Presentation c3 = Presentation::cuntz(3);
  const NCPoly partial = parse_poly("v1 v1' + v2 v2'", c3);
  CHECK(*normalize(partial, c3) == partial);
}

TEST_CASE("normalize commutes with involution through contractions") {
  const Presentation c2 = Presentation::cuntz(2);
  const std::vector<std::string> sums = {
      "v2 v1 v1' v2' + v2 v2 v2' v2' + v1 v1'",
      "v1 v1' + v2 v2' - 1",
      "v1 v1 v1' v1' + v1 v2 v2' v1'",
  };
  for (const auto& text : sums) {
    const NCPoly p = parse_poly(text, c2);
    auto direct = normalize(involute(p), c2);
    auto through = normalize(p, c2);
    REQUIRE(direct.has_value());
    REQUIRE(through.has_value());
    CHECK(*direct == involute(*through));
  }
}

TEST_CASE("normalize is deterministic on repeated runs") {
  const Presentation c3 = Presentation::cuntz(3);
  const NCPoly p = parse_poly("v1 v1' v1 + v2 v2' v2 - v3' v3 v3", c3);
  const auto first = normalize(p, c3);
  for (int i = 0; i < 5; ++i) CHECK(normalize(p, c3) == first);
}

TEST_CASE("step budget exhaustion is Inconclusive, not an answer") {
  const Presentation c2 = Presentation::cuntz(2);
  CHECK(normalize(parse_poly("v1' v1", c2), c2, 0) == std::nullopt);

  // A contraction that replaces a word by itself loops forever; the budget
  // stops it.
  ContractionRule loop{{Word{Letter{0, false}}}, NCPoly::monomial({Letter{0, false}})};
  Presentation looping("loop", {"v1"}, {}, {loop});
  CHECK(normalize(NCPoly::monomial({Letter{0, false}}), looping, 1000) == std::nullopt);
}

TEST_CASE("corpus: normalize is idempotent") {
  for (const auto& corpus : corpora()) {
    for (const auto& p : corpus.polys) {
      auto once = normalize(p, corpus.pres);
      REQUIRE(once.has_value());
      auto twice = normalize(*once, corpus.pres);
      REQUIRE(twice.has_value());
      REQUIRE(*twice == *once);
    }
  }
}

TEST_CASE("corpus: normalize commutes with involution") {
  for (const auto& corpus : corpora()) {
    for (const auto& p : corpus.polys) {
      auto direct = normalize(involute(p), corpus.pres);
      auto through = normalize(p, corpus.pres);
      REQUIRE(direct.has_value());
      REQUIRE(through.has_value());
      REQUIRE(*direct == involute(*through));
    }
  }
}

TEST_CASE("corpus: normalize respects products") {
  auto gen = ibn::test::rng(1234);
  for (const auto& corpus : corpora()) {
    std::uniform_int_distribution<std::size_t> pick(0, corpus.polys.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const NCPoly& p = corpus.polys[pick(gen)];
      const NCPoly& q = corpus.polys[pick(gen)];
      auto direct = normalize(p * q, corpus.pres);
      auto np = normalize(p, corpus.pres);
      auto nq = normalize(q, corpus.pres);
      REQUIRE(direct.has_value());
      REQUIRE(np.has_value());
      REQUIRE(nq.has_value());
      auto recombined = normalize(*np * *nq, corpus.pres);
      REQUIRE(recombined.has_value());
      REQUIRE(*direct == *recombined);
    }
  }
}
