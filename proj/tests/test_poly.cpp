#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ibn/errors.hpp"
#include "ibn/matrix_io.hpp"
#include "ibn/ncpoly.hpp"
#include "ibn/poly_text.hpp"
#include "ibn/presentation.hpp"
#include "ibn/rational.hpp"
#include "test_util.hpp"

using namespace ibn;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK((-Rational(1, 2)).is_negative());
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);

  SUBCASE("overflow reports instead of wrapping") {
    const Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big + big, Error);
    CHECK_THROWS_AS(big * Rational(2), Error);
  }
}

TEST_CASE("involution on words and polynomials") {
  const Word v1{Letter{0, false}};
  const Word v1_star{Letter{0, true}};
  const Word v1v2{Letter{0, false}, Letter{1, false}};

  CHECK(involute(v1v2) == Word{Letter{1, true}, Letter{0, true}});  // (v1 v2)* = v2' v1'
  CHECK(involute(v1_star) == v1);

  auto gen = ibn::test::rng(5);
  std::uniform_int_distribution<int> len_dist(0, 6);
  std::uniform_int_distribution<std::uint32_t> gen_dist(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::int64_t> coeff_dist(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    NCPoly p;
    for (int t = 0; t < 4; ++t) {
      Word w;
      const int len = len_dist(gen);
      for (int i = 0; i < len; ++i) w.push_back(Letter{gen_dist(gen), coin(gen) == 1});
      p.add_term(w, coeff_dist(gen));
    }
    CHECK(involute(involute(p)) == p);
  }
}

TEST_CASE("polynomial arithmetic basics") {
  const NCPoly one = NCPoly::unit();
  const NCPoly v1 = NCPoly::monomial({Letter{0, false}});
  const NCPoly v2 = NCPoly::monomial({Letter{1, false}});

  CHECK((v1 + v2) - v2 == v1);
  CHECK(v1 - v1 == NCPoly::zero());
  CHECK(one * v1 == v1);
  CHECK(v1 * one == v1);
  CHECK((v1 + v2) * (v1 + v2) == v1 * v1 + v1 * v2 + v2 * v1 + v2 * v2);
  CHECK((Rational(0) * v1).is_zero());
  CHECK((v1 * v2).terms().begin()->first.size() == 2);

  // canonical order: degree first
  NCPoly p = v1 * v2 + one;
  CHECK(p.terms().begin()->first.empty());
}

TEST_CASE("polynomial text round trip and spec syntax") {
  const Presentation c3 = Presentation::cuntz(3);

  SUBCASE("basic forms") {
    CHECK(parse_poly("v1 v2'", c3) ==
          NCPoly::monomial({Letter{0, false}, Letter{1, true}}));
    CHECK(parse_poly("1", c3) == NCPoly::unit());
    CHECK(parse_poly("0", c3) == NCPoly::zero());
    CHECK(parse_poly("3/2 v1", c3) == NCPoly::monomial({Letter{0, false}}, Rational(3, 2)));
    CHECK(parse_poly("v1 - v1", c3) == NCPoly::zero());
    CHECK(parse_poly("-v1 + 2 v1", c3) == NCPoly::monomial({Letter{0, false}}));
    CHECK(parse_poly("v1''", c3) == NCPoly::monomial({Letter{0, false}}));  // '' cancels
    CHECK(parse_poly(" v1   v2 ", c3) == parse_poly("v1 v2", c3));
  }

  SUBCASE("unc generator names") {
    const Presentation u25 = Presentation::unc(2, 5);
    const NCPoly p = parse_poly("u1_2 u2_5'", u25);
    CHECK(p.term_count() == 1);
    CHECK(to_text(p, u25) == "u1_2 u2_5'");
  }

  SUBCASE("errors carry offsets") {
    try {
      parse_poly("v1 + w2", c3);
      FAIL("expected parse error");
    } catch (const SyntaxError& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_poly("", c3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("v1 +", c3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1/0", c3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("v1 v9", c3), SyntaxError);  // v9 not in cuntz(3)
  }

  SUBCASE("random round trip through text") {
    auto gen = ibn::test::rng(11);
    std::uniform_int_distribution<int> len_dist(0, 5);
    std::uniform_int_distribution<std::uint32_t> gen_dist(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::int64_t> num(-5, 5);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
      NCPoly p;
      for (int t = 0; t < 4; ++t) {
        Word w;
        const int len = len_dist(gen);
        for (int i = 0; i < len; ++i) w.push_back(Letter{gen_dist(gen), coin(gen) == 1});
        p.add_term(w, Rational(num(gen), den(gen)));
      }
      const std::string text = to_text(p, c3);
      CHECK(parse_poly(text, c3) == p);
    }
  }
}

TEST_CASE("matrix file round trip") {
  const Presentation c2 = Presentation::cuntz(2);
  AMatrix m(1, 2);
  m.at(0, 0) = parse_poly("v1 v1'", c2);
  m.at(0, 1) = parse_poly("1/2 v2 - 1", c2);

  const auto j = matrix_to_json(m, c2);
  MatrixFile back = matrix_from_json(j);
  CHECK(back.matrix == m);
  CHECK(back.presentation.id() == "cuntz:2");

  SUBCASE("file io") {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "ibn_mtx.json";
    write_matrix_file(path, m, c2);
    MatrixFile loaded = read_matrix_file(path);
    CHECK(loaded.matrix == m);
    std::filesystem::remove(path);
  }

  SUBCASE("malformed files are BadFile") {
    nlohmann::json bad = j;
    bad["entries"] = nlohmann::json::array({"v1"});
    try {
      matrix_from_json(bad);
      FAIL("expected BadFile");
    } catch (const Error& e) {
      CHECK(e.code() == errc::bad_file);
    }
    bad = j;
    bad["presentation"] = "cuntz:1";
    CHECK_THROWS_AS(matrix_from_json(bad), Error);
    bad = j;
    bad["entries"][0] = "w9";
    CHECK_THROWS_AS(matrix_from_json(bad), Error);
  }
}

TEST_CASE("presentation construction guards") {
  CHECK_THROWS_AS(Presentation::cuntz(1), Error);
  CHECK_THROWS_AS(Presentation::unc(2, 2), Error);
  CHECK_THROWS_AS(Presentation::unc(0, 3), Error);
  CHECK_THROWS_AS(Presentation::from_id("nonsense"), Error);
  CHECK(Presentation::from_id("unc:2,5").generator_names().size() == 10);
  CHECK(Presentation::from_id("toeplitz2").contraction_rules().empty());

  SUBCASE("monomial rules must shrink") {
    // v1 -> v1 v1 grows and is rejected at construction.
    std::vector<MonomialRule> growing{{Word{Letter{0, false}},
                                       NCPoly::monomial({Letter{0, false}, Letter{0, false}})}};
    CHECK_THROWS_AS(Presentation("bad", {"v1"}, growing, {}), Error);
  }
}
