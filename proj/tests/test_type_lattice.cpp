#define DOCTEST_CONFIG_SUPER_FAST_ASSERTS
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ibn/errors.hpp"
#include "ibn/type_lattice.hpp"

using namespace ibn;

namespace {

std::vector<BasisType> all_types(std::uint64_t max_component) {
  std::vector<BasisType> out;
  for (std::uint64_t n = 1; n <= max_component; ++n) {
    for (std::uint64_t k = 1; k <= max_component; ++k) out.emplace_back(n, k);
  }
  return out;
}

}  // namespace

TEST_CASE("order and operations: spec cases") {
  CHECK(leq(BasisType(1, 2), BasisType(2, 6)));
  CHECK_FALSE(leq(BasisType(2, 2), BasisType(3, 3)));
  CHECK(leq(BasisType(4, 6), BasisType(4, 6)));

  CHECK(join(BasisType(1, 2), BasisType(2, 3)) == BasisType(2, 6));
  CHECK(join(BasisType(1, 1), BasisType(5, 4)) == BasisType(5, 4));
  CHECK(join(BasisType(3, 4), BasisType(2, 6)) == BasisType(3, 12));

  CHECK(meet(BasisType(2, 4), BasisType(3, 6)) == BasisType(2, 2));
  CHECK(meet(BasisType(1, 1), BasisType(7, 9)) == BasisType(1, 1));
  CHECK(meet(BasisType(1, 2), BasisType(2, 3)) == BasisType(1, 1));
}

TEST_CASE("lattice laws, exhaustive over components <= 12") {
  const auto types = all_types(12);
  for (const auto& a : types) {
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    CHECK(leq(BasisType(1, 1), a));  // (1,1) is the bottom
    for (const auto& b : types) {
      const BasisType ab_join = join(a, b);
      const BasisType ab_meet = meet(a, b);
      REQUIRE(ab_join == join(b, a));
      REQUIRE(ab_meet == meet(b, a));
      REQUIRE(join(a, ab_meet) == a);  // absorption
      REQUIRE(meet(a, ab_join) == a);
      // Order characterizations.
      REQUIRE(leq(a, b) == (ab_join == b));
      REQUIRE(leq(a, b) == (ab_meet == a));
      // join/meet are bounds.
      REQUIRE(leq(a, ab_join));
      REQUIRE(leq(ab_meet, a));
      for (const auto& c : types) {
        REQUIRE(join(join(a, b), c) == join(a, join(b, c)));
        REQUIRE(meet(meet(a, b), c) == meet(a, meet(b, c)));
      }
    }
  }
}

TEST_CASE("join and meet are the least/greatest bounds") {
  const auto types = all_types(8);
  for (const auto& a : types) {
    for (const auto& b : types) {
      for (const auto& c : types) {
        if (leq(a, c) && leq(b, c)) REQUIRE(leq(join(a, b), c));
        if (leq(c, a) && leq(c, b)) REQUIRE(leq(c, meet(a, b)));
      }
    }
  }
}

TEST_CASE("extended lattice with the IBN top") {
  const auto top = ExtendedType::top();
  const auto v12 = ExtendedType::of(BasisType(1, 2));

  CHECK(ext_join(top, v12) == top);
  CHECK(ext_join(v12, top) == top);
  CHECK(ext_meet(top, v12) == v12);
  CHECK(ext_meet(v12, top) == v12);
  CHECK(ext_leq(v12, top));
  CHECK(ext_leq(top, top));
  CHECK_FALSE(ext_leq(top, v12));
  CHECK(ext_leq(ExtendedType::of(BasisType(2, 3)), top));

  std::vector<ExtendedType> elems{top};
  for (const auto& t : all_types(6)) elems.push_back(ExtendedType::of(t));
  for (const auto& a : elems) {
    REQUIRE(ext_join(a, a) == a);
    REQUIRE(ext_meet(a, a) == a);
    REQUIRE(ext_leq(ExtendedType::of(BasisType(1, 1)), a));
    REQUIRE(ext_leq(a, top));
    for (const auto& b : elems) {
      REQUIRE(ext_join(a, b) == ext_join(b, a));
      REQUIRE(ext_meet(a, b) == ext_meet(b, a));
      REQUIRE(ext_join(a, ext_meet(a, b)) == a);
      REQUIRE(ext_meet(a, ext_join(a, b)) == a);
      REQUIRE(ext_leq(a, b) == (ext_join(a, b) == b));
      REQUIRE(ext_leq(a, b) == (ext_meet(a, b) == a));
      for (const auto& c : elems) {
        REQUIRE(ext_join(ext_join(a, b), c) == ext_join(a, ext_join(b, c)));
        REQUIRE(ext_meet(ext_meet(a, b), c) == ext_meet(a, ext_meet(b, c)));
      }
    }
  }
}

TEST_CASE("join reports overflow instead of wrapping") {
  const BasisType huge1(1, (std::uint64_t{1} << 40));
  const BasisType huge2(1, (std::uint64_t{1} << 40) + 1);
  try {
    join(huge1, huge2);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == errc::arithmetic_overflow);
  }
  // meet never overflows
  CHECK(meet(huge1, huge2) == BasisType(1, 1));
}
