#include "doctest.h"
#include "noncent/families.hpp"
#include "noncent/isomorphism.hpp"
#include "support.hpp"

using namespace noncent;

TEST_CASE("family orders and shapes") {
  CHECK(families::cyclic(7).order() == 7);
  CHECK(families::elementary_abelian(2, 4).order() == 16);
  CHECK(families::dihedral(5).order() == 10);
  CHECK(families::generalized_quaternion(32).order() == 32);
  CHECK(families::modular_M(64).order() == 64);
  CHECK(families::heisenberg(5).order() == 125);
  CHECK(center(families::modular_M(16)).size() == 4);
  CHECK(center(families::heisenberg(3)).size() == 3);
  CHECK(center(families::dihedral(5)).size() == 1);
  CHECK(center(families::generalized_quaternion(16)).size() == 2);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(families::cyclic(0), Error);
  CHECK_THROWS_AS(families::elementary_abelian(4, 2), Error);
  CHECK_THROWS_AS(families::dihedral(1), Error);
  CHECK_THROWS_AS(families::generalized_quaternion(12), Error);
  CHECK_THROWS_AS(families::modular_M(4), Error);
  CHECK_THROWS_AS(families::heisenberg(2), Error);
  CHECK_THROWS_AS(families::cyclic(20000), Error);
}

TEST_CASE("families match catalog groups") {
  CHECK(is_isomorphic(families::dihedral(4), testing::by_label("order8.cat", "[8,3]")));
  CHECK(is_isomorphic(families::generalized_quaternion(8), testing::by_label("order8.cat", "[8,4]")));
  CHECK(is_isomorphic(families::modular_M(16), testing::by_label("order16.cat", "[16,6]")));
  CHECK(is_isomorphic(families::dihedral(8), testing::by_label("order16.cat", "[16,7]")));
  CHECK(is_isomorphic(families::generalized_quaternion(16), testing::by_label("order16.cat", "[16,9]")));
}

TEST_CASE("family specs") {
  CHECK(is_isomorphic(families::from_spec("dihedral:4"), families::dihedral(4)));
  CHECK(is_isomorphic(families::from_spec("elem:2:3"), families::elementary_abelian(2, 3)));
  const auto g = families::from_spec("dihedral:4 x cyclic:3");
  CHECK(g.order() == 24);
  CHECK(is_isomorphic(g, direct_product(families::dihedral(4), families::cyclic(3))));
  CHECK(families::from_spec("  M:16  x  cyclic:2 x cyclic:2 ").order() == 64);
  for (const char* bad : {"", "dihedral", "dihedral:", "dihedral:x", "dihedral:4 x", "dihedral:4 y cyclic:2", "foo:3",
                          "elem:2", "cyclic:3:4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(families::from_spec(bad), Error);
  }
}
