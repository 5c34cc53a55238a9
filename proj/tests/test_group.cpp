#include <random>

#include "doctest.h"
#include "noncent/families.hpp"
#include "noncent/group.hpp"
#include "support.hpp"

using namespace noncent;

namespace {

FiniteGroup s3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("from_table validates the group axioms") {
  CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}}).order() == 2);
  CHECK(code_of([] { FiniteGroup::from_table({{0, 1}, {0, 1}}); }) == Errc::NotAGroup);
  CHECK(code_of([] { FiniteGroup::from_table({{0, 1, 2}, {1, 2}, {2, 0, 1}}); }) == Errc::NotAGroup);
  // Latin square with identity 0 that is not associative (the loop of order 5).
  CHECK(code_of([] {
          FiniteGroup::from_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
        }) == Errc::NotAGroup);
}

TEST_CASE("from_table moves the identity to index 0") {
  // Z/3 written with identity at index 2.
  const auto g = FiniteGroup::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"a", "b", "e"});
  CHECK(g.label(0) == "e");
  CHECK(g.mul(0, 1) == 1);
  CHECK(element_order(g, 1) == 3);
}

TEST_CASE("permutation closure") {
  const auto g = s3();
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(code_of([] { FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, 10); }) == Errc::ClosureExceeded);
  CHECK(FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}).order() == 24);
  CHECK(FiniteGroup::from_permutations(3, {}).order() == 1);
}

TEST_CASE("centralizers, center and quotients") {
  const auto d8 = families::dihedral(4);
  CHECK(center(d8).size() == 2);
  for (std::size_t x = 0; x < 8; ++x) {
    const auto c = centralizer(d8, static_cast<Element>(x));
    CHECK(c.size() == (center(d8).contains(static_cast<Element>(x)) ? 8u : 4u));
  }
  const auto q = quotient(d8, center(d8));
  CHECK(q.order() == 4);
  CHECK(is_elementary_abelian(q));

  const auto g = s3();
  const auto t = generated_subgroup(g, std::vector<Element>{1});
  CHECK(t.size() == 2);
  CHECK_FALSE(is_normal(g, t));
  CHECK(code_of([&] { quotient(g, t); }) == Errc::NotNormal);
  CHECK(left_cosets(t).size() == 3);
}

TEST_CASE("subgroup from a set must be closed") {
  const auto g = families::cyclic(4);
  ElementSet s(4);
  s.insert(0);
  s.insert(1);
  CHECK(code_of([&] { Subgroup::from_set(g, s); }) == Errc::NotASubgroup);
}

TEST_CASE("direct products") {
  const auto g = direct_product(families::cyclic(2), families::cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  bool has_order_6 = false;
  for (std::size_t x = 0; x < 6; ++x) has_order_6 |= element_order(g, static_cast<Element>(x)) == 6;
  CHECK(has_order_6);
}

TEST_CASE("p-group predicates and the trivial group") {
  const auto trivial = families::cyclic(1);
  CHECK(is_p_group(trivial) == kTrivialGroupMarker);
  CHECK(code_of([&] { is_elementary_p(trivial); }) == Errc::TrivialGroup);
  CHECK(is_p_group(families::dihedral(4)) == 2u);
  CHECK_FALSE(is_p_group(s3()));
  CHECK(is_elementary_p(families::elementary_abelian(3, 2)) == 3u);
  CHECK_FALSE(is_elementary_p(families::cyclic(4)));
  CHECK(is_elementary_p(families::heisenberg(3)) == 3u);
  CHECK_FALSE(is_elementary_abelian(families::heisenberg(3)));
}

TEST_CASE("subgroup lattice counts") {
  CHECK(all_subgroups(families::dihedral(4)).size() == 10);
  CHECK(all_subgroups(families::generalized_quaternion(8)).size() == 6);
  CHECK(all_subgroups(s3()).size() == 6);
  CHECK(all_subgroups(families::elementary_abelian(2, 3)).size() == 16);
  CHECK(maximal_subgroups(families::dihedral(4)).size() == 3);
  CHECK(conjugacy_classes(families::dihedral(4)).size() == 5);
  CHECK(conjugacy_classes(s3()).size() == 3);
  CHECK(derived_subgroup(s3()).size() == 3);
}

TEST_CASE("Frattini subgroup: both routes agree on small 2-groups") {
  CHECK(frattini(families::dihedral(4)).size() == 2);
  CHECK(frattini(families::elementary_abelian(2, 3)).size() == 1);
  CHECK(frattini(families::cyclic(8)).size() == 4);
  for (const auto& file : {"order8.cat", "order16.cat", "order32.cat"})
    for (const auto& g : testing::catalog(file)) {
      CAPTURE(g.label);
      CHECK(frattini(g.group) == frattini_by_maximal_subgroups(g.group));
    }
}

TEST_CASE("generating sets generate") {
  std::mt19937 rng(7);
  for (const auto& g : testing::catalog("order16.cat")) {
    const auto gens = generating_set(g.group);
    CHECK(generated_subgroup(g.group, gens).size() == 16);
  }
}

TEST_CASE("number helpers") {
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK(prime_power_base(64) == 2u);
  CHECK(prime_power_base(49) == 7u);
  CHECK_FALSE(prime_power_base(12));
  CHECK_FALSE(prime_power_base(1));
}

TEST_CASE("relabeling preserves invariants") {
  std::mt19937 rng(11);
  for (const auto& g : testing::catalog("order16.cat")) {
    const auto h = testing::relabel(g.group, rng);
    CHECK(center(h).size() == center(g.group).size());
    CHECK(conjugacy_classes(h).size() == conjugacy_classes(g.group).size());
    CHECK(all_subgroups(h).size() == all_subgroups(g.group).size());
  }
}
