#include <algorithm>

#include "doctest.h"
#include "noncent/analysis.hpp"
#include "noncent/families.hpp"
#include "support.hpp"

using namespace noncent;

namespace {

FiniteGroup s3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

std::vector<std::size_t> sorted_sizes(const FiniteGroup& g) {
  auto s = beta_partition(g).class_sizes();
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("beta partitions of small groups") {
  CHECK(beta_partition(families::cyclic(6)).size() == 1);
  CHECK(sorted_sizes(families::dihedral(4)) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(sorted_sizes(s3()) == std::vector<std::size_t>{1, 1, 1, 1, 2});
  CHECK(cent_count(families::cyclic(5)) == 1);
  CHECK(cent_count(families::generalized_quaternion(8)) == 4);
  CHECK(cent_count(families::heisenberg(5)) == 7);
}

TEST_CASE("beta partition invariants") {
  auto groups = testing::all_shipped();
  for (auto& f : testing::family_instances()) groups.push_back(f);
  for (const auto& lg : groups) {
    if (lg.group.order() > 128) continue;
    CAPTURE(lg.label);
    const auto& g = lg.group;
    const auto beta = beta_partition(g);
    const auto z = center(g);
    std::vector<int> seen(g.order(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i)
      for (auto x : beta.classes[i]) {
        ++seen[x];
        CHECK(beta.class_of[x] == i);
      }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    CHECK(beta.classes[0] == z.members());
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto cx = centralizer_set(g, static_cast<Element>(x));
      CHECK(cx == beta.centralizers[beta.class_of[x]]);
      const auto deg = g.order() - beta.classes[beta.class_of[x]].size();
      CHECK(deg % z.size() == 0);
    }
    for (std::size_t i = 0; i < beta.size(); ++i) CHECK(beta.classes[i].size() % z.size() == 0);
    CHECK(beta.size() <= g.order() / z.size());
    if (!g.is_abelian()) CHECK(is_regular(g).has_value() == (beta.size() == g.order() / z.size()));
  }
}

TEST_CASE("regularity") {
  CHECK(is_regular(families::cyclic(6)) == 0u);
  CHECK(is_regular(families::dihedral(4)) == 6u);
  CHECK(is_regular(families::generalized_quaternion(8)) == 6u);
  CHECK(is_regular(families::modular_M(32)) == 24u);
  CHECK_FALSE(is_regular(s3()));
  CHECK(is_induced_regular(families::dihedral(4)) == 4u);
  const auto h3 = families::heisenberg(3);
  const auto beta = beta_partition(h3);
  CHECK(is_induced_regular(h3).has_value());
  for (std::size_t i = 1; i < beta.size(); ++i) CHECK(beta.classes[i].size() == 6);
  for (const auto& lg : testing::catalog("order32.cat"))
    if (is_regular(lg.group)) CHECK(is_induced_regular(lg.group).has_value());
}

TEST_CASE("maximal centralizers and H_x") {
  CHECK(maximal_centralizers(families::dihedral(4)).size() == 3);
  CHECK(maximal_centralizers(s3()).size() == 4);
  CHECK_THROWS_AS(maximal_centralizers(families::cyclic(4)), Error);
  const auto q8 = families::generalized_quaternion(8);
  for (const auto& m : maximal_centralizers(q8)) {
    CHECK(m.centralizer.size() == 4);
    CHECK(as_group(m.centralizer).is_abelian());
  }

  // The rotation class of D8 gives the rotation subgroup.
  const auto d8 = families::dihedral(4);
  const auto beta_d8 = beta_partition(d8);
  const auto h = h_subgroup(beta_d8, beta_d8.class_of[1]);
  CHECK(h.members() == std::vector<Element>{0, 1, 2, 3});

  const auto g = s3();
  const auto beta = beta_partition(g);
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (beta.classes[i].size() == 2) CHECK(h_subgroup(beta, i).size() == 3);
  CHECK_THROWS_AS(h_subgroup(beta, 0), Error);

  for (const auto& lg : testing::all_shipped()) {
    if (lg.group.is_abelian()) continue;
    CAPTURE(lg.label);
    const auto b = beta_partition(lg.group);
    for (const auto& m : maximal_centralizers(b)) CHECK_NOTHROW(h_subgroup(b, m.class_id));
  }
}

TEST_CASE("non-maximal centralizer is rejected") {
  // In S4 the centralizer of a double transposition (order 8) contains the
  // centralizer of a 4-cycle (order 4).
  const auto s4 = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  const auto beta = beta_partition(s4);
  bool rejected = false;
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (beta.centralizers[i].count() == 4 && element_order(s4, beta.classes[i].front()) == 4) {
      try {
        h_subgroup(beta, i);
      } catch (const Error& e) {
        rejected = e.code() == Errc::NotMaximal;
      }
    }
  CHECK(rejected);
}

TEST_CASE("reduced regular 2-groups") {
  CHECK(is_reduced_regular(families::dihedral(4)));
  CHECK(is_reduced_regular(families::generalized_quaternion(8)));
  const auto d8c2 = direct_product(families::dihedral(4), families::cyclic(2));
  CHECK(is_regular(d8c2) == 12u);
  CHECK_FALSE(is_reduced_regular(d8c2));
  CHECK_THROWS_AS(is_reduced_regular(s3()), Error);
  CHECK_THROWS_AS(is_reduced_regular(families::cyclic(8)), Error);
  CHECK_THROWS_AS(is_reduced_regular(families::dihedral(8)), Error);  // not regular
}

TEST_CASE("brute-force abelian factor") {
  CHECK_FALSE(brute_force_abelian_factor(families::dihedral(4)));
  const auto f = brute_force_abelian_factor(direct_product(families::dihedral(4), families::cyclic(2)));
  REQUIRE(f);
  CHECK(f->factor.size() == 2);
  CHECK(f->complement.size() == 8);
  CHECK(brute_force_abelian_factor(families::elementary_abelian(2, 3)).has_value());
  CHECK_THROWS_AS(brute_force_abelian_factor(families::cyclic(128)), Error);
}

TEST_CASE("reduced test agrees with the brute-force factor search") {
  std::size_t compared = 0;
  for (const auto& file : {"order8.cat", "order16.cat", "order32.cat"})
    for (const auto& lg : testing::catalog(file)) {
      if (lg.group.is_abelian() || !is_regular(lg.group)) continue;
      CAPTURE(lg.label);
      CHECK(is_reduced_regular(lg.group) == !brute_force_abelian_factor(lg.group).has_value());
      ++compared;
    }
  CHECK(compared > 20);
}

TEST_CASE("cyclic direct factors are genuine") {
  for (const auto& lg : testing::catalog("order32.cat")) {
    const auto f = cyclic_direct_factor(lg.group);
    if (!f) continue;
    CAPTURE(lg.label);
    const auto& g = lg.group;
    CHECK(center(g).contains(f->generator));
    CHECK(is_normal(g, f->complement));
    CHECK(f->complement.size() * element_order(g, f->generator) == g.order());
    const auto z = generated_subgroup(g, std::vector<Element>{f->generator});
    CHECK_FALSE(f->complement.set().intersects([&] {
      auto s = z.set();
      s.erase(0);
      return s;
    }()));
  }
}

TEST_CASE("regularity report formats") {
  const auto r = regularity_report(families::dihedral(4), "D8");
  CHECK(r.order == 8);
  CHECK(r.center_size == 2);
  CHECK(r.cent_count == 4);
  CHECK(r.index == 4);
  CHECK(r.regular_degree == 6u);
  CHECK(r.induced_degree == 4u);
  CHECK(r.is_reduced == true);
  const auto kv = r.to_key_value();
  CHECK(kv ==
        "label=D8\norder=8\ncenter_size=2\ncent_count=4\nindex=4\ndegree_sequence=6x8\nregular=true\ndegree=6\n"
        "induced_regular=true\ninduced_degree=4\nreduced=true\nclass_sizes=2,2,2,2\n");
  CHECK(r.to_text().find("regular") != std::string::npos);
  const auto s = regularity_report(s3(), "S3").to_key_value();
  CHECK(s.find("regular=false") != std::string::npos);
  CHECK(s.find("reduced=n/a") != std::string::npos);
}
