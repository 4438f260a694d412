#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "locus/paths.hpp"

using namespace locus;
using namespace fixtures;

TEST_CASE("oracle on the interval collapses everything") {
  FinCategory c = interval();
  auto sigma = MorphismSet::of(c, {mor(c, "XY")});
  auto res = path_localization_oracle(c, sigma, 6);
  REQUIRE(res.stabilized);
  REQUIRE(res.category.num_objects() == 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) REQUIRE(res.category.hom[x][y].size() == 1);
  // X ≅ Y in the localization
  REQUIRE(res.category.is_iso(res.category.hom[0][1][0]));
  REQUIRE(validate_category(res.category).valid());
  // congruence closure at cap 7 confirms stabilization
  auto res7 = path_localization_oracle(c, sigma, 7);
  REQUIRE(res7.stabilized);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      REQUIRE(res7.category.hom[x][y].size() == res.category.hom[x][y].size());
}

TEST_CASE("oracle at identities reproduces the category") {
  for (auto c : {interval(), chain3(), span(), parallel_pair()}) {
    auto res = path_localization_oracle(c, MorphismSet::identities(c), 2);
    REQUIRE(res.stabilized);
    REQUIRE(res.category.num_mors() == c.num_mors());
    REQUIRE(!res.functor.check().has_value());
    REQUIRE(is_equivalence(res.functor));
    REQUIRE(validate_category(res.category).valid());
  }
}

TEST_CASE("oracle on the chain inverts Y -> Z only") {
  FinCategory c = chain3();
  auto sigma = MorphismSet::of(c, {mor(c, "YZ")});
  auto res = path_localization_oracle(c, sigma, 6);
  REQUIRE(res.stabilized);
  const auto& q = res.category;
  int X = obj(c, "X"), Y = obj(c, "Y"), Z = obj(c, "Z");
  REQUIRE(q.hom[X][Y].size() == 1);
  REQUIRE(q.hom[X][Z].size() == 1);
  REQUIRE(q.hom[Y][Z].size() == 1);
  REQUIRE(q.hom[Z][Y].size() == 1);
  REQUIRE(q.hom[Y][X].empty());
  REQUIRE(q.is_iso(q.hom[Y][Z][0]));
  REQUIRE(!q.hom[X][Y].empty());
  REQUIRE(validate_category(q).valid());
}

TEST_CASE("functor into the oracle category is a functor") {
  FinCategory c = chain3();
  auto sigma = MorphismSet::of(c, {mor(c, "YZ")});
  auto res = path_localization_oracle(c, sigma, 6);
  REQUIRE(!res.functor.check().has_value());
  // Q inverts sigma
  REQUIRE(res.category.is_iso(res.functor.mmap[mor(c, "YZ")]));
}
