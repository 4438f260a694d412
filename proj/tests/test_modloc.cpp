#include <catch2/catch_amalgamated.hpp>

#include "locus/modloc.hpp"

using namespace locus;

TEST_CASE("cyclic rings satisfy the ring axioms") {
  for (int n : {1, 2, 3, 4, 6, 8}) REQUIRE(validate_comm_ring(cyclic_ring(n)).empty());
}

TEST_CASE("multiplicative closure adds the missing products") {
  auto z4 = cyclic_ring(4);
  bool augmented = false;
  auto s = MultSet::closure(z4, {1, 2}, &augmented);
  REQUIRE(augmented);  // 2*2 = 0 joins
  REQUIRE(s.member[0]);
  REQUIRE(s.valid(z4));
}

TEST_CASE("localize_ring(Z/6, {1,3}) has order 2") {
  // independent pair-enumeration oracle over the 12 pairs: (x,s) ~ (x',s')
  // iff 3(x s' - x' s) = 0 mod 6, i.e. iff x s' and x' s share parity.
  auto z6 = cyclic_ring(6);
  auto s = MultSet::closure(z6, {1, 3});
  REQUIRE(s.elements() == std::vector<int>({1, 3}));
  int classes = 0;
  {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 6; ++x)
      for (int se : {1, 3}) pairs.push_back({x, se});
    std::vector<int> cls(pairs.size(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = classes++;
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        auto [x, se] = pairs[i];
        auto [y, te] = pairs[j];
        bool eq = false;
        for (int t : {1, 3})
          if (t * (x * te - y * se) % 6 == 0) eq = true;
        if (eq && cls[j] < 0) cls[j] = cls[i];
      }
    }
  }
  REQUIRE(classes == 2);

  auto loc = localize_ring(z6, s);
  REQUIRE(loc.ring.n == 2);
  REQUIRE(validate_comm_ring(loc.ring).empty());
}

TEST_CASE("localizing at {1} gives the ring back") {
  auto z6 = cyclic_ring(6);
  auto loc = localize_ring(z6, MultSet::closure(z6, {1}));
  REQUIRE(loc.ring.n == 6);
  REQUIRE(validate_comm_ring(loc.ring).empty());
  std::vector<char> hit(6, 0);
  for (int a = 0; a < 6; ++a) hit[loc.canonical[a]] = 1;
  for (int a = 0; a < 6; ++a) REQUIRE(hit[a]);
}

TEST_CASE("localize_ring(Z/4, closure{1,2}) is the zero ring") {
  auto z4 = cyclic_ring(4);
  auto loc = localize_ring(z4, MultSet::closure(z4, {1, 2}));
  REQUIRE(loc.ring.n == 1);  // 2 nilpotent forced invertible
}

TEST_CASE("fraction arithmetic passes the full ring axioms on fixtures") {
  for (auto [n, gens] : std::vector<std::pair<int, std::vector<int>>>{
           {6, {1, 3}}, {6, {1, 2}}, {4, {1, 2}}, {8, {1, 2}}, {6, {1, 5}}}) {
    auto r = cyclic_ring(n);
    auto loc = localize_ring(r, MultSet::closure(r, gens));
    REQUIRE(validate_comm_ring(loc.ring).empty());
  }
}

TEST_CASE("localize_module(Z/6 over itself, {1,3}) has order 2 and eta(2) = 0/1") {
  auto z6 = cyclic_ring(6);
  auto s = MultSet::closure(z6, {1, 3});
  auto sring = localize_ring(z6, s);
  auto m = regular_module(z6);
  REQUIRE(validate_module(z6, m).empty());
  auto loc = localize_module(z6, m, s, sring);
  REQUIRE(loc.module.m == 2);
  // 3·2 = 0 forces 2/1 ~ 0/1
  REQUIRE(loc.eta[2] == loc.eta[0]);
}

TEST_CASE("localize_module at {1} is the module itself") {
  auto z6 = cyclic_ring(6);
  auto s = MultSet::closure(z6, {1});
  auto sring = localize_ring(z6, s);
  auto loc = localize_module(z6, regular_module(z6), s, sring);
  REQUIRE(loc.module.m == 6);
}

TEST_CASE("an S-torsion module localizes to zero") {
  // M = Z/2 over Z/6 with 2 in S: 2 acts as zero on M, so every element is
  // S-torsion and all pairs collapse to (0,1).
  auto z6 = cyclic_ring(6);
  auto s = MultSet::closure(z6, {2});
  REQUIRE(s.member[4]);  // 2*2
  auto sring = localize_ring(z6, s);
  for (const auto& m : enumerate_modules(z6, 2))
    if (m.m == 2) {
      auto loc = localize_module(z6, m, s, sring);
      REQUIRE(loc.module.m == 1);
    }
}

TEST_CASE("module enumeration for Z/6 up to order 8") {
  auto z6 = cyclic_ring(6);
  auto mods = enumerate_modules(z6, 8);
  // groups of exponent dividing 6 and order <= 8: 0, Z2, Z3, Z2^2, Z6, Z2^3
  REQUIRE(int(mods.size()) == 6);
  std::vector<int> orders;
  for (auto& m : mods) orders.push_back(m.m);
  std::sort(orders.begin(), orders.end());
  REQUIRE(orders == std::vector<int>({1, 2, 3, 4, 6, 8}));
}

TEST_CASE("adjunction harness on (Z/6, {1,3}) with cap 6") {
  auto z6 = cyclic_ring(6);
  auto rep = verify_localization_adjunction(z6, MultSet::closure(z6, {1, 3}), 6);
  REQUIRE(rep.adjunction_bijections_ok);
  REQUIRE(rep.restriction_fully_faithful);
  REQUIRE(rep.theta_invertible_everywhere);
  REQUIRE(rep.L_is_localization);
  REQUIRE(rep.locals_match_invertible_action);
  // modules of order <= 6 over Z/6: 0, Z2, Z3, Z2^2, Z6;  3 acts
  // invertibly exactly on the 2-groups 0, Z2, Z2^2 (S⁻¹A ≅ Z/2)
  REQUIRE(rep.modules_over_A == 5);
  REQUIRE(rep.modules_over_SA == 3);
  REQUIRE(int(rep.local_objects_ids.size()) == 3);
}

TEST_CASE("adjunction harness with S = {1}: everything is local") {
  auto z4 = cyclic_ring(4);
  auto rep = verify_localization_adjunction(z4, MultSet::closure(z4, {1}), 4);
  REQUIRE(rep.pass());
  REQUIRE(int(rep.local_objects_ids.size()) == rep.modules_over_A);
}

TEST_CASE("adjunction harness at the units of A: L is the identity") {
  auto z6 = cyclic_ring(6);
  auto rep = verify_localization_adjunction(z6, MultSet::closure(z6, {1, 5}), 6);
  REQUIRE(rep.pass());
  REQUIRE(int(rep.local_objects_ids.size()) == rep.modules_over_A);
}
