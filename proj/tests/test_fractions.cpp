#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "locus/fractions.hpp"
#include "locus/paths.hpp"

using namespace locus;
using namespace fixtures;

TEST_CASE("LF axioms pass on the interval with sigma = {XY} + ids") {
  FinCategory c = interval();
  auto rep = check_calculus_left(c, MorphismSet::of(c, {mor(c, "XY")}));
  REQUIRE(rep.pass());
  REQUIRE(rep.sigma_augmented);
}

TEST_CASE("LF axioms pass with identities only, on every fixture") {
  for (auto c : {interval(), chain3(), chain4(), span(), cospan(), diamond(), parallel_pair()}) {
    auto rep = check_calculus_left(c, MorphismSet::identities(c));
    REQUIRE(rep.pass());
    REQUIRE(!rep.sigma_augmented);
  }
}

TEST_CASE("LF2 fails on the span with witness (sigma, f)") {
  FinCategory c = span();
  int s = mor(c, "XY"), f = mor(c, "XZ");
  auto rep = check_calculus_left(c, MorphismSet::of(c, {s}));
  REQUIRE(!rep.lf2);
  bool witnessed = false;
  for (const auto& w : rep.witnesses)
    if (w.axiom == LFWitness::Axiom::LF2 && w.mors[0] == s && w.mors[1] == f) witnessed = true;
  REQUIRE(witnessed);
}

TEST_CASE("right calculus is the left calculus of the opposite") {
  // the cospan is opposite to the span, so right fractions fail there
  FinCategory c = cospan();
  auto sigma = MorphismSet::of(c, {mor(c, "YX")});
  auto rep = check_calculus_right(c, sigma);
  REQUIRE(!rep.lf2);
  auto rep_op = check_calculus_left(c.opposite(), sigma);
  REQUIRE(rep.pass() == rep_op.pass());
  // and the span itself admits right fractions (every span has a common source)
  FinCategory s = span();
  REQUIRE(check_calculus_right(s, MorphismSet::of(s, {mor(s, "XY")})).pass());
}

TEST_CASE("fraction equivalence is reflexive") {
  FinCategory c = interval();
  auto sigma = MorphismSet::identities(c);
  LeftFraction f{mor(c, "XY"), c.identity[obj(c, "Y")]};
  REQUIRE(fraction_equivalent(c, sigma, f, f));
}

TEST_CASE("fraction equivalence finds the diagram through the apex") {
  // chain X -> Y -> Y' with sigma = {Y -> Y'}: (X->Y, id) ~ (X->Y', YY')
  FinCategory c = chain3();  // objects X, Y, Z with Z playing Y'
  auto sigma = MorphismSet::of(c, {mor(c, "YZ")});
  LeftFraction f1{mor(c, "XY"), c.identity[obj(c, "Y")]};
  LeftFraction f2{mor(c, "XZ"), mor(c, "YZ")};
  REQUIRE(fraction_equivalent(c, sigma, f1, f2));
}

TEST_CASE("distinct parallel arrows stay distinct at sigma = ids") {
  FinCategory c = parallel_pair();
  auto sigma = MorphismSet::identities(c);
  int idy = c.identity[obj(c, "Y")];
  LeftFraction f1{mor(c, "s1"), idy};
  LeftFraction f2{mor(c, "s2"), idy};
  REQUIRE(!fraction_equivalent(c, sigma, f1, f2));
  REQUIRE(fraction_equivalent(c, sigma, f2, f2));
}

TEST_CASE("fraction equivalence rejects mismatched endpoints") {
  FinCategory c = chain3();
  auto sigma = MorphismSet::identities(c);
  LeftFraction f1{mor(c, "XY"), c.identity[obj(c, "Y")]};
  LeftFraction f2{mor(c, "YZ"), c.identity[obj(c, "Z")]};
  REQUIRE_THROWS_AS(fraction_equivalent(c, sigma, f1, f2), Error);
}

TEST_CASE("composing identity-denominator fractions is plain composition") {
  FinCategory c = chain3();
  auto sigma = MorphismSet::identities(c);
  LeftFraction f{mor(c, "XY"), c.identity[obj(c, "Y")]};
  LeftFraction g{mor(c, "YZ"), c.identity[obj(c, "Z")]};
  auto cls = compose_fractions(c, sigma, f, g);
  LeftFraction expect{mor(c, "XZ"), c.identity[obj(c, "Z")]};
  REQUIRE(std::find(cls.members.begin(), cls.members.end(), expect) != cls.members.end());
}

TEST_CASE("sigma and its formal inverse compose to the identity class") {
  FinCategory c = interval();
  int s = mor(c, "XY");
  auto sigma = MorphismSet::of(c, {s});
  int X = obj(c, "X"), Y = obj(c, "Y");
  LeftFraction qs{s, c.identity[Y]};        // Q(σ) : X -> Y
  LeftFraction qs_inv{c.identity[Y], s};    // Q(σ)⁻¹ : Y -> X
  auto cls = compose_fractions(c, sigma, qs, qs_inv);
  LeftFraction idx{c.identity[X], c.identity[X]};
  bool contains_id = false;
  for (auto& m : cls.members)
    if (fraction_equivalent(c, sigma, m, idx)) contains_id = true;
  REQUIRE(contains_id);
}

TEST_CASE("fraction category of the interval: all hom-sets singletons") {
  FinCategory c = interval();
  auto res = build_fraction_category(c, MorphismSet::of(c, {mor(c, "XY")}));
  REQUIRE(validate_category(res.category).valid());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) REQUIRE(res.category.hom[x][y].size() == 1);
  REQUIRE(!res.functor.check().has_value());
}

TEST_CASE("fraction category at identities is isomorphic to C") {
  for (auto c : {interval(), chain3(), span(), parallel_pair()}) {
    auto res = build_fraction_category(c, MorphismSet::identities(c));
    REQUIRE(res.category.num_mors() == c.num_mors());
    REQUIRE(is_equivalence(res.functor));
  }
}

TEST_CASE("fraction category of the chain: Y and Z merge") {
  FinCategory c = chain3();
  auto res = build_fraction_category(c, MorphismSet::of(c, {mor(c, "YZ")}));
  const auto& q = res.category;
  REQUIRE(validate_category(q).valid());
  int X = obj(c, "X"), Y = obj(c, "Y"), Z = obj(c, "Z");
  REQUIRE(q.hom[X][Y].size() == 1);
  REQUIRE(q.hom[Y][Z].size() == 1);
  REQUIRE(q.is_iso(q.hom[Y][Z][0]));
  REQUIRE(q.hom[Y][X].empty());
}

TEST_CASE("build_fraction_category rejects a failing calculus") {
  FinCategory c = span();
  REQUIRE_THROWS_AS(build_fraction_category(c, MorphismSet::of(c, {mor(c, "XY")})), Error);
}

TEST_CASE("saturation at identities is exactly the isomorphisms") {
  for (auto c : {interval(), chain3(), diamond()}) {
    auto sat = saturation(c, MorphismSet::identities(c));
    for (int m = 0; m < c.num_mors(); ++m) REQUIRE(bool(sat.contains(m)) == c.is_iso(m));
  }
}

TEST_CASE("saturation of the interval contains all three morphisms") {
  FinCategory c = interval();
  auto sat = saturation(c, MorphismSet::of(c, {mor(c, "XY")}));
  REQUIRE(int(sat.ids().size()) == c.num_mors());
}

TEST_CASE("saturation on the chain picks up the composite") {
  FinCategory c = chain3();
  auto sat = saturation(c, MorphismSet::of(c, {mor(c, "XY"), mor(c, "YZ")}));
  REQUIRE(sat.contains(mor(c, "XZ")));
}

TEST_CASE("saturation is idempotent") {
  FinCategory c = chain3();
  for (auto ids : {std::vector<int>{mor(c, "YZ")}, std::vector<int>{mor(c, "XY"), mor(c, "YZ")}}) {
    auto sat = saturation(c, MorphismSet::of(c, ids));
    auto sat2 = saturation(c, sat);
    REQUIRE(sat.member == sat2.member);
  }
}

TEST_CASE("subcategory comparison: D = C is the identity case") {
  FinCategory c = chain3();
  auto cmp = induced_subcategory_functor(c, MorphismSet::of(c, {mor(c, "YZ")}), {0, 1, 2});
  REQUIRE(cmp.fully_faithful);
  REQUIRE(cmp.hypothesis_holds);
}

TEST_CASE("subcategory comparison on {Y,Z}: hypothesis holds, fully faithful") {
  FinCategory c = chain3();
  auto cmp = induced_subcategory_functor(c, MorphismSet::of(c, {mor(c, "YZ")}),
                                         {obj(c, "Y"), obj(c, "Z")});
  REQUIRE(cmp.hypothesis_holds);
  REQUIRE(cmp.fully_faithful);
}

TEST_CASE("subcategory comparison on {X,Y}: hypothesis fails at Y -> Z") {
  FinCategory c = chain3();
  auto cmp = induced_subcategory_functor(c, MorphismSet::of(c, {mor(c, "YZ")}),
                                         {obj(c, "X"), obj(c, "Y")});
  REQUIRE(!cmp.hypothesis_holds);
  REQUIRE(cmp.hypothesis_witness == mor(c, "YZ"));
}

// --- invariants -------------------------------------------------------------

TEST_CASE("completion independence: every LF2 completion gives the same class") {
  FinCategory c = chain3();
  for (auto sigma_ids : {std::vector<int>{mor(c, "YZ")},
                         std::vector<int>{mor(c, "XY"), mor(c, "YZ"), mor(c, "XZ")}}) {
    auto sigma = MorphismSet::of(c, sigma_ids).with_identities(c);
    auto built = build_fraction_category(c, sigma);
    for (const auto& f : built.classes)
      for (const auto& g : built.classes) {
        if (fraction_target(c, f.representative) != fraction_source(c, g.representative))
          continue;
        // reference composite
        auto ref = compose_fractions(c, sigma, f.representative, g.representative);
        // all members and all completions must land in the same class
        for (const auto& fm : f.members)
          for (const auto& gm : g.members) {
            int yp = c.mors[fm.denominator].dst;
            int zp = c.mors[gm.numerator].dst;
            (void)yp;
            (void)zp;
            for (int sp = 0; sp < c.num_mors(); ++sp) {
              if (!sigma.contains(sp) || c.mors[sp].src != c.mors[gm.numerator].dst) continue;
              for (int bp : c.hom[c.mors[fm.denominator].dst][c.mors[sp].dst]) {
                if (c.comp[sp][gm.numerator] != c.comp[bp][fm.denominator]) continue;
                LeftFraction composite{c.comp[bp][fm.numerator], c.comp[sp][gm.denominator]};
                REQUIRE(fraction_equivalent(c, sigma, composite, ref.representative));
              }
            }
          }
      }
  }
}

TEST_CASE("oracle agreement: hom-set bijection commuting with composition") {
  struct Case {
    FinCategory c;
    std::vector<int> sigma_ids;
  };
  std::vector<Case> cases;
  {
    FinCategory c = interval();
    cases.push_back({c, {mor(c, "XY")}});
    cases.push_back({c, {}});
  }
  {
    FinCategory c = chain3();
    cases.push_back({c, {mor(c, "YZ")}});
    cases.push_back({c, {mor(c, "XY"), mor(c, "YZ"), mor(c, "XZ")}});
  }
  {
    FinCategory c = diamond();
    cases.push_back({c, {mor(c, "YW"), mor(c, "ZW")}});
  }
  for (const auto& cse : cases) {
    const FinCategory& c = cse.c;
    auto sigma = MorphismSet::of(c, cse.sigma_ids);
    auto frac = build_fraction_category(c, sigma);
    auto oracle = path_localization_oracle(c, sigma, 8);
    REQUIRE(oracle.stabilized);
    // comparison: [α,σ] ↦ class of the path (α then σ⁻¹)
    auto sig = sigma.with_identities(c);
    std::vector<int> to_oracle(frac.category.num_mors(), -1);
    for (int k = 0; k < frac.category.num_mors(); ++k) {
      auto rep = frac.classes[k].representative;
      int qa = oracle.functor.mmap[rep.numerator];
      int qs = oracle.functor.mmap[rep.denominator];
      int qs_inv = oracle.category.find_inverse(qs);
      REQUIRE(qs_inv >= 0);
      to_oracle[k] = oracle.category.comp[qs_inv][qa];
    }
    // bijection hom-set by hom-set
    for (int x = 0; x < c.num_objects(); ++x)
      for (int y = 0; y < c.num_objects(); ++y) {
        const auto& fr = frac.category.hom[x][y];
        const auto& orc = oracle.category.hom[x][y];
        REQUIRE(fr.size() == orc.size());
        std::vector<char> hit(oracle.category.num_mors(), 0);
        for (int m : fr) {
          REQUIRE(!hit[to_oracle[m]]);
          hit[to_oracle[m]] = 1;
        }
      }
    // commutes with composition
    for (int g = 0; g < frac.category.num_mors(); ++g)
      for (int f = 0; f < frac.category.num_mors(); ++f) {
        if (frac.category.mors[f].dst != frac.category.mors[g].src) continue;
        REQUIRE(to_oracle[frac.category.comp[g][f]] ==
                oracle.category.comp[to_oracle[g]][to_oracle[f]]);
      }
  }
}

TEST_CASE("le:calc-adj style bijection characterizes local objects") {
  FinCategory c = chain3();
  auto sigma = MorphismSet::of(c, {mor(c, "YZ")});
  auto frac = build_fraction_category(c, sigma);
  auto locals = local_objects(c, sigma.with_identities(c));
  for (int x = 0; x < c.num_objects(); ++x) {
    bool bijective_everywhere = true;
    for (int w = 0; w < c.num_objects(); ++w) {
      std::vector<char> hit(frac.category.num_mors(), 0);
      bool inj = true;
      for (int a : c.hom[w][x]) {
        int img = frac.functor.mmap[a];
        if (hit[img]) inj = false;
        hit[img] = 1;
      }
      bool surj = true;
      for (int m : frac.category.hom[w][x])
        if (!hit[m]) surj = false;
      if (!inj || !surj) bijective_everywhere = false;
    }
    bool is_local = std::find(locals.begin(), locals.end(), x) != locals.end();
    REQUIRE(bijective_everywhere == is_local);
  }
}

TEST_CASE("quotient functor right adjoint iff every object reflects into locals") {
  struct Case {
    FinCategory c;
    std::vector<int> sigma_ids;
  };
  std::vector<Case> cases;
  {
    FinCategory c = interval();
    cases.push_back({c, {mor(c, "XY")}});
    cases.push_back({c, {}});
  }
  {
    FinCategory c = chain3();
    cases.push_back({c, {mor(c, "YZ")}});
  }
  {
    FinCategory c = diamond();
    cases.push_back({c, {mor(c, "YW"), mor(c, "ZW")}});
  }
  for (const auto& cse : cases) {
    const FinCategory& c = cse.c;
    auto sigma = MorphismSet::of(c, cse.sigma_ids).with_identities(c);
    auto frac = build_fraction_category(c, sigma);
    // right adjoint of P: search as a left adjoint on opposite data
    auto p_op = std::make_shared<const FinCategory>(frac.functor.src->opposite());
    auto q_op = std::make_shared<const FinCategory>(frac.functor.dst->opposite());
    FinFunctor P_op;
    P_op.src = p_op;
    P_op.dst = q_op;
    P_op.omap = frac.functor.omap;
    P_op.mmap = frac.functor.mmap;
    bool has_right_adjoint = find_left_adjoint(P_op).has_value();

    auto locals = local_objects(c, sigma);
    bool every_object_reflects = true;
    for (int x = 0; x < c.num_objects(); ++x) {
      bool found = false;
      for (int e = 0; e < c.num_mors() && !found; ++e) {
        if (c.mors[e].src != x) continue;
        bool local_target =
            std::find(locals.begin(), locals.end(), c.mors[e].dst) != locals.end();
        if (local_target && frac.category.is_iso(frac.functor.mmap[e])) found = true;
      }
      if (!found) every_object_reflects = false;
    }
    REQUIRE(has_right_adjoint == every_object_reflects);
  }
}
