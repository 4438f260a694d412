#pragma once

// Calculus-of-left-fractions engine: LF axiom checking with witnesses,
// fraction equivalence by symmetric-transitive closure, composition through
// LF2 completions, the category Σ⁻¹C with its quotient functor, saturation,
// and the full-subcategory comparison.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/common.hpp"
#include "locus/fincat.hpp"

namespace locus {

// ---------------------------------------------------------------------------
// LF axioms

struct LFWitness {
  enum class Axiom { LF1, LF2, LF3 } axiom;
  std::vector<int> mors;
  std::string describe(const FinCategory& c) const {
    auto n = [&](int m) { return c.mors[m].name; };
    switch (axiom) {
      case Axiom::LF1:
        return "LF1: composite of " + n(mors[0]) + " and " + n(mors[1]) + " leaves the set";
      case Axiom::LF2:
        return "LF2: cospan (" + n(mors[0]) + ", " + n(mors[1]) + ") has no completion";
      case Axiom::LF3:
        return "LF3: pair (" + n(mors[0]) + ", " + n(mors[1]) + ") equalized by " + n(mors[2]) +
               " has no coequalizing member";
    }
    return "";
  }
};

struct LFReport {
  bool lf1 = true, lf2 = true, lf3 = true;
  bool sigma_augmented = false;  // identities were added to Σ
  std::vector<LFWitness> witnesses;
  bool pass() const { return lf1 && lf2 && lf3; }
};

inline LFReport check_calculus_left(const FinCategory& c, const MorphismSet& sigma_in) {
  LFReport rep;
  MorphismSet sigma = sigma_in.with_identities(c, &rep.sigma_augmented);
  // LF1: closure under composition
  for (int s = 0; s < c.num_mors(); ++s) {
    if (!sigma.contains(s)) continue;
    for (int t = 0; t < c.num_mors(); ++t) {
      if (!sigma.contains(t) || !c.composable(t, s)) continue;
      if (!sigma.contains(c.comp[t][s])) {
        rep.lf1 = false;
        rep.witnesses.push_back({LFWitness::Axiom::LF1, {s, t}});
      }
    }
  }
  // LF2: every cospan X' <-σ- X -α-> Y completes to a square with σ' in Σ
  for (int s = 0; s < c.num_mors(); ++s) {
    if (!sigma.contains(s)) continue;
    int x = c.mors[s].src, xp = c.mors[s].dst;
    for (int a = 0; a < c.num_mors(); ++a) {
      if (c.mors[a].src != x) continue;
      int y = c.mors[a].dst;
      bool ok = false;
      for (int sp = 0; sp < c.num_mors() && !ok; ++sp) {
        if (!sigma.contains(sp) || c.mors[sp].src != y) continue;
        int yp = c.mors[sp].dst;
        for (int ap : c.hom[xp][yp])
          if (c.comp[sp][a] == c.comp[ap][s]) {
            ok = true;
            break;
          }
      }
      if (!ok) {
        rep.lf2 = false;
        rep.witnesses.push_back({LFWitness::Axiom::LF2, {s, a}});
      }
    }
  }
  // LF3: σ∘-equalized parallel pairs admit a coequalizing member
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y)
      for (int a : c.hom[x][y])
        for (int b : c.hom[x][y]) {
          if (a == b) continue;
          int equalizer = -1;
          for (int s = 0; s < c.num_mors(); ++s)
            if (sigma.contains(s) && c.mors[s].dst == x && c.comp[a][s] == c.comp[b][s]) {
              equalizer = s;
              break;
            }
          if (equalizer < 0) continue;
          bool ok = false;
          for (int t = 0; t < c.num_mors(); ++t)
            if (sigma.contains(t) && c.mors[t].src == y && c.comp[t][a] == c.comp[t][b]) {
              ok = true;
              break;
            }
          if (!ok) {
            rep.lf3 = false;
            rep.witnesses.push_back({LFWitness::Axiom::LF3, {a, b, equalizer}});
          }
        }
  return rep;
}

/// Dual axioms, by delegation to the opposite category.
inline LFReport check_calculus_right(const FinCategory& c, const MorphismSet& sigma) {
  return check_calculus_left(c.opposite(), sigma);
}

// ---------------------------------------------------------------------------
// fractions

/// A roof X -α-> Y' <-σ- Y with σ in Σ.
struct LeftFraction {
  int numerator = -1;    // α
  int denominator = -1;  // σ

  bool operator==(const LeftFraction& o) const {
    return numerator == o.numerator && denominator == o.denominator;
  }
  bool operator<(const LeftFraction& o) const {
    return numerator != o.numerator ? numerator < o.numerator : denominator < o.denominator;
  }
};

inline int fraction_source(const FinCategory& c, const LeftFraction& f) {
  return c.mors[f.numerator].src;
}
inline int fraction_target(const FinCategory& c, const LeftFraction& f) {
  return c.mors[f.denominator].src;
}
inline int fraction_apex(const FinCategory& c, const LeftFraction& f) {
  return c.mors[f.numerator].dst;
}
inline void check_fraction(const FinCategory& c, const MorphismSet& sigma, const LeftFraction& f) {
  require(c.mors[f.numerator].dst == c.mors[f.denominator].dst, ErrorKind::InvalidInput,
          "numerator and denominator must share their apex");
  require(sigma.contains(f.denominator), ErrorKind::InvalidInput,
          "denominator " + c.mors[f.denominator].name + " is not in the designated set");
}

inline std::string fraction_to_string(const FinCategory& c, const LeftFraction& f) {
  return c.objects[fraction_source(c, f)] + " --" + c.mors[f.numerator].name + "--> " +
         c.objects[fraction_apex(c, f)] + " <--" + c.mors[f.denominator].name + "-- " +
         c.objects[fraction_target(c, f)];
}

struct FractionClass {
  LeftFraction representative;        // id-order minimal member
  std::vector<LeftFraction> members;  // full equivalence class, sorted
};

namespace detail {

/// One-step relation of the fraction diagram: a third fraction (α₃,σ₃)
/// through which both roofs map.
inline bool fractions_one_step(const FinCategory& c, const MorphismSet& sigma,
                               const LeftFraction& f, const LeftFraction& g) {
  int a1 = fraction_apex(c, f), a2 = fraction_apex(c, g);
  for (int z = 0; z < c.num_objects(); ++z)
    for (int u : c.hom[a1][z]) {
      if (!sigma.contains(c.comp[u][f.denominator])) continue;
      int alpha3 = c.comp[u][f.numerator];
      int sigma3 = c.comp[u][f.denominator];
      for (int v : c.hom[a2][z])
        if (c.comp[v][g.numerator] == alpha3 && c.comp[v][g.denominator] == sigma3) return true;
    }
  return false;
}

}  // namespace detail

/// All left fractions from x to y (numerator/denominator id order).
inline std::vector<LeftFraction> all_fractions(const FinCategory& c, const MorphismSet& sigma,
                                               int x, int y) {
  std::vector<LeftFraction> out;
  for (int apex = 0; apex < c.num_objects(); ++apex)
    for (int num : c.hom[x][apex])
      for (int den : c.hom[y][apex])
        if (sigma.contains(den)) out.push_back({num, den});
  std::sort(out.begin(), out.end());
  return out;
}

/// Symmetric-transitive closure of the one-step relation, via union-find
/// over every fraction between the two objects.
inline std::vector<FractionClass> fraction_classes(const FinCategory& c, const MorphismSet& sigma,
                                                   int x, int y) {
  auto fr = all_fractions(c, sigma, x, y);
  UnionFind uf(fr.size());
  for (std::size_t i = 0; i < fr.size(); ++i)
    for (std::size_t j = i + 1; j < fr.size(); ++j)
      if (!uf.same(i, j) && detail::fractions_one_step(c, sigma, fr[i], fr[j])) uf.unite(i, j);
  std::vector<FractionClass> classes;
  std::vector<int> class_of(fr.size(), -1);
  for (std::size_t i = 0; i < fr.size(); ++i) {
    std::size_t root = uf.find(i);
    if (class_of[root] < 0) {
      class_of[root] = int(classes.size());
      classes.push_back({fr[root], {}});
    }
    classes[class_of[root]].members.push_back(fr[i]);
  }
  return classes;
}

inline bool fraction_equivalent(const FinCategory& c, const MorphismSet& sigma_in,
                                const LeftFraction& f1, const LeftFraction& f2) {
  MorphismSet sigma = sigma_in.with_identities(c);
  check_fraction(c, sigma, f1);
  check_fraction(c, sigma, f2);
  require(fraction_source(c, f1) == fraction_source(c, f2) &&
              fraction_target(c, f1) == fraction_target(c, f2),
          ErrorKind::SourceTargetMismatch, "fractions must share source and target");
  auto classes = fraction_classes(c, sigma, fraction_source(c, f1), fraction_target(c, f1));
  for (const auto& cls : classes) {
    bool has1 = std::find(cls.members.begin(), cls.members.end(), f1) != cls.members.end();
    bool has2 = std::find(cls.members.begin(), cls.members.end(), f2) != cls.members.end();
    if (has1 || has2) return has1 && has2;
  }
  return false;
}

/// id-order-first LF2 completion of the cospan Y' <-σ- Y -β-> Z':
/// (σ' : Z' -> W in Σ, β' : Y' -> W) with σ'∘β = β'∘σ.
inline std::optional<std::pair<int, int>> lf2_completion(const FinCategory& c,
                                                         const MorphismSet& sigma, int s, int b) {
  int yp = c.mors[s].dst, zp = c.mors[b].dst;
  for (int sp = 0; sp < c.num_mors(); ++sp) {
    if (!sigma.contains(sp) || c.mors[sp].src != zp) continue;
    for (int bp : c.hom[yp][c.mors[sp].dst])
      if (c.comp[sp][b] == c.comp[bp][s]) return std::make_pair(sp, bp);
  }
  return std::nullopt;
}

/// [β,τ]∘[α,σ] = [β'∘α, σ'∘τ] via the id-order-first LF2 completion of
/// (σ, β).  Returns the full class of the result.
inline FractionClass compose_fractions(const FinCategory& c, const MorphismSet& sigma_in,
                                       const LeftFraction& first, const LeftFraction& second) {
  MorphismSet sigma = sigma_in.with_identities(c);
  check_fraction(c, sigma, first);
  check_fraction(c, sigma, second);
  require(fraction_target(c, first) == fraction_source(c, second), ErrorKind::NotComposable,
          "target of the first fraction must equal source of the second");
  auto comp = lf2_completion(c, sigma, first.denominator, second.numerator);
  require(comp.has_value(), ErrorKind::LF2CompletionMissing,
          "no LF2 completion for (" + c.mors[first.denominator].name + ", " +
              c.mors[second.numerator].name + ")");
  auto [sp, bp] = *comp;
  LeftFraction result{c.comp[bp][first.numerator], c.comp[sp][second.denominator]};
  auto classes =
      fraction_classes(c, sigma, fraction_source(c, first), fraction_target(c, second));
  for (const auto& cls : classes)
    if (std::find(cls.members.begin(), cls.members.end(), result) != cls.members.end()) return cls;
  fail(ErrorKind::InvalidInput, "composite fraction missing from its own class list");
}

// ---------------------------------------------------------------------------
// Σ⁻¹C

struct FractionCategoryResult {
  FinCategory category;                     // morphisms = fraction classes
  FinFunctor functor;                       // P_Σ : C -> Σ⁻¹C
  std::vector<FractionClass> classes;       // aligned with category.mors
  MorphismSet sigma;                        // identity-augmented Σ actually used
};

inline FractionCategoryResult build_fraction_category(const FinCategory& c,
                                                      const MorphismSet& sigma_in) {
  LFReport lf = check_calculus_left(c, sigma_in);
  if (!lf.pass()) {
    std::string what = "left-fraction axioms fail:";
    for (const auto& w : lf.witnesses) what += " [" + w.describe(c) + "]";
    fail(ErrorKind::CalculusFails, what);
  }
  MorphismSet sigma = sigma_in.with_identities(c);

  FractionCategoryResult out;
  out.sigma = sigma;
  FinCategory& q = out.category;
  q.objects = c.objects;
  std::vector<std::vector<std::vector<int>>> class_ids(
      c.num_objects(), std::vector<std::vector<int>>(c.num_objects()));
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y)
      for (auto& cls : fraction_classes(c, sigma, x, y)) {
        class_ids[x][y].push_back(int(out.classes.size()));
        q.mors.push_back({"[" + c.mors[cls.representative.numerator].name + "," +
                              c.mors[cls.representative.denominator].name + "]",
                          x, y});
        out.classes.push_back(std::move(cls));
      }

  auto class_of_fraction = [&](int x, int y, const LeftFraction& f) {
    for (int k : class_ids[x][y])
      if (std::find(out.classes[k].members.begin(), out.classes[k].members.end(), f) !=
          out.classes[k].members.end())
        return k;
    fail(ErrorKind::InvalidInput, "fraction not found in any class");
  };

  q.identity.resize(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x)
    q.identity[x] = class_of_fraction(x, x, {c.identity[x], c.identity[x]});

  int nm = int(q.mors.size());
  q.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (q.mors[f].dst != q.mors[g].src) continue;
      auto cls = compose_fractions(c, sigma, out.classes[f].representative,
                                   out.classes[g].representative);
      q.comp[g][f] = class_of_fraction(q.mors[f].src, q.mors[g].dst, cls.representative);
    }
  q.rebuild_hom();

  out.functor.src = std::make_shared<const FinCategory>(c);
  out.functor.dst = std::make_shared<const FinCategory>(q);
  out.functor.omap.resize(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) out.functor.omap[x] = x;
  out.functor.mmap.resize(c.num_mors());
  for (int m = 0; m < c.num_mors(); ++m)
    out.functor.mmap[m] =
        class_of_fraction(c.mors[m].src, c.mors[m].dst, {m, c.identity[c.mors[m].dst]});
  return out;
}

/// LF1 normalization: identities plus closure under composition.  Inverting
/// σ and τ already inverts τ∘σ, so the localization is unchanged.
inline MorphismSet lf1_closure(const FinCategory& c, const MorphismSet& sigma_in,
                               bool* augmented = nullptr) {
  MorphismSet sigma = sigma_in.with_identities(c, augmented);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < c.num_mors(); ++s) {
      if (!sigma.contains(s)) continue;
      for (int t = 0; t < c.num_mors(); ++t) {
        if (!sigma.contains(t) || !c.composable(t, s)) continue;
        int ts = c.comp[t][s];
        if (!sigma.contains(ts)) {
          sigma.member[ts] = 1;
          changed = true;
          if (augmented) *augmented = true;
        }
      }
    }
  }
  return sigma;
}

/// Σ̄: all morphisms that P_Σ makes invertible.  Σ is LF1-normalized first.
inline MorphismSet saturation(const FinCategory& c, const MorphismSet& sigma) {
  auto built = build_fraction_category(c, lf1_closure(c, sigma));
  return inverted_morphisms(built.functor);
}

// ---------------------------------------------------------------------------
// subcategory comparison

struct SubcatComparison {
  FractionCategoryResult sub_localization;  // D[(Σ∩D)⁻¹]
  FinFunctor comparison;                    // D[(Σ∩D)⁻¹] -> C[Σ⁻¹]
  bool fully_faithful = false;
  bool hypothesis_holds = false;  // every σ out of D extends back into Σ∩D
  int hypothesis_witness = -1;    // ambient σ violating the hypothesis
};

inline SubcatComparison induced_subcategory_functor(const FinCategory& c,
                                                    const MorphismSet& sigma_in,
                                                    const std::vector<int>& objectsD) {
  MorphismSet sigma = sigma_in.with_identities(c);
  auto amb = build_fraction_category(c, sigma);

  auto sub = full_subcategory(c, objectsD);
  MorphismSet sigmaD = MorphismSet::none(sub.cat);
  for (int m = 0; m < sub.cat.num_mors(); ++m)
    if (sigma.contains(sub.mor_of[m])) sigmaD.member[m] = 1;

  SubcatComparison out;
  out.sub_localization = build_fraction_category(sub.cat, sigmaD);

  // comparison functor: a class of fractions in D maps to the ambient class
  // of the same roof
  FinFunctor& J = out.comparison;
  J.src = std::make_shared<const FinCategory>(out.sub_localization.category);
  J.dst = std::make_shared<const FinCategory>(amb.category);
  J.omap = sub.object_of;
  J.mmap.resize(out.sub_localization.category.num_mors());
  auto ambient_class = [&](const LeftFraction& f) {
    for (int k = 0; k < int(amb.classes.size()); ++k)
      if (std::find(amb.classes[k].members.begin(), amb.classes[k].members.end(), f) !=
          amb.classes[k].members.end())
        return k;
    fail(ErrorKind::InvalidInput, "ambient class lookup failed");
  };
  for (int m = 0; m < out.sub_localization.category.num_mors(); ++m) {
    auto rep = out.sub_localization.classes[m].representative;
    J.mmap[m] = ambient_class({sub.mor_of[rep.numerator], sub.mor_of[rep.denominator]});
  }
  require(!J.check().has_value(), ErrorKind::InvalidInput, "comparison is not a functor");

  out.fully_faithful = true;
  for (int x = 0; x < sub.cat.num_objects() && out.fully_faithful; ++x)
    for (int y = 0; y < sub.cat.num_objects(); ++y) {
      const auto& dom = out.sub_localization.category.hom[x][y];
      const auto& cod = amb.category.hom[sub.object_of[x]][sub.object_of[y]];
      std::vector<char> hit(amb.category.num_mors(), 0);
      bool inj = true;
      for (int m : dom) {
        if (hit[J.mmap[m]]) inj = false;
        hit[J.mmap[m]] = 1;
      }
      bool surj = true;
      for (int m : cod)
        if (!hit[m]) surj = false;
      if (!inj || !surj) {
        out.fully_faithful = false;
        break;
      }
    }

  // hypothesis: every σ: Y -> Y' in Σ with Y in D extends via τ with τ∘σ in Σ∩D
  std::vector<char> inD(c.num_objects(), 0);
  for (int o : objectsD) inD[o] = 1;
  out.hypothesis_holds = true;
  for (int s = 0; s < c.num_mors() && out.hypothesis_holds; ++s) {
    if (!sigma.contains(s) || !inD[c.mors[s].src]) continue;
    bool ok = false;
    for (int t = 0; t < c.num_mors() && !ok; ++t) {
      if (c.mors[t].src != c.mors[s].dst || !inD[c.mors[t].dst]) continue;
      int ts = c.comp[t][s];
      if (sigma.contains(ts) && inD[c.mors[ts].src] && inD[c.mors[ts].dst]) ok = true;
    }
    if (!ok) {
      out.hypothesis_holds = false;
      out.hypothesis_witness = s;
    }
  }
  return out;
}

}  // namespace locus
