#pragma once

// Finite categories given by explicit composition tables, functors between
// them, and the brute-force searches (universal arrows, local objects,
// localization-functor checks) that everything else cross-validates against.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/common.hpp"

namespace locus {

struct FinCategory {
  struct Mor {
    std::string name;
    int src = 0;
    int dst = 0;
  };

  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> identity;              // object -> morphism id
  std::vector<std::vector<int>> comp;     // comp[g][f] = g∘f, -1 when not composable
  std::vector<std::vector<std::vector<int>>> hom;  // hom[x][y]: morphism ids in id order

  int num_objects() const { return int(objects.size()); }
  int num_mors() const { return int(mors.size()); }
  bool composable(int g, int f) const { return mors[f].dst == mors[g].src; }
  int compose(int g, int f) const {
    require(composable(g, f), ErrorKind::NotComposable,
            mors[g].name + " after " + mors[f].name);
    return comp[g][f];
  }
  const std::vector<int>& hom_set(int x, int y) const { return hom[x][y]; }
  bool is_identity(int m) const { return identity[mors[m].src] == m && mors[m].src == mors[m].dst; }

  void rebuild_hom() {
    hom.assign(objects.size(), std::vector<std::vector<int>>(objects.size()));
    for (int m = 0; m < num_mors(); ++m) hom[mors[m].src][mors[m].dst].push_back(m);
  }

  /// Two-sided inverse in the hom table, or -1.
  int find_inverse(int m) const {
    int x = mors[m].src, y = mors[m].dst;
    for (int g : hom[y][x])
      if (comp[g][m] == identity[x] && comp[m][g] == identity[y]) return g;
    return -1;
  }
  bool is_iso(int m) const { return find_inverse(m) >= 0; }

  FinCategory opposite() const {
    FinCategory op = *this;
    for (auto& m : op.mors) std::swap(m.src, m.dst);
    for (int g = 0; g < num_mors(); ++g)
      for (int f = 0; f < num_mors(); ++f) op.comp[g][f] = comp[f][g];
    op.rebuild_hom();
    return op;
  }
};

/// Builder used by fixtures and the file parser: composition given as
/// [g, f, g∘f] triples, everything else (identity composites) inferred.
struct CategoryBuilder {
  FinCategory cat;
  int add_object(const std::string& name) {
    cat.objects.push_back(name);
    cat.identity.push_back(-1);
    return int(cat.objects.size()) - 1;
  }
  int add_identity(int obj) {
    int id = add_mor("id_" + cat.objects[obj], obj, obj);
    cat.identity[obj] = id;
    return id;
  }
  int add_mor(const std::string& name, int src, int dst) {
    cat.mors.push_back({name, src, dst});
    return int(cat.mors.size()) - 1;
  }
  void set_comp(int g, int f, int gf) {
    if (cat.comp.empty())
      cat.comp.assign(cat.mors.size(), std::vector<int>(cat.mors.size(), -1));
    cat.comp[g][f] = gf;
  }
  FinCategory finish() {
    if (cat.comp.empty())
      cat.comp.assign(cat.mors.size(), std::vector<int>(cat.mors.size(), -1));
    for (auto& row : cat.comp) row.resize(cat.mors.size(), -1);
    cat.comp.resize(cat.mors.size(), std::vector<int>(cat.mors.size(), -1));
    // identity composites are forced; fill the ones the caller left out
    for (int m = 0; m < cat.num_mors(); ++m) {
      int ids = cat.identity[cat.mors[m].src];
      int idd = cat.identity[cat.mors[m].dst];
      if (ids >= 0 && cat.comp[m][ids] < 0) cat.comp[m][ids] = m;
      if (idd >= 0 && cat.comp[idd][m] < 0) cat.comp[idd][m] = m;
    }
    cat.rebuild_hom();
    return cat;
  }
};

/// Thin category of a preorder: at most one morphism x -> y.
/// rel must be reflexive and transitive.
inline FinCategory preorder_category(const std::vector<std::string>& names,
                                     const std::vector<std::vector<char>>& rel) {
  CategoryBuilder b;
  int n = int(names.size());
  for (int i = 0; i < n; ++i) b.add_object(names[i]);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) arrow[i][i] = b.add_identity(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rel[i][j]) arrow[i][j] = b.add_mor(names[i] + names[j], i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (arrow[i][j] >= 0 && arrow[j][k] >= 0) b.set_comp(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.finish();
}

struct MorphismSet {
  std::vector<char> member;  // indexed by morphism id

  static MorphismSet none(const FinCategory& c) { return {std::vector<char>(c.num_mors(), 0)}; }
  static MorphismSet of(const FinCategory& c, const std::vector<int>& ids) {
    MorphismSet s = none(c);
    for (int m : ids) {
      require(m >= 0 && m < c.num_mors(), ErrorKind::InvalidInput, "morphism id out of range");
      s.member[m] = 1;
    }
    return s;
  }
  static MorphismSet identities(const FinCategory& c) {
    MorphismSet s = none(c);
    for (int id : c.identity) s.member[id] = 1;
    return s;
  }
  bool contains(int m) const { return member[m]; }
  std::vector<int> ids() const {
    std::vector<int> out;
    for (int m = 0; m < int(member.size()); ++m)
      if (member[m]) out.push_back(m);
    return out;
  }
  /// LF1 demands identities; callers normalize through here.
  MorphismSet with_identities(const FinCategory& c, bool* augmented = nullptr) const {
    MorphismSet s = *this;
    bool added = false;
    for (int id : c.identity)
      if (!s.member[id]) {
        s.member[id] = 1;
        added = true;
      }
    if (augmented) *augmented = added;
    return s;
  }
};

// ---------------------------------------------------------------------------
// validate_category

struct CategoryViolation {
  enum class Kind { Typing, LeftUnit, RightUnit, Associativity, IdentityMissing } kind;
  std::vector<int> witness;  // morphism ids involved
  std::string describe(const FinCategory& c) const;
};

struct ValidationReport {
  std::vector<CategoryViolation> violations;
  bool valid() const { return violations.empty(); }
};

inline std::string CategoryViolation::describe(const FinCategory& c) const {
  auto n = [&](int m) { return c.mors[m].name; };
  switch (kind) {
    case Kind::Typing:
      return "composite (" + n(witness[0]) + "," + n(witness[1]) + ") has inconsistent typing";
    case Kind::LeftUnit:
      return "identity is not a left unit for " + n(witness[0]);
    case Kind::RightUnit:
      return "identity is not a right unit for " + n(witness[0]);
    case Kind::Associativity:
      return "associativity fails on (" + n(witness[0]) + "," + n(witness[1]) + "," + n(witness[2]) + ")";
    case Kind::IdentityMissing:
      return "object " + c.objects[witness[0]] + " has no identity";
  }
  return "";
}

inline ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  using K = CategoryViolation::Kind;
  for (int x = 0; x < c.num_objects(); ++x) {
    int id = c.identity[x];
    if (id < 0 || id >= c.num_mors() || c.mors[id].src != x || c.mors[id].dst != x)
      rep.violations.push_back({K::IdentityMissing, {x}});
  }
  if (!rep.valid()) return rep;
  for (int g = 0; g < c.num_mors(); ++g)
    for (int f = 0; f < c.num_mors(); ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.comp[g][f];
      if (gf < 0 || gf >= c.num_mors() || c.mors[gf].src != c.mors[f].src ||
          c.mors[gf].dst != c.mors[g].dst) {
        rep.violations.push_back({K::Typing, {g, f}});
        continue;
      }
    }
  if (!rep.valid()) return rep;
  for (int f = 0; f < c.num_mors(); ++f) {
    if (c.comp[f][c.identity[c.mors[f].src]] != f) rep.violations.push_back({K::RightUnit, {f}});
    if (c.comp[c.identity[c.mors[f].dst]][f] != f) rep.violations.push_back({K::LeftUnit, {f}});
  }
  for (int h = 0; h < c.num_mors(); ++h)
    for (int g = 0; g < c.num_mors(); ++g) {
      if (!c.composable(h, g)) continue;
      int hg = c.comp[h][g];
      for (int f = 0; f < c.num_mors(); ++f) {
        if (!c.composable(g, f)) continue;
        if (c.comp[h][c.comp[g][f]] != c.comp[hg][f])
          rep.violations.push_back({K::Associativity, {h, g, f}});
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// functors and natural transformations

struct FinFunctor {
  std::shared_ptr<const FinCategory> src;
  std::shared_ptr<const FinCategory> dst;
  std::vector<int> omap;  // object -> object
  std::vector<int> mmap;  // morphism -> morphism

  int on_obj(int x) const { return omap[x]; }
  int on_mor(int m) const { return mmap[m]; }

  static FinFunctor identity(std::shared_ptr<const FinCategory> c) {
    FinFunctor f;
    f.src = f.dst = c;
    f.omap.resize(c->num_objects());
    f.mmap.resize(c->num_mors());
    for (int i = 0; i < c->num_objects(); ++i) f.omap[i] = i;
    for (int i = 0; i < c->num_mors(); ++i) f.mmap[i] = i;
    return f;
  }
  FinFunctor after(const FinFunctor& g) const {  // this ∘ g
    FinFunctor r;
    r.src = g.src;
    r.dst = dst;
    r.omap.resize(g.omap.size());
    r.mmap.resize(g.mmap.size());
    for (std::size_t i = 0; i < g.omap.size(); ++i) r.omap[i] = omap[g.omap[i]];
    for (std::size_t i = 0; i < g.mmap.size(); ++i) r.mmap[i] = mmap[g.mmap[i]];
    return r;
  }
  /// Full-enumeration functoriality check; returns a violation witness pair.
  std::optional<std::pair<int, int>> check(std::string* why = nullptr) const {
    const auto& C = *src;
    const auto& D = *dst;
    for (int x = 0; x < C.num_objects(); ++x)
      if (mmap[C.identity[x]] != D.identity[omap[x]]) {
        if (why) *why = "identity of " + C.objects[x] + " not preserved";
        return std::make_pair(C.identity[x], C.identity[x]);
      }
    for (int m = 0; m < C.num_mors(); ++m)
      if (D.mors[mmap[m]].src != omap[C.mors[m].src] || D.mors[mmap[m]].dst != omap[C.mors[m].dst]) {
        if (why) *why = "typing of " + C.mors[m].name + " not preserved";
        return std::make_pair(m, m);
      }
    for (int g = 0; g < C.num_mors(); ++g)
      for (int f = 0; f < C.num_mors(); ++f) {
        if (!C.composable(g, f)) continue;
        if (D.comp[mmap[g]][mmap[f]] != mmap[C.comp[g][f]]) {
          if (why) *why = "composition (" + C.mors[g].name + "," + C.mors[f].name + ") not preserved";
          return std::make_pair(g, f);
        }
      }
    return std::nullopt;
  }
};

struct NatTransformation {
  FinFunctor source;  // F
  FinFunctor target;  // G, same src/dst categories
  std::vector<int> component;  // object -> morphism id in the target category

  /// Naturality on every morphism of the source category; witness on failure.
  std::optional<int> check() const {
    const auto& C = *source.src;
    const auto& D = *source.dst;
    for (int x = 0; x < C.num_objects(); ++x) {
      int cx = component[x];
      if (D.mors[cx].src != source.omap[x] || D.mors[cx].dst != target.omap[x]) return x;
    }
    for (int m = 0; m < C.num_mors(); ++m) {
      int x = C.mors[m].src, y = C.mors[m].dst;
      if (D.comp[component[y]][source.mmap[m]] != D.comp[target.mmap[m]][component[x]]) return m;
    }
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// local objects

/// X is local iff every σ: W -> W' in Σ induces a bijection C(W',X) -> C(W,X).
inline bool is_local_object(const FinCategory& c, const MorphismSet& sigma, int x) {
  for (int s = 0; s < c.num_mors(); ++s) {
    if (!sigma.contains(s)) continue;
    int w = c.mors[s].src, wp = c.mors[s].dst;
    const auto& from_wp = c.hom[wp][x];
    const auto& from_w = c.hom[w][x];
    if (from_wp.size() != from_w.size()) return false;
    std::vector<char> hit(c.num_mors(), 0);
    for (int h : from_wp) {
      int hs = c.comp[h][s];
      if (hit[hs]) return false;  // not injective
      hit[hs] = 1;
    }
    for (int g : from_w)
      if (!hit[g]) return false;  // not surjective
  }
  return true;
}

inline std::vector<int> local_objects(const FinCategory& c, const MorphismSet& sigma) {
  std::vector<int> out;
  for (int x = 0; x < c.num_objects(); ++x)
    if (is_local_object(c, sigma, x)) out.push_back(x);
  return out;
}

/// Morphisms σ with F(σ) invertible.
inline MorphismSet inverted_morphisms(const FinFunctor& f) {
  MorphismSet s = MorphismSet::none(*f.src);
  for (int m = 0; m < f.src->num_mors(); ++m)
    if (f.dst->is_iso(f.mmap[m])) s.member[m] = 1;
  return s;
}

// ---------------------------------------------------------------------------
// adjoint search

struct AdjointResult {
  FinFunctor left;         // F : C -> D, left adjoint of the given G : D -> C
  NatTransformation unit;  // η : Id_C -> G ∘ F
};

struct AdjointFailure {
  int object = -1;  // object of C with no universal arrow
};

/// Exhaustive universal-arrow search: for each X of C, scan pairs
/// (D-object, η_X : X -> G D) in id order and keep the first that factors
/// every morphism X -> G D' uniquely.
inline std::optional<AdjointResult> find_left_adjoint(const FinFunctor& G,
                                                      AdjointFailure* failure = nullptr) {
  const auto& D = *G.src;   // G : D -> C
  const auto& C = *G.dst;
  std::vector<int> fx(C.num_objects(), -1);
  std::vector<int> eta(C.num_objects(), -1);
  for (int x = 0; x < C.num_objects(); ++x) {
    for (int d = 0; d < D.num_objects() && fx[x] < 0; ++d) {
      for (int u : C.hom[x][G.omap[d]]) {
        // universal: for all d', g : X -> G d' there is a unique t : d -> d'
        // with G(t) ∘ u = g
        bool universal = true;
        for (int dp = 0; dp < D.num_objects() && universal; ++dp)
          for (int g : C.hom[x][G.omap[dp]]) {
            int count = 0;
            for (int t : D.hom[d][dp])
              if (C.comp[G.mmap[t]][u] == g) ++count;
            if (count != 1) {
              universal = false;
              break;
            }
          }
        if (universal) {
          fx[x] = d;
          eta[x] = u;
          break;
        }
      }
    }
    if (fx[x] < 0) {
      if (failure) failure->object = x;
      return std::nullopt;
    }
  }
  FinFunctor F;
  F.src = G.dst;
  F.dst = G.src;
  F.omap = fx;
  F.mmap.resize(C.num_mors(), -1);
  for (int m = 0; m < C.num_mors(); ++m) {
    int x = C.mors[m].src, y = C.mors[m].dst;
    int rhs = C.comp[eta[y]][m];  // η_Y ∘ m : X -> G F Y
    for (int t : D.hom[fx[x]][fx[y]])
      if (C.comp[G.mmap[t]][eta[x]] == rhs) {
        F.mmap[m] = t;
        break;
      }
    require(F.mmap[m] >= 0, ErrorKind::InvalidInput, "universal arrow lost a factorization");
  }
  require(!F.check().has_value(), ErrorKind::InvalidInput, "adjoint search produced a non-functor");
  NatTransformation unit;
  unit.source = FinFunctor::identity(G.dst);
  unit.target = G.after(F);
  unit.component = eta;
  require(!unit.check().has_value(), ErrorKind::InvalidInput, "adjoint unit is not natural");
  return AdjointResult{F, unit};
}

/// Hom-set bijection D(FX, Y) ≅ C(X, GY), t ↦ G(t) ∘ η_X, checked
/// exhaustively for every object pair.
inline bool adjunction_bijective(const FinFunctor& G, const AdjointResult& adj) {
  const auto& D = *G.src;
  const auto& C = *G.dst;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = 0; y < D.num_objects(); ++y) {
      const auto& lhs = D.hom[adj.left.omap[x]][y];
      const auto& rhs = C.hom[x][G.omap[y]];
      if (lhs.size() != rhs.size()) return false;
      std::vector<char> hit(C.num_mors(), 0);
      for (int t : lhs) {
        int img = C.comp[G.mmap[t]][adj.unit.component[x]];
        if (hit[img]) return false;
        hit[img] = 1;
      }
      for (int g : rhs)
        if (!hit[g]) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// localization functors

/// Searches for a unit Id -> L (all component choices, id order) that is
/// natural; reports the first object with an empty candidate hom-set when
/// the search space is empty.
inline std::optional<NatTransformation> find_unit(const FinFunctor& L, int* witness = nullptr) {
  const auto& C = *L.src;
  int n = C.num_objects();
  for (int x = 0; x < n; ++x)
    if (C.hom[x][L.omap[x]].empty()) {
      if (witness) *witness = x;
      return std::nullopt;
    }
  std::vector<int> choice(n, 0);
  while (true) {
    NatTransformation eta;
    eta.source = FinFunctor::identity(L.src);
    eta.target = L;
    eta.component.resize(n);
    for (int x = 0; x < n; ++x) eta.component[x] = C.hom[x][L.omap[x]][choice[x]];
    if (!eta.check().has_value()) return eta;
    int i = 0;
    while (i < n) {
      if (++choice[i] < int(C.hom[i][L.omap[i]].size())) break;
      choice[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  if (witness) *witness = -1;
  return std::nullopt;
}

struct LocalizationVerdict {
  bool ok = false;
  int witness = -1;  // offending object when !ok
};

/// Condition (1): Lη invertible componentwise and Lη = ηL, checked per object.
inline LocalizationVerdict is_localization_functor(const FinFunctor& L,
                                                   const NatTransformation& eta) {
  const auto& C = *L.src;
  require(L.src == L.dst || L.src.get() == L.dst.get(), ErrorKind::InvalidInput,
          "localization functor must be an endofunctor");
  require(!eta.check().has_value(), ErrorKind::InvalidInput, "unit is not natural");
  for (int x = 0; x < C.num_objects(); ++x) {
    int l_eta = L.mmap[eta.component[x]];   // (Lη)_X : LX -> LLX
    int eta_l = eta.component[L.omap[x]];   // (ηL)_X : LX -> LLX
    if (l_eta != eta_l || !C.is_iso(l_eta)) return {false, x};
  }
  return {true, -1};
}

/// The five equivalent characterizations of an L-local object; each is
/// evaluated independently so tests can assert the equivalence.
struct LocalObjectConditions {
  bool local_wrt_sigma;      // (1) local w.r.t. Σ(L)
  bool hom_eta_bijective;    // (2) C(LW,X) -> C(W,X) bijective for all W
  bool eta_invertible;       // (3) ηX invertible
  bool hom_L_bijective;      // (4) C(W,X) -> C(LW,LX) bijective for all W
  bool in_essential_image;   // (5) X ≅ LX' for some X'
  bool all_agree() const {
    return local_wrt_sigma == hom_eta_bijective && hom_eta_bijective == eta_invertible &&
           eta_invertible == hom_L_bijective && hom_L_bijective == in_essential_image;
  }
};

inline LocalObjectConditions local_object_conditions(const FinFunctor& L,
                                                     const NatTransformation& eta, int x) {
  const auto& C = *L.src;
  LocalObjectConditions r{};
  r.local_wrt_sigma = is_local_object(C, inverted_morphisms(L), x);

  auto bijective_precompose = [&](int s, int target) {
    // C(dst s, target) -> C(src s, target), h ↦ h∘s
    const auto& from_b = C.hom[C.mors[s].dst][target];
    const auto& from_a = C.hom[C.mors[s].src][target];
    if (from_b.size() != from_a.size()) return false;
    std::vector<char> hit(C.num_mors(), 0);
    for (int h : from_b) {
      int hs = C.comp[h][s];
      if (hit[hs]) return false;
      hit[hs] = 1;
    }
    for (int g : from_a)
      if (!hit[g]) return false;
    return true;
  };

  r.hom_eta_bijective = true;
  for (int w = 0; w < C.num_objects() && r.hom_eta_bijective; ++w)
    if (!bijective_precompose(eta.component[w], x)) r.hom_eta_bijective = false;

  r.eta_invertible = C.is_iso(eta.component[x]);

  r.hom_L_bijective = true;
  for (int w = 0; w < C.num_objects() && r.hom_L_bijective; ++w) {
    const auto& dom = C.hom[w][x];
    const auto& cod = C.hom[L.omap[w]][L.omap[x]];
    if (dom.size() != cod.size()) {
      r.hom_L_bijective = false;
      break;
    }
    std::vector<char> hit(C.num_mors(), 0);
    for (int f : dom) {
      int lf = L.mmap[f];
      if (hit[lf]) {
        r.hom_L_bijective = false;
        break;
      }
      hit[lf] = 1;
    }
    if (r.hom_L_bijective)
      for (int g : cod)
        if (!hit[g]) {
          r.hom_L_bijective = false;
          break;
        }
  }

  r.in_essential_image = false;
  for (int xp = 0; xp < C.num_objects() && !r.in_essential_image; ++xp) {
    int lx = L.omap[xp];
    for (int f : C.hom[lx][x])
      if (C.is_iso(f)) {
        r.in_essential_image = true;
        break;
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// full subcategories, equivalences, random fixtures

/// Full subcategory on a subset of objects, with the object/morphism
/// re-indexing maps.
struct FullSubcategory {
  FinCategory cat;
  std::vector<int> object_of;    // sub object -> ambient object
  std::vector<int> mor_of;       // sub morphism -> ambient morphism
  std::vector<int> sub_mor;      // ambient morphism -> sub morphism or -1
};

inline FullSubcategory full_subcategory(const FinCategory& c, const std::vector<int>& objs) {
  FullSubcategory s;
  std::vector<int> sub_obj(c.num_objects(), -1);
  for (int o : objs) {
    require(o >= 0 && o < c.num_objects(), ErrorKind::InvalidInput, "object id out of range");
    require(sub_obj[o] < 0, ErrorKind::InvalidInput, "duplicate object id");
    sub_obj[o] = int(s.object_of.size());
    s.object_of.push_back(o);
    s.cat.objects.push_back(c.objects[o]);
  }
  s.sub_mor.assign(c.num_mors(), -1);
  for (int m = 0; m < c.num_mors(); ++m)
    if (sub_obj[c.mors[m].src] >= 0 && sub_obj[c.mors[m].dst] >= 0) {
      s.sub_mor[m] = int(s.mor_of.size());
      s.mor_of.push_back(m);
      s.cat.mors.push_back({c.mors[m].name, sub_obj[c.mors[m].src], sub_obj[c.mors[m].dst]});
    }
  s.cat.identity.resize(objs.size());
  for (int i = 0; i < int(objs.size()); ++i) s.cat.identity[i] = s.sub_mor[c.identity[objs[i]]];
  int nm = int(s.mor_of.size());
  s.cat.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (s.cat.mors[f].dst == s.cat.mors[g].src)
        s.cat.comp[g][f] = s.sub_mor[c.comp[s.mor_of[g]][s.mor_of[f]]];
  s.cat.rebuild_hom();
  return s;
}

inline FinFunctor inclusion_functor(std::shared_ptr<const FinCategory> ambient,
                                    std::shared_ptr<const FinCategory> sub,
                                    const FullSubcategory& data) {
  FinFunctor f;
  f.src = sub;
  f.dst = ambient;
  f.omap = data.object_of;
  f.mmap = data.mor_of;
  return f;
}

/// Fully faithful + essentially surjective, all by enumeration.
inline bool is_equivalence(const FinFunctor& F) {
  const auto& C = *F.src;
  const auto& D = *F.dst;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = 0; y < C.num_objects(); ++y) {
      const auto& dom = C.hom[x][y];
      const auto& cod = D.hom[F.omap[x]][F.omap[y]];
      if (dom.size() != cod.size()) return false;
      std::vector<char> hit(D.num_mors(), 0);
      for (int m : dom) {
        if (hit[F.mmap[m]]) return false;
        hit[F.mmap[m]] = 1;
      }
      for (int m : cod)
        if (!hit[m]) return false;
    }
  for (int d = 0; d < D.num_objects(); ++d) {
    bool found = false;
    for (int x = 0; x < C.num_objects() && !found; ++x)
      for (int f : D.hom[F.omap[x]][d])
        if (D.is_iso(f)) {
          found = true;
          break;
        }
    if (!found) return false;
  }
  return true;
}

/// Seeded random preorder on up to max_objects objects, morphism count
/// capped; used as the randomized category supply for property checks.
inline FinCategory random_preorder_category(DetRng& rng, int max_objects, int max_morphisms) {
  while (true) {
    int n = 2 + int(rng.below(std::uint64_t(max_objects - 1)));  // 2..max_objects
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) rel[i][i] = 1;
    int extra = int(rng.below(std::uint64_t(n * 2)));
    for (int e = 0; e < extra; ++e) {
      int i = int(rng.below(n)), j = int(rng.below(n));
      rel[i][j] = 1;
    }
    // transitive closure
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
    int count = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) count += rel[i][j];
    if (count > max_morphisms) continue;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('A' + i)));
    return preorder_category(names, rel);
  }
}

/// Random localization functor on C obtained by searching for a reflective
/// full subcategory; falls back to the identity.  The subsets are visited in
/// a seeded random order so the fixtures vary.
inline std::pair<FinFunctor, NatTransformation> random_localization_functor(
    std::shared_ptr<const FinCategory> c, DetRng& rng) {
  int n = c->num_objects();
  std::vector<int> masks;
  for (int mask = 1; mask < (1 << n) - 1; ++mask) masks.push_back(mask);
  for (int i = int(masks.size()) - 1; i > 0; --i)
    std::swap(masks[i], masks[int(rng.below(std::uint64_t(i + 1)))]);
  for (int mask : masks) {
    std::vector<int> objs;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) objs.push_back(i);
    auto sub = full_subcategory(*c, objs);
    auto sub_cat = std::make_shared<const FinCategory>(sub.cat);
    FinFunctor inc = inclusion_functor(c, sub_cat, sub);
    auto adj = find_left_adjoint(inc);
    if (!adj) continue;
    FinFunctor L = inc.after(adj->left);
    NatTransformation eta = adj->unit;
    eta.target = L;
    if (is_localization_functor(L, eta).ok) return {L, eta};
  }
  FinFunctor id = FinFunctor::identity(c);
  NatTransformation eta;
  eta.source = id;
  eta.target = id;
  eta.component = c->identity;
  return {id, eta};
}

}  // namespace locus
