#pragma once

// Localization of modules over finite commutative rings: S⁻¹A and S⁻¹M by
// pair enumeration, the (S⁻¹(−), restriction) adjunction, and the harness
// that verifies L = G∘F is a localization functor on the category of
// modules of bounded order.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/common.hpp"
#include "locus/fincat.hpp"
#include "locus/linalg.hpp"

namespace locus {

// ---------------------------------------------------------------------------
// rings

struct FinCommRing {
  int n = 0;
  std::vector<std::vector<int>> add;  // add[a][b]
  std::vector<std::vector<int>> mul;  // mul[a][b]
  int zero = 0;
  int one = 1;

  int neg(int a) const {
    for (int b = 0; b < n; ++b)
      if (add[a][b] == zero) return b;
    fail(ErrorKind::InvalidInput, "element without additive inverse");
  }
  bool is_unit(int a) const {
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == one) return true;
    return false;
  }
};

inline FinCommRing cyclic_ring(int n) {
  FinCommRing r;
  r.n = n;
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (a * b) % n;
    }
  r.zero = 0;
  r.one = n == 1 ? 0 : 1;
  return r;
}

struct RingViolation {
  std::string axiom;
  std::vector<int> witness;
};

inline std::vector<RingViolation> validate_comm_ring(const FinCommRing& r) {
  std::vector<RingViolation> out;
  auto push = [&](const std::string& ax, std::vector<int> w) { out.push_back({ax, std::move(w)}); };
  for (int a = 0; a < r.n; ++a) {
    if (r.add[a][r.zero] != a) push("additive unit", {a});
    if (r.mul[a][r.one] != a) push("multiplicative unit", {a});
    bool has_neg = false;
    for (int b = 0; b < r.n; ++b)
      if (r.add[a][b] == r.zero) has_neg = true;
    if (!has_neg) push("additive inverse", {a});
    for (int b = 0; b < r.n; ++b) {
      if (r.add[a][b] != r.add[b][a]) push("additive commutativity", {a, b});
      if (r.mul[a][b] != r.mul[b][a]) push("multiplicative commutativity", {a, b});
      for (int c = 0; c < r.n; ++c) {
        if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]]) push("additive associativity", {a, b, c});
        if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]])
          push("multiplicative associativity", {a, b, c});
        if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]])
          push("distributivity", {a, b, c});
      }
    }
  }
  return out;
}

struct MultSet {
  std::vector<char> member;  // indexed by ring element

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int a = 0; a < int(member.size()); ++a)
      if (member[a]) out.push_back(a);
    return out;
  }
  bool valid(const FinCommRing& r) const {
    if (!member[r.one]) return false;
    for (int a : elements())
      for (int b : elements())
        if (!member[r.mul[a][b]]) return false;
    return true;
  }
  /// Adds 1 and closes under products; notice reports whether anything changed.
  static MultSet closure(const FinCommRing& r, const std::vector<int>& gens, bool* augmented = nullptr) {
    MultSet s{std::vector<char>(r.n, 0)};
    if (augmented) *augmented = false;
    for (int g : gens) {
      require(g >= 0 && g < r.n, ErrorKind::InvalidInput, "ring element out of range");
      s.member[g] = 1;
    }
    if (!s.member[r.one]) {
      s.member[r.one] = 1;
      if (augmented && !gens.empty()) *augmented = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      auto els = s.elements();
      for (int a : els)
        for (int b : els)
          if (!s.member[r.mul[a][b]]) {
            s.member[r.mul[a][b]] = 1;
            changed = true;
            if (augmented) *augmented = true;
          }
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// ring localization

struct FractionRing {
  FinCommRing ring;                       // quotient ring on fraction classes
  std::vector<std::pair<int, int>> reps;  // class -> minimal pair (x, s)
  std::vector<int> canonical;             // a -> class of a/1
  std::vector<int> s_elements;            // S in increasing order
  std::map<std::pair<int, int>, int> class_of_pair;

  std::string fraction_name(int cls) const {
    return std::to_string(reps[cls].first) + "/" + std::to_string(reps[cls].second);
  }
};

namespace detail {

/// (x,s) ~ (x',s')  iff  t (x s' - x' s) = 0 for some t in S.
inline bool pair_equivalent(const FinCommRing& r, const std::vector<int>& s_els, int x, int s,
                            int xp, int sp) {
  int d = r.add[r.mul[x][sp]][r.neg(r.mul[xp][s])];
  for (int t : s_els)
    if (r.mul[t][d] == r.zero) return true;
  return false;
}

}  // namespace detail

inline FractionRing localize_ring(const FinCommRing& ring, const MultSet& s_in) {
  MultSet s = s_in;
  require(s.valid(ring), ErrorKind::InvalidInput, "S must contain 1 and be closed under products");
  auto s_els = s.elements();

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < ring.n; ++x)
    for (int se : s_els) pairs.push_back({x, se});
  UnionFind uf(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (!uf.same(i, j) && detail::pair_equivalent(ring, s_els, pairs[i].first, pairs[i].second,
                                                    pairs[j].first, pairs[j].second))
        uf.unite(i, j);

  FractionRing out;
  out.s_elements = s_els;
  std::vector<int> cls(pairs.size(), -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::size_t root = uf.find(i);
    if (cls[root] < 0) {
      cls[root] = int(out.reps.size());
      out.reps.push_back(pairs[root]);
    }
    cls[i] = cls[root];
    out.class_of_pair[pairs[i]] = cls[i];
  }
  int m = int(out.reps.size());
  auto class_of = [&](int x, int se) { return out.class_of_pair.at({x, se}); };

  out.ring.n = m;
  out.ring.add.assign(m, std::vector<int>(m));
  out.ring.mul.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x, se] = out.reps[i];
      auto [y, te] = out.reps[j];
      out.ring.add[i][j] = class_of(ring.add[ring.mul[x][te]][ring.mul[y][se]], ring.mul[se][te]);
      out.ring.mul[i][j] = class_of(ring.mul[x][y], ring.mul[se][te]);
    }
  out.ring.zero = class_of(ring.zero, ring.one);
  out.ring.one = class_of(ring.one, ring.one);

  // well-definedness of the operations on classes, by full enumeration
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto [x, se] = pairs[i];
      auto [y, te] = pairs[j];
      require(class_of(ring.add[ring.mul[x][te]][ring.mul[y][se]], ring.mul[se][te]) ==
                  out.ring.add[cls[i]][cls[j]],
              ErrorKind::InvalidInput, "fraction addition not well defined");
      require(class_of(ring.mul[x][y], ring.mul[se][te]) == out.ring.mul[cls[i]][cls[j]],
              ErrorKind::InvalidInput, "fraction multiplication not well defined");
    }

  out.canonical.resize(ring.n);
  for (int a = 0; a < ring.n; ++a) out.canonical[a] = class_of(a, ring.one);
  // the canonical map inverts every member of S
  for (int se : s_els)
    require(out.ring.is_unit(out.canonical[se]), ErrorKind::InvalidInput,
            "canonical map failed to invert a member of S");
  return out;
}

// ---------------------------------------------------------------------------
// modules

/// Module over a finite commutative ring, tabulated: carrier 0..m-1 with
/// addition table and action table act[a][x] = x·a.
struct FinModuleCR {
  int m = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> act;
  int zero = 0;

  int neg(int x) const {
    for (int y = 0; y < m; ++y)
      if (add[x][y] == zero) return y;
    fail(ErrorKind::InvalidInput, "module element without inverse");
  }
};

inline std::vector<RingViolation> validate_module(const FinCommRing& r, const FinModuleCR& mod) {
  std::vector<RingViolation> out;
  auto push = [&](const std::string& ax, std::vector<int> w) { out.push_back({ax, std::move(w)}); };
  for (int x = 0; x < mod.m; ++x) {
    if (mod.add[x][mod.zero] != x) push("module additive unit", {x});
    if (mod.act[r.one][x] != x) push("module unital action", {x});
    bool has_neg = false;
    for (int y = 0; y < mod.m; ++y)
      if (mod.add[x][y] == mod.zero) has_neg = true;
    if (!has_neg) push("module additive inverse", {x});
    for (int y = 0; y < mod.m; ++y) {
      if (mod.add[x][y] != mod.add[y][x]) push("module additive commutativity", {x, y});
      for (int z = 0; z < mod.m; ++z)
        if (mod.add[mod.add[x][y]][z] != mod.add[x][mod.add[y][z]])
          push("module additive associativity", {x, y, z});
    }
  }
  for (int a = 0; a < r.n; ++a)
    for (int x = 0; x < mod.m; ++x) {
      for (int b = 0; b < r.n; ++b) {
        if (mod.act[b][mod.act[a][x]] != mod.act[r.mul[a][b]][x]) push("action associativity", {a, b, x});
        if (mod.act[r.add[a][b]][x] != mod.add[mod.act[a][x]][mod.act[b][x]])
          push("action distributes over ring sum", {a, b, x});
      }
      for (int y = 0; y < mod.m; ++y)
        if (mod.act[a][mod.add[x][y]] != mod.add[mod.act[a][x]][mod.act[a][y]])
          push("action distributes over module sum", {a, x, y});
    }
  return out;
}

/// A as a module over itself.
inline FinModuleCR regular_module(const FinCommRing& r) {
  FinModuleCR mod;
  mod.m = r.n;
  mod.add = r.add;
  mod.act.assign(r.n, std::vector<int>(r.n));
  for (int a = 0; a < r.n; ++a)
    for (int x = 0; x < r.n; ++x) mod.act[a][x] = r.mul[x][a];
  mod.zero = r.zero;
  return mod;
}

struct FractionModule {
  FinModuleCR module;                     // module over S⁻¹A
  std::vector<std::pair<int, int>> reps;  // class -> minimal pair (x, s)
  std::vector<int> eta;                   // x -> class of x/1
  std::map<std::pair<int, int>, int> class_of_pair;
};

inline FractionModule localize_module(const FinCommRing& ring, const FinModuleCR& mod,
                                      const MultSet& s_in, const FractionRing& sring) {
  auto s_els = s_in.elements();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < mod.m; ++x)
    for (int se : s_els) pairs.push_back({x, se});
  auto equivalent = [&](int x, int s, int xp, int sp) {
    int d = mod.add[mod.act[sp][x]][mod.neg(mod.act[s][xp])];
    for (int t : s_els)
      if (mod.act[t][d] == mod.zero) return true;
    return false;
  };
  UnionFind uf(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (!uf.same(i, j) &&
          equivalent(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second))
        uf.unite(i, j);

  FractionModule out;
  std::vector<int> cls(pairs.size(), -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::size_t root = uf.find(i);
    if (cls[root] < 0) {
      cls[root] = int(out.reps.size());
      out.reps.push_back(pairs[root]);
    }
    cls[i] = cls[root];
    out.class_of_pair[pairs[i]] = cls[i];
  }
  auto class_of = [&](int x, int se) { return out.class_of_pair.at({x, se}); };
  int m = int(out.reps.size());
  out.module.m = m;
  out.module.zero = class_of(mod.zero, ring.one);
  out.module.add.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x, se] = out.reps[i];
      auto [y, te] = out.reps[j];
      out.module.add[i][j] =
          class_of(mod.add[mod.act[te][x]][mod.act[se][y]], ring.mul[se][te]);
    }
  // S⁻¹A-action: (x/s)·(a/t) = xa/st
  out.module.act.assign(sring.ring.n, std::vector<int>(m));
  for (int ai = 0; ai < sring.ring.n; ++ai) {
    auto [a, t] = sring.reps[ai];
    for (int i = 0; i < m; ++i) {
      auto [x, se] = out.reps[i];
      out.module.act[ai][i] = class_of(mod.act[a][x], ring.mul[se][t]);
    }
  }
  // well-definedness over all representatives
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (int ai = 0; ai < sring.ring.n; ++ai) {
      auto [a, t] = sring.reps[ai];
      auto [x, se] = pairs[i];
      require(class_of(mod.act[a][x], ring.mul[se][t]) == out.module.act[ai][cls[i]],
              ErrorKind::InvalidInput, "fraction action not well defined");
    }
  }
  out.eta.resize(mod.m);
  for (int x = 0; x < mod.m; ++x) out.eta[x] = class_of(x, ring.one);
  return out;
}

/// Restriction of scalars along the canonical map A -> S⁻¹A.
inline FinModuleCR restrict_module(const FinCommRing& ring, const FractionRing& sring,
                                   const FinModuleCR& nmod) {
  FinModuleCR out;
  out.m = nmod.m;
  out.add = nmod.add;
  out.zero = nmod.zero;
  out.act.assign(ring.n, std::vector<int>(nmod.m));
  for (int a = 0; a < ring.n; ++a) out.act[a] = nmod.act[sring.canonical[a]];
  return out;
}

// ---------------------------------------------------------------------------
// module enumeration up to isomorphism

struct FinModuleCR;
inline std::vector<std::vector<int>> module_homs(const FinCommRing& ring, const FinModuleCR& m,
                                                 const FinModuleCR& n);
inline bool modules_isomorphic(const FinCommRing& ring, const FinModuleCR& a, const FinModuleCR& b);

namespace detail {

/// All abelian groups of order <= cap as cyclic decompositions.
inline std::vector<std::vector<int>> abelian_group_types(int cap) {
  std::vector<std::vector<int>> out{{}};  // trivial group
  // build multisets of prime powers with product <= cap
  std::function<void(int, int, std::vector<int>&)> rec = [&](int min_pp, int left,
                                                             std::vector<int>& cur) {
    for (int pp = min_pp; pp <= left; ++pp) {
      bool prime_power = false;
      for (int q = 2; q <= pp; ++q)
        if (is_prime(q)) {
          int v = q;
          while (v < pp) v *= q;
          if (v == pp) prime_power = true;
        }
      if (!prime_power) continue;
      cur.push_back(pp);
      out.push_back(cur);
      rec(pp, left / pp, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(2, cap, cur);
  return out;
}

struct AbelianGroup {
  std::vector<int> type;  // cyclic factor orders
  int order = 1;
  int add(int a, int b) const {
    int out = 0, mult = 1;
    for (int d : type) {
      out += mult * ((a % d + b % d) % d);
      mult *= d;
      a /= d;
      b /= d;
    }
    return out;
  }
  std::vector<int> generators() const {
    std::vector<int> gens;
    int mult = 1;
    for (int d : type) {
      gens.push_back(mult);
      mult *= d;
    }
    return gens;
  }
  int factor_order(std::size_t i) const { return type[i]; }
};

inline AbelianGroup make_group(std::vector<int> type) {
  AbelianGroup g;
  g.type = std::move(type);
  g.order = 1;
  for (int d : g.type) g.order *= d;
  return g;
}

/// All additive endomorphisms of the group, as value tables.
inline std::vector<std::vector<int>> additive_endos(const AbelianGroup& g) {
  std::vector<std::vector<int>> out;
  auto gens = g.generators();
  int k = int(gens.size());
  if (k == 0) return {std::vector<int>{0}};
  // choose an image for each generator, respecting its order
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i) {
    int d = g.factor_order(i);
    for (int v = 0; v < g.order; ++v) {
      // d * v == 0 ?
      int acc = 0;
      for (int c = 0; c < d; ++c) acc = g.add(acc, v);
      if (acc == 0) candidates[i].push_back(v);
    }
  }
  std::vector<int> pick(k, 0);
  while (true) {
    // extend additively: value of element with digits (a_i) is sum a_i * img_i
    std::vector<int> table(g.order);
    for (int x = 0; x < g.order; ++x) {
      int rem = x, val = 0;
      for (int i = 0; i < k; ++i) {
        int digit = rem % g.factor_order(i);
        rem /= g.factor_order(i);
        for (int c = 0; c < digit; ++c) val = g.add(val, candidates[i][pick[i]]);
      }
      table[x] = val;
    }
    out.push_back(std::move(table));
    int i = 0;
    while (i < k) {
      if (++pick[i] < int(candidates[i].size())) break;
      pick[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

/// Ring generators: smallest set S with {0,1} ∪ S generating A under + and ×.
inline std::vector<int> ring_generators(const FinCommRing& r) {
  auto closure = [&](const std::vector<int>& gens) {
    std::vector<char> in(r.n, 0);
    in[r.zero] = in[r.one] = 1;
    for (int gEl : gens) in[gEl] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b) {
          if (!in[a] || !in[b]) continue;
          if (!in[r.add[a][b]]) {
            in[r.add[a][b]] = 1;
            changed = true;
          }
          if (!in[r.mul[a][b]]) {
            in[r.mul[a][b]] = 1;
            changed = true;
          }
        }
    }
    return in;
  };
  std::vector<int> gens;
  while (true) {
    auto in = closure(gens);
    int missing = -1;
    for (int a = 0; a < r.n; ++a)
      if (!in[a]) {
        missing = a;
        break;
      }
    if (missing < 0) return gens;
    gens.push_back(missing);
  }
}

}  // namespace detail

/// All A-module structures of order <= cap, up to isomorphism.  Enumerates
/// unital ring homomorphisms A -> End(G) over every abelian group G with
/// |G| <= cap, then deduplicates by brute-force isomorphism search.
inline std::vector<FinModuleCR> enumerate_modules(const FinCommRing& ring, int cap) {
  std::vector<FinModuleCR> out;
  auto gens = detail::ring_generators(ring);
  for (auto& type : detail::abelian_group_types(cap)) {
    auto g = detail::make_group(type);
    if (g.order > cap) continue;
    auto endos = detail::additive_endos(g);
    // identity endo index
    std::vector<int> id_table(g.order);
    for (int i = 0; i < g.order; ++i) id_table[i] = i;

    int k = int(gens.size());
    std::vector<int> pick(k, 0);
    while (true) {
      // propagate: phi(0)=0, phi(1)=id, phi(gens[i]) = endos[pick[i]]
      std::vector<std::vector<int>> value(ring.n);
      std::vector<char> known(ring.n, 0);
      std::vector<int> zero_table(g.order, 0);
      value[ring.zero] = zero_table;
      known[ring.zero] = 1;
      value[ring.one] = id_table;
      known[ring.one] = 1;
      bool consistent = true;
      for (int i = 0; i < k && consistent; ++i) {
        if (known[gens[i]] && value[gens[i]] != endos[pick[i]]) consistent = false;
        value[gens[i]] = endos[pick[i]];
        known[gens[i]] = 1;
      }
      bool changed = consistent;
      while (changed && consistent) {
        changed = false;
        for (int a = 0; a < ring.n && consistent; ++a)
          for (int b = 0; b < ring.n && consistent; ++b) {
            if (!known[a] || !known[b]) continue;
            // sum
            std::vector<int> sumv(g.order), prodv(g.order);
            for (int x = 0; x < g.order; ++x) {
              sumv[x] = g.add(value[a][x], value[b][x]);
              prodv[x] = value[a][value[b][x]];
            }
            int s = ring.add[a][b], pr = ring.mul[a][b];
            if (!known[s]) {
              value[s] = sumv;
              known[s] = 1;
              changed = true;
            } else if (value[s] != sumv)
              consistent = false;
            if (!known[pr]) {
              value[pr] = prodv;
              known[pr] = 1;
              changed = true;
            } else if (value[pr] != prodv)
              consistent = false;
          }
      }
      if (consistent)
        for (int a = 0; a < ring.n; ++a)
          if (!known[a]) consistent = false;  // generators failed to generate
      if (consistent) {
        FinModuleCR mod;
        mod.m = g.order == 0 ? 1 : g.order;
        mod.zero = 0;
        mod.add.assign(g.order, std::vector<int>(g.order));
        for (int x = 0; x < g.order; ++x)
          for (int y = 0; y < g.order; ++y) mod.add[x][y] = g.add(x, y);
        mod.act.resize(ring.n);
        for (int a = 0; a < ring.n; ++a) mod.act[a] = value[a];
        if (validate_module(ring, mod).empty()) {
          bool dup = false;
          for (const auto& prev : out)
            if (modules_isomorphic(ring, prev, mod)) {
              dup = true;
              break;
            }
          if (!dup) out.push_back(std::move(mod));
        }
      }
      int i = 0;
      while (i < k) {
        if (++pick[i] < int(endos.size())) break;
        pick[i] = 0;
        ++i;
      }
      if (i == k || k == 0) break;
    }
  }
  return out;
}

/// All A-linear maps M -> N as value tables, in lexicographic order.
inline std::vector<std::vector<int>> module_homs(const FinCommRing& ring, const FinModuleCR& m,
                                                 const FinModuleCR& n);

inline bool modules_isomorphic(const FinCommRing& ring, const FinModuleCR& a,
                               const FinModuleCR& b) {
  if (a.m != b.m) return false;
  for (auto& h : module_homs(ring, a, b)) {
    std::vector<char> hit(b.m, 0);
    bool bij = true;
    for (int x = 0; x < a.m; ++x) {
      if (hit[h[x]]) {
        bij = false;
        break;
      }
      hit[h[x]] = 1;
    }
    if (bij) return true;
  }
  return false;
}

inline std::vector<std::vector<int>> module_homs(const FinCommRing& ring, const FinModuleCR& m,
                                                 const FinModuleCR& n) {
  // additive generators of m: greedy digits over the addition table
  // (m was built from a cyclic decomposition, so generators by scanning work:
  // repeatedly pick the smallest element not in the generated subgroup)
  std::vector<int> gens;
  std::vector<char> span(m.m, 0);
  span[m.zero] = 1;
  auto close = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < m.m; ++x)
        for (int y = 0; y < m.m; ++y)
          if (span[x] && span[y] && !span[m.add[x][y]]) {
            span[m.add[x][y]] = 1;
            changed = true;
          }
    }
  };
  close();
  for (int x = 0; x < m.m; ++x)
    if (!span[x]) {
      gens.push_back(x);
      span[x] = 1;
      close();
    }
  int k = int(gens.size());
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k, 0);
  while (true) {
    // attempt to extend the map additively from generator images
    std::vector<int> table(m.m, -1);
    table[m.zero] = n.zero;
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      if (table[gens[i]] >= 0 && table[gens[i]] != pick[i]) ok = false;
      table[gens[i]] = pick[i];
    }
    while (ok) {
      bool changed = false;
      for (int x = 0; x < m.m && ok; ++x)
        for (int y = 0; y <= x && ok; ++y) {
          if (table[x] < 0 || table[y] < 0) continue;
          int sx = m.add[x][y];
          int sv = n.add[table[x]][table[y]];
          if (table[sx] < 0) {
            table[sx] = sv;
            changed = true;
          } else if (table[sx] != sv)
            ok = false;
        }
      if (!changed) break;
    }
    if (ok)
      for (int x = 0; x < m.m; ++x)
        if (table[x] < 0) ok = false;
    if (ok) {
      // A-linearity
      for (int a = 0; a < ring.n && ok; ++a)
        for (int x = 0; x < m.m && ok; ++x)
          if (table[m.act[a][x]] != n.act[a][table[x]]) ok = false;
    }
    if (ok) out.push_back(table);
    int i = 0;
    while (i < k) {
      if (++pick[i] < n.m) break;
      pick[i] = 0;
      ++i;
    }
    if (i == k || k == 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// the module category and the localization adjunction harness

struct ModuleCategory {
  FinCommRing ring;
  std::vector<FinModuleCR> objects;  // iso-class representatives
  std::shared_ptr<const FinCategory> cat;
  std::vector<std::vector<int>> mor_table;  // morphism id -> value table
  std::vector<std::vector<std::map<std::vector<int>, int>>> mor_index;  // [src][dst] table -> id

  int find_object(const FinCommRing&, const FinModuleCR& mod) const {
    for (int i = 0; i < int(objects.size()); ++i)
      if (modules_isomorphic(ring, objects[i], mod)) return i;
    fail(ErrorKind::CapTooSmall, "module has no representative within the order cap");
  }
};

inline ModuleCategory build_module_category(const FinCommRing& ring, int cap) {
  ModuleCategory mc;
  mc.ring = ring;
  mc.objects = enumerate_modules(ring, cap);
  FinCategory c;
  int n = int(mc.objects.size());
  mc.mor_index.assign(n, std::vector<std::map<std::vector<int>, int>>(n));
  for (int i = 0; i < n; ++i) c.objects.push_back("M" + std::to_string(i));
  c.identity.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& h : module_homs(ring, mc.objects[i], mc.objects[j])) {
        int id = int(c.mors.size());
        c.mors.push_back({"f" + std::to_string(id), i, j});
        mc.mor_table.push_back(h);
        mc.mor_index[i][j][h] = id;
        bool is_id = i == j;
        if (is_id)
          for (int x = 0; x < mc.objects[i].m; ++x)
            if (h[x] != x) is_id = false;
        if (is_id) c.identity[i] = id;
      }
  int nm = int(c.mors.size());
  c.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (c.mors[f].dst != c.mors[g].src) continue;
      std::vector<int> table(mc.mor_table[f].size());
      for (std::size_t x = 0; x < table.size(); ++x) table[x] = mc.mor_table[g][mc.mor_table[f][x]];
      c.comp[g][f] = mc.mor_index[c.mors[f].src][c.mors[g].dst].at(table);
    }
  c.rebuild_hom();
  mc.cat = std::make_shared<const FinCategory>(std::move(c));
  return mc;
}

struct AdjunctionReport {
  bool adjunction_bijections_ok = false;  // the two maps are mutually inverse
  bool restriction_fully_faithful = false;
  bool theta_invertible_everywhere = false;
  bool L_is_localization = false;
  bool locals_match_invertible_action = false;
  int modules_over_A = 0;
  int modules_over_SA = 0;
  std::vector<int> local_objects_ids;
  bool pass() const {
    return adjunction_bijections_ok && restriction_fully_faithful &&
           theta_invertible_everywhere && L_is_localization && locals_match_invertible_action;
  }
};

/// Checks, on the category of A-modules of order <= cap:  F = S⁻¹(−) and
/// G = restriction form an adjoint pair with invertible counit, G is fully
/// faithful, L = G∘F is a localization functor, and the L-local modules are
/// exactly those with every s in S acting bijectively.
inline AdjunctionReport verify_localization_adjunction(const FinCommRing& ring, const MultSet& s,
                                                       int cap) {
  AdjunctionReport rep;
  auto sring = localize_ring(ring, s);
  auto modA = build_module_category(ring, cap);
  auto modSA = build_module_category(sring.ring, cap);
  rep.modules_over_A = int(modA.objects.size());
  rep.modules_over_SA = int(modSA.objects.size());

  int nA = int(modA.objects.size());
  int nSA = int(modSA.objects.size());

  // F on objects, with the identification isos S⁻¹M ≅ representative
  std::vector<int> F_obj(nA);
  std::vector<FractionModule> F_raw(nA);
  std::vector<std::vector<int>> F_iso(nA);      // iso S⁻¹M -> representative
  std::vector<std::vector<int>> F_iso_inv(nA);  // representative -> S⁻¹M
  for (int i = 0; i < nA; ++i) {
    F_raw[i] = localize_module(ring, modA.objects[i], s, sring);
    F_obj[i] = modSA.find_object(sring.ring, F_raw[i].module);
    const auto& target = modSA.objects[F_obj[i]];
    // iso search among SA-linear maps
    bool found = false;
    for (auto& h : module_homs(sring.ring, F_raw[i].module, target)) {
      std::vector<char> hit(target.m, 0);
      bool bij = true;
      for (int x = 0; x < F_raw[i].module.m; ++x) {
        if (hit[h[x]]) {
          bij = false;
          break;
        }
        hit[h[x]] = 1;
      }
      if (bij && target.m == F_raw[i].module.m) {
        F_iso[i] = h;
        F_iso_inv[i].assign(target.m, -1);
        for (int x = 0; x < F_raw[i].module.m; ++x) F_iso_inv[i][h[x]] = x;
        found = true;
        break;
      }
    }
    require(found, ErrorKind::InvalidInput, "no identification iso for a localized module");
  }

  // G on objects
  std::vector<int> G_obj(nSA);
  std::vector<std::vector<int>> G_iso(nSA), G_iso_inv(nSA);  // G N -> representative
  for (int j = 0; j < nSA; ++j) {
    auto restricted = restrict_module(ring, sring, modSA.objects[j]);
    G_obj[j] = modA.find_object(ring, restricted);
    const auto& target = modA.objects[G_obj[j]];
    bool found = false;
    for (auto& h : module_homs(ring, restricted, target)) {
      std::vector<char> hit(target.m, 0);
      bool bij = true;
      for (int x = 0; x < restricted.m; ++x) {
        if (hit[h[x]]) {
          bij = false;
          break;
        }
        hit[h[x]] = 1;
      }
      if (bij && target.m == restricted.m) {
        G_iso[j] = h;
        G_iso_inv[j].assign(target.m, -1);
        for (int x = 0; x < restricted.m; ++x) G_iso_inv[j][h[x]] = x;
        found = true;
        break;
      }
    }
    require(found, ErrorKind::InvalidInput, "no identification iso for a restricted module");
  }

  const FinCategory& A = *modA.cat;
  const FinCategory& SA = *modSA.cat;

  // F on morphisms: S⁻¹f conjugated by the identifications
  FinFunctor F;
  F.src = modA.cat;
  F.dst = modSA.cat;
  F.omap = F_obj;
  F.mmap.resize(A.num_mors());
  for (int m = 0; m < A.num_mors(); ++m) {
    int i = A.mors[m].src, j = A.mors[m].dst;
    const auto& f = modA.mor_table[m];
    // induced map on fraction classes: x/s ↦ f(x)/s
    std::vector<int> table(modSA.objects[F_obj[i]].m);
    for (int xc = 0; xc < int(F_raw[i].reps.size()); ++xc) {
      auto [x, se] = F_raw[i].reps[xc];
      int img = F_raw[j].class_of_pair.at({f[x], se});
      table[F_iso[i][xc]] = F_iso[j][img];
    }
    F.mmap[m] = modSA.mor_index[F_obj[i]][F_obj[j]].at(table);
  }
  require(!F.check().has_value(), ErrorKind::InvalidInput, "localization functor map is not a functor");

  // G on morphisms
  FinFunctor G;
  G.src = modSA.cat;
  G.dst = modA.cat;
  G.omap = G_obj;
  G.mmap.resize(SA.num_mors());
  for (int m = 0; m < SA.num_mors(); ++m) {
    int i = SA.mors[m].src, j = SA.mors[m].dst;
    const auto& f = modSA.mor_table[m];
    std::vector<int> table(modA.objects[G_obj[i]].m);
    for (int x = 0; x < modSA.objects[i].m; ++x) table[G_iso[i][x]] = G_iso[j][f[x]];
    G.mmap[m] = modA.mor_index[G_obj[i]][G_obj[j]].at(table);
  }
  require(!G.check().has_value(), ErrorKind::InvalidInput, "restriction map is not a functor");

  // unit η_M : M -> G F M and counit θ_N : F G N -> N as concrete tables
  std::vector<int> eta_mor(nA);
  for (int i = 0; i < nA; ++i) {
    std::vector<int> t(modA.objects[i].m);
    for (int x = 0; x < modA.objects[i].m; ++x) t[x] = G_iso[F_obj[i]][F_iso[i][F_raw[i].eta[x]]];
    eta_mor[i] = modA.mor_index[i][G_obj[F_obj[i]]].at(t);
  }
  std::vector<int> theta_mor(nSA);
  for (int j = 0; j < nSA; ++j) {
    // θ_N : S⁻¹(GN) -> N,  x/s ↦ x · (1/s)
    int fgj = F_obj[G_obj[j]];
    const auto& frac = F_raw[G_obj[j]];
    const auto& N = modSA.objects[j];
    std::vector<int> t(N.m);
    for (int cls = 0; cls < int(frac.reps.size()); ++cls) {
      auto [xr, se] = frac.reps[cls];
      // x as element of N (undo the G identification), then act by 1/s
      int x_in_N = G_iso_inv[j][xr];
      int inv_s = -1;
      int s_cls = sring.canonical[se];
      for (int cand = 0; cand < sring.ring.n; ++cand)
        if (sring.ring.mul[s_cls][cand] == sring.ring.one) {
          inv_s = cand;
          break;
        }
      require(inv_s >= 0, ErrorKind::InvalidInput, "S member not invertible in S⁻¹A");
      t[F_iso[G_obj[j]][cls]] = N.act[inv_s][x_in_N];
    }
    theta_mor[j] = modSA.mor_index[fgj][j].at(t);
  }

  // adjunction: Hom_A(M, GN) ≅ Hom_SA(FM, N) via α ↦ θ_N ∘ F α and back
  rep.adjunction_bijections_ok = true;
  for (int i = 0; i < nA && rep.adjunction_bijections_ok; ++i)
    for (int j = 0; j < nSA; ++j) {
      const auto& lhs = A.hom[i][G_obj[j]];
      const auto& rhs = SA.hom[F_obj[i]][j];
      if (lhs.size() != rhs.size()) {
        rep.adjunction_bijections_ok = false;
        break;
      }
      bool ok = true;
      for (int al : lhs) {
        int forward = SA.comp[theta_mor[j]][F.mmap[al]];
        int back = A.comp[G.mmap[forward]][eta_mor[i]];
        if (back != al) ok = false;
      }
      for (int be : rhs) {
        int back = A.comp[G.mmap[be]][eta_mor[i]];
        int forward = SA.comp[theta_mor[j]][F.mmap[back]];
        if (forward != be) ok = false;
      }
      if (!ok) {
        rep.adjunction_bijections_ok = false;
        break;
      }
    }

  // θ invertible everywhere
  rep.theta_invertible_everywhere = true;
  for (int j = 0; j < nSA; ++j)
    if (!SA.is_iso(theta_mor[j])) rep.theta_invertible_everywhere = false;

  // G fully faithful (the epimorphism criterion for A -> S⁻¹A)
  rep.restriction_fully_faithful = true;
  for (int i = 0; i < nSA && rep.restriction_fully_faithful; ++i)
    for (int j = 0; j < nSA; ++j) {
      const auto& dom = SA.hom[i][j];
      const auto& cod = A.hom[G_obj[i]][G_obj[j]];
      if (dom.size() != cod.size()) {
        rep.restriction_fully_faithful = false;
        break;
      }
      std::vector<char> hit(A.num_mors(), 0);
      for (int m : dom) {
        if (hit[G.mmap[m]]) rep.restriction_fully_faithful = false;
        hit[G.mmap[m]] = 1;
      }
      for (int m : cod)
        if (!hit[m]) rep.restriction_fully_faithful = false;
    }

  // L = G∘F with unit η satisfies the localization-functor conditions
  FinFunctor L = G.after(F);
  NatTransformation eta;
  eta.source = FinFunctor::identity(modA.cat);
  eta.target = L;
  eta.component = eta_mor;
  require(!eta.check().has_value(), ErrorKind::InvalidInput, "unit is not natural");
  rep.L_is_localization = is_localization_functor(L, eta).ok;

  // local objects = modules with every s in S acting bijectively,
  // matched against condition (3): η_M invertible
  rep.locals_match_invertible_action = true;
  for (int i = 0; i < nA; ++i) {
    bool s_acts_bijectively = true;
    for (int se : s.elements()) {
      std::vector<char> hit(modA.objects[i].m, 0);
      for (int x = 0; x < modA.objects[i].m; ++x) {
        int y = modA.objects[i].act[se][x];
        if (hit[y]) s_acts_bijectively = false;
        hit[y] = 1;
      }
    }
    bool eta_iso = A.is_iso(eta_mor[i]);
    if (s_acts_bijectively != eta_iso) rep.locals_match_invertible_action = false;
    if (eta_iso) rep.local_objects_ids.push_back(i);
  }
  return rep;
}

}  // namespace locus
