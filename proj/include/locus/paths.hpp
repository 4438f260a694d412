#pragma once

// Path-category oracle for C[Σ⁻¹]: the quotient of the bounded path category
// on the quiver with arrows Mor(C) ⊔ Σ⁻¹ by the congruence generated by
//   (1) composable C-morphisms compose,
//   (2) identity arrows are units,
//   (3) σ⁻¹σ and σσ⁻¹ are identities for σ in Σ.
// Truncation at a length cap makes this computable; the caller treats the
// output as C[Σ⁻¹] only after confirming stabilization.  The fraction
// construction is the exact method; this oracle exists for cross-validation.
//
// Paths containing identity arrows (or formal inverses of identities) are
// congruent to their identity-free reduction by (2) and (3), so only reduced
// paths are enumerated; class counts are unaffected.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locus/common.hpp"
#include "locus/fincat.hpp"

namespace locus {

struct PathOracleResult {
  FinCategory category;  // morphisms are path classes
  FinFunctor functor;    // Q_Σ : C -> category
  bool stabilized;       // class counts agree between max_len-1 and max_len
};

namespace detail {

struct PathQuiver {
  // arrow < n_fwd: the C-morphism itself; arrow >= n_fwd: formal inverse
  const FinCategory* c;
  int n_fwd;
  std::vector<int> inv_of;   // inverse-arrow index -> morphism id
  std::vector<int> arrow_src, arrow_dst;

  int src(int a) const { return arrow_src[a]; }
  int dst(int a) const { return arrow_dst[a]; }
  int num_arrows() const { return int(arrow_src.size()); }
};

inline PathQuiver make_quiver(const FinCategory& c, const MorphismSet& sigma) {
  PathQuiver q;
  q.c = &c;
  q.n_fwd = c.num_mors();
  for (int m = 0; m < c.num_mors(); ++m) {
    q.arrow_src.push_back(c.mors[m].src);
    q.arrow_dst.push_back(c.mors[m].dst);
  }
  for (int m = 0; m < c.num_mors(); ++m)
    if (sigma.contains(m) && !c.is_identity(m)) {
      q.inv_of.push_back(m);
      q.arrow_src.push_back(c.mors[m].dst);
      q.arrow_dst.push_back(c.mors[m].src);
    }
  return q;
}

struct PathForest {
  // node 0..n_obj-1: empty paths; other nodes: (parent, last arrow)
  std::vector<int> parent, arrow, node_src, node_dst, length;
  std::vector<std::vector<std::pair<int, int>>> children;  // (arrow, node)

  int num_nodes() const { return int(parent.size()); }
  int child(int node, int a) const {
    for (auto& [ar, ch] : children[node])
      if (ar == a) return ch;
    return -1;
  }
  std::vector<int> sequence(int node) const {
    std::vector<int> seq;
    while (parent[node] >= 0) {
      seq.push_back(arrow[node]);
      node = parent[node];
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  }
  /// Walks the arrow sequence from the empty path at src; -1 if absent.
  int locate(int src, const std::vector<int>& seq) const {
    int node = src;
    for (int a : seq) {
      node = child(node, a);
      if (node < 0) return -1;
    }
    return node;
  }
};

inline PathForest enumerate_paths(const PathQuiver& q, int max_len, std::size_t node_budget) {
  const FinCategory& c = *q.c;
  PathForest f;
  int n_obj = c.num_objects();
  std::vector<std::vector<int>> arrows_from(n_obj);
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (a < q.n_fwd && c.is_identity(a)) continue;  // identity-free reduction
    arrows_from[q.src(a)].push_back(a);
  }
  for (int x = 0; x < n_obj; ++x) {
    f.parent.push_back(-1);
    f.arrow.push_back(-1);
    f.node_src.push_back(x);
    f.node_dst.push_back(x);
    f.length.push_back(0);
    f.children.emplace_back();
  }
  for (std::size_t node = 0; node < f.parent.size(); ++node) {
    if (f.length[node] >= max_len) continue;
    for (int a : arrows_from[f.node_dst[node]]) {
      require(f.parent.size() < node_budget, ErrorKind::EnumerationBudget,
              "path enumeration exceeded the node budget");
      int nn = int(f.parent.size());
      f.parent.push_back(int(node));
      f.arrow.push_back(a);
      f.node_src.push_back(f.node_src[node]);
      f.node_dst.push_back(q.dst(a));
      f.length.push_back(f.length[node] + 1);
      f.children.emplace_back();
      f.children[node].push_back({a, nn});
    }
  }
  return f;
}

/// One-step shrinking rewrites of the arrow pair (a, b) meaning "a then b";
/// result is the replacement subsequence (possibly empty), or nullopt when
/// no rule applies.
inline std::optional<std::vector<int>> rewrite_pair(const PathQuiver& q, int a, int b) {
  const FinCategory& c = *q.c;
  if (a < q.n_fwd && b < q.n_fwd) {
    int m = c.comp[b][a];  // b ∘ a
    if (c.is_identity(m)) return std::vector<int>{};
    return std::vector<int>{m};
  }
  if (a < q.n_fwd && b >= q.n_fwd && q.inv_of[b - q.n_fwd] == a) return std::vector<int>{};
  if (a >= q.n_fwd && b < q.n_fwd && q.inv_of[a - q.n_fwd] == b) return std::vector<int>{};
  return std::nullopt;
}

/// Congruence classes of paths of length <= bound: union-find seeded by all
/// one-position rewrites.  Connected components of the rewrite graph inside
/// the bounded universe.
inline UnionFind path_classes(const PathQuiver& q, const PathForest& f, int bound) {
  UnionFind uf(f.num_nodes());
  for (int node = 0; node < f.num_nodes(); ++node) {
    if (f.length[node] < 2 || f.length[node] > bound) continue;
    auto seq = f.sequence(node);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      auto rep = rewrite_pair(q, seq[i], seq[i + 1]);
      if (!rep) continue;
      std::vector<int> out(seq.begin(), seq.begin() + i);
      out.insert(out.end(), rep->begin(), rep->end());
      out.insert(out.end(), seq.begin() + i + 2, seq.end());
      int other = f.locate(f.node_src[node], out);
      require(other >= 0, ErrorKind::InvalidInput, "shrunk path missing from forest");
      uf.unite(std::size_t(node), std::size_t(other));
    }
  }
  return uf;
}

inline std::vector<std::vector<int>> hom_class_counts(const FinCategory& c, const PathForest& f,
                                                      const UnionFind& uf, int bound) {
  int n = c.num_objects();
  std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
  std::vector<char> seen(f.num_nodes(), 0);
  for (int node = 0; node < f.num_nodes(); ++node) {
    if (f.length[node] > bound) continue;
    int root = int(uf.find(node));
    if (seen[root]) continue;
    seen[root] = 1;
    ++counts[f.node_src[node]][f.node_dst[node]];
  }
  return counts;
}

}  // namespace detail

inline PathOracleResult path_localization_oracle(const FinCategory& c, const MorphismSet& sigma_in,
                                                 int max_len,
                                                 std::size_t node_budget = 8'000'000) {
  require(max_len >= 1, ErrorKind::InvalidInput, "max_len must be >= 1");
  MorphismSet sigma = sigma_in.with_identities(c);
  auto quiver = detail::make_quiver(c, sigma);
  // The closure runs with two steps of slack so that chains passing through
  // paths one insertion longer than the cap still connect; reported classes
  // are restricted to paths of length <= max_len.
  int big = max_len + 2;
  auto forest = detail::enumerate_paths(quiver, big, node_budget);
  auto uf = detail::path_classes(quiver, forest, big);
  bool stabilized = detail::hom_class_counts(c, forest, uf, max_len) ==
                    detail::hom_class_counts(c, forest, uf, max_len - 1);

  // classes containing a path within the cap; representative = smallest node
  // id, i.e. the shortest member (ties broken by creation order)
  std::vector<int> class_of(forest.num_nodes(), -1);
  std::vector<int> rep_node;
  for (int node = 0; node < forest.num_nodes(); ++node) {
    if (forest.length[node] > max_len) continue;
    int root = int(uf.find(node));
    if (class_of[root] < 0) {
      class_of[root] = int(rep_node.size());
      rep_node.push_back(root);
    }
    class_of[node] = class_of[root];
  }

  PathOracleResult out;
  out.stabilized = stabilized;
  FinCategory& cat = out.category;
  cat.objects = c.objects;
  for (int k = 0; k < int(rep_node.size()); ++k) {
    int node = rep_node[k];
    std::string name = "<";
    auto seq = forest.sequence(node);
    if (seq.empty()) name += "id " + c.objects[forest.node_src[node]];
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) name += ";";
      int a = seq[i];
      name += a < quiver.n_fwd ? c.mors[a].name : c.mors[quiver.inv_of[a - quiver.n_fwd]].name + "~";
    }
    name += ">";
    cat.mors.push_back({name, forest.node_src[node], forest.node_dst[node]});
  }
  cat.identity.resize(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) cat.identity[x] = class_of[x];

  // composition: concatenate representatives, then reduce into the bounded
  // universe.  Memoized DFS over shrinking rewrites (the rewrite graph is
  // acyclic since every rule strictly shortens); failure means the oracle has
  // not stabilized at this cap.
  std::map<std::pair<int, std::vector<int>>, int> memo;
  std::function<int(int, const std::vector<int>&)> reduce =
      [&](int src, const std::vector<int>& seq) -> int {
    if (int(seq.size()) <= big) {
      int node = forest.locate(src, seq);
      if (node >= 0) return class_of[int(uf.find(node))];
    }
    auto key = std::make_pair(src, seq);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = -1;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      auto rep = detail::rewrite_pair(quiver, seq[i], seq[i + 1]);
      if (!rep) continue;
      std::vector<int> out_seq(seq.begin(), seq.begin() + i);
      out_seq.insert(out_seq.end(), rep->begin(), rep->end());
      out_seq.insert(out_seq.end(), seq.begin() + i + 2, seq.end());
      int r = reduce(src, out_seq);
      if (r >= 0) {
        memo[key] = r;
        return r;
      }
    }
    return -1;
  };

  int nm = int(rep_node.size());
  cat.comp.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f2 = 0; f2 < nm; ++f2) {
      if (cat.mors[f2].dst != cat.mors[g].src) continue;
      auto seq = forest.sequence(rep_node[f2]);
      auto tail = forest.sequence(rep_node[g]);
      seq.insert(seq.end(), tail.begin(), tail.end());
      int cls = reduce(cat.mors[f2].src, seq);
      require(cls >= 0, ErrorKind::NonStabilized,
              "composite path does not reduce below the length cap");
      cat.comp[g][f2] = cls;
    }
  cat.rebuild_hom();

  out.functor.src = std::make_shared<const FinCategory>(c);
  out.functor.dst = std::make_shared<const FinCategory>(cat);
  out.functor.omap.resize(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) out.functor.omap[x] = x;
  out.functor.mmap.resize(c.num_mors());
  for (int m = 0; m < c.num_mors(); ++m) {
    if (c.is_identity(m))
      out.functor.mmap[m] = class_of[c.mors[m].src];
    else
      out.functor.mmap[m] = class_of[forest.locate(c.mors[m].src, {m})];
  }
  return out;
}

}  // namespace locus
