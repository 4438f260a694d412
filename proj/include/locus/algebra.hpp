#pragma once

// Finite-dimensional F_p-algebras given by structure constants, modules
// given by explicit action matrices, hom-space computation, sub/quotient
// constructions, idempotent calculus (eAe, AeA, A/AeA), and the tensor/hom
// functors between module categories that the recollement machinery uses.
//
// Convention: modules are right modules; elements are column vectors and
// the action of a is the matrix act(a) applied on the left, so
// act(ab) = act(b) * act(a).

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/common.hpp"
#include "locus/linalg.hpp"

namespace locus {

struct FinAlgebra {
  int p = 2;
  int dim = 0;
  std::vector<std::string> basis;  // labels
  std::vector<int> sc;             // sc[(i*dim+j)*dim+k]: e_i e_j = sum_k sc e_k
  std::vector<int> unit;           // coefficients of 1

  int sc_at(int i, int j, int k) const { return sc[std::size_t(i * dim + j) * dim + k]; }

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> out(dim, 0);
    for (int i = 0; i < dim; ++i) {
      if (!a[i]) continue;
      for (int j = 0; j < dim; ++j) {
        if (!b[j]) continue;
        std::int64_t c = std::int64_t(a[i]) * b[j] % p;
        for (int k = 0; k < dim; ++k)
          out[k] = int((out[k] + c * sc_at(i, j, k)) % p);
      }
    }
    return out;
  }
  /// Matrix of right multiplication x ↦ x·a on the regular module.
  Matrix right_mult(const std::vector<int>& a) const {
    Matrix m(dim, dim, p);
    for (int j = 0; j < dim; ++j) {
      std::vector<int> ej(dim, 0);
      ej[j] = 1;
      auto v = mul(ej, a);
      for (int i = 0; i < dim; ++i) m.at(i, j) = v[i];
    }
    return m;
  }
  Matrix left_mult(const std::vector<int>& a) const {
    Matrix m(dim, dim, p);
    for (int j = 0; j < dim; ++j) {
      std::vector<int> ej(dim, 0);
      ej[j] = 1;
      auto v = mul(a, ej);
      for (int i = 0; i < dim; ++i) m.at(i, j) = v[i];
    }
    return m;
  }
  std::vector<int> basis_vec(int i) const {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    return v;
  }
  bool commutative() const {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (mul(basis_vec(i), basis_vec(j)) != mul(basis_vec(j), basis_vec(i))) return false;
    return true;
  }
};

/// Associativity and unit laws on basis triples, by full enumeration.
inline std::vector<std::string> validate_algebra(const FinAlgebra& a) {
  std::vector<std::string> out;
  check_modulus(a.p);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      auto eij = a.mul(a.basis_vec(i), a.basis_vec(j));
      for (int k = 0; k < a.dim; ++k) {
        auto lhs = a.mul(eij, a.basis_vec(k));
        auto rhs = a.mul(a.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(k)));
        if (lhs != rhs)
          out.push_back("associativity fails on (" + a.basis[i] + "," + a.basis[j] + "," +
                        a.basis[k] + ")");
      }
    }
  for (int i = 0; i < a.dim; ++i) {
    if (a.mul(a.unit, a.basis_vec(i)) != a.basis_vec(i))
      out.push_back("unit fails on the left of " + a.basis[i]);
    if (a.mul(a.basis_vec(i), a.unit) != a.basis_vec(i))
      out.push_back("unit fails on the right of " + a.basis[i]);
  }
  return out;
}

inline FinAlgebra field_algebra(int p) {
  FinAlgebra a;
  a.p = p;
  a.dim = 1;
  a.basis = {"1"};
  a.sc = {1};
  a.unit = {1};
  return a;
}

/// F_p x F_p x ... (k factors), componentwise.
inline FinAlgebra product_field_algebra(int p, int k) {
  FinAlgebra a;
  a.p = p;
  a.dim = k;
  a.sc.assign(std::size_t(k) * k * k, 0);
  for (int i = 0; i < k; ++i) {
    a.basis.push_back("e" + std::to_string(i + 1));
    a.sc[std::size_t(i * k + i) * k + i] = 1;
  }
  a.unit.assign(k, 1);
  return a;
}

/// F_p[x]/(x^2).
inline FinAlgebra dual_numbers(int p) {
  FinAlgebra a;
  a.p = p;
  a.dim = 2;
  a.basis = {"1", "x"};
  a.sc.assign(8, 0);
  auto set = [&](int i, int j, int k, int v) { a.sc[std::size_t(i * 2 + j) * 2 + k] = v; };
  set(0, 0, 0, 1);  // 1*1 = 1
  set(0, 1, 1, 1);  // 1*x = x
  set(1, 0, 1, 1);  // x*1 = x
  // x*x = 0
  a.unit = {1, 0};
  return a;
}

// ---------------------------------------------------------------------------
// modules

struct FinModule {
  std::shared_ptr<const FinAlgebra> alg;
  int dim = 0;
  std::vector<Matrix> action;  // per algebra basis element

  Matrix act(const std::vector<int>& a) const {
    Matrix m(dim, dim, alg->p);
    for (int i = 0; i < alg->dim; ++i)
      if (a[i]) m = m + action[i].scaled(a[i]);
    return m;
  }
};

inline FinModule zero_module(std::shared_ptr<const FinAlgebra> alg) {
  FinModule m;
  m.alg = alg;
  m.dim = 0;
  m.action.assign(alg->dim, Matrix(0, 0, alg->p));
  return m;
}

inline FinModule regular_module(std::shared_ptr<const FinAlgebra> alg) {
  FinModule m;
  m.alg = alg;
  m.dim = alg->dim;
  for (int i = 0; i < alg->dim; ++i) m.action.push_back(alg->right_mult(alg->basis_vec(i)));
  return m;
}

/// act(e_i e_j) = act(e_j) act(e_i) on basis pairs, plus unital action.
inline std::vector<std::string> validate_module(const FinModule& m) {
  std::vector<std::string> out;
  const auto& a = *m.alg;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Matrix expect(m.dim, m.dim, a.p);
      for (int k = 0; k < a.dim; ++k)
        if (a.sc_at(i, j, k)) expect = expect + m.action[k].scaled(a.sc_at(i, j, k));
      if (!(m.action[j] * m.action[i] == expect))
        out.push_back("action incompatible with e_" + std::to_string(i) + " e_" + std::to_string(j));
    }
  if (!(m.act(a.unit) == Matrix::identity(m.dim, a.p))) out.push_back("action not unital");
  return out;
}

inline FinModule direct_sum(const FinModule& x, const FinModule& y) {
  require(x.alg == y.alg || x.alg->sc == y.alg->sc, ErrorKind::AlgebraMismatch, "direct_sum");
  FinModule s;
  s.alg = x.alg;
  s.dim = x.dim + y.dim;
  for (int i = 0; i < x.alg->dim; ++i) {
    Matrix m(s.dim, s.dim, x.alg->p);
    for (int r = 0; r < x.dim; ++r)
      for (int c = 0; c < x.dim; ++c) m.at(r, c) = x.action[i].at(r, c);
    for (int r = 0; r < y.dim; ++r)
      for (int c = 0; c < y.dim; ++c) m.at(x.dim + r, x.dim + c) = y.action[i].at(r, c);
    s.action.push_back(std::move(m));
  }
  return s;
}

/// Basis of Hom_A(M, N) = { F : F act_M(e_i) = act_N(e_i) F }.
inline std::vector<Matrix> module_hom_basis(const FinModule& m, const FinModule& n) {
  require(m.alg->sc == n.alg->sc && m.alg->p == n.alg->p, ErrorKind::AlgebraMismatch,
          "module_hom_basis");
  int p = m.alg->p;
  int vars = n.dim * m.dim;  // F is n.dim x m.dim, row-major
  if (vars == 0) return {};
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < m.alg->dim; ++i) {
    // F * Mi - Ni * F = 0
    const Matrix& Mi = m.action[i];
    const Matrix& Ni = n.action[i];
    for (int r = 0; r < n.dim; ++r)
      for (int c = 0; c < m.dim; ++c) {
        std::vector<int> row(vars, 0);
        for (int k = 0; k < m.dim; ++k)
          row[r * m.dim + k] = (row[r * m.dim + k] + Mi.at(k, c)) % p;
        for (int k = 0; k < n.dim; ++k)
          row[k * m.dim + c] = (row[k * m.dim + c] - Ni.at(r, k) % p + p) % p;
        rows.push_back(std::move(row));
      }
  }
  Subspace ker = rows.empty() ? row_space(Matrix::identity(vars, p))
                              : kernel(Matrix::from_rows(rows, p));
  std::vector<Matrix> out;
  for (int b = 0; b < ker.dim(); ++b) {
    Matrix f(n.dim, m.dim, p);
    for (int r = 0; r < n.dim; ++r)
      for (int c = 0; c < m.dim; ++c) f.at(r, c) = ker.basis.at(b, r * m.dim + c);
    out.push_back(std::move(f));
  }
  return out;
}

/// Module structure on an invariant subspace (rows of basis span it).
struct Submodule {
  FinModule module;
  Matrix inclusion;  // ambient.dim x module.dim
};

inline Submodule submodule_on(const FinModule& amb, const Subspace& space) {
  require(space.ambient == amb.dim, ErrorKind::ShapeMismatch, "submodule_on");
  int d = space.dim();
  Matrix inc = space.basis.transposed();  // columns = basis vectors
  Submodule out;
  out.module.alg = amb.alg;
  out.module.dim = d;
  for (int i = 0; i < amb.alg->dim; ++i) {
    // act on each basis vector, re-express in the subspace coordinates
    Matrix img = amb.action[i] * inc;  // amb.dim x d
    auto coords = solve(inc, img);
    require(coords.has_value(), ErrorKind::InvalidInput, "subspace not invariant under the action");
    require(inc * *coords == img, ErrorKind::InvalidInput, "subspace not invariant under the action");
    out.module.action.push_back(*coords);
  }
  out.inclusion = inc;
  return out;
}

/// Quotient module by an invariant subspace.
struct QuotientModule {
  FinModule module;
  Matrix projection;      // module.dim x ambient.dim
  Matrix section;         // ambient.dim x module.dim (coset representatives)
};

inline QuotientModule quotient_module(const FinModule& amb, const Subspace& sub) {
  auto full = row_space(Matrix::identity(amb.dim, amb.alg->p));
  auto q = quotient_basis(full, sub);
  int d = q.dim();
  // frame rows: [reps; sub basis]; coordinates of v give (class coords, -)
  Matrix frame = vstack(q.reps, sub.basis);
  QuotientModule out;
  out.module.alg = amb.alg;
  out.module.dim = d;
  out.section = q.reps.transposed();
  out.projection = Matrix(d, amb.dim, amb.alg->p);
  for (int c = 0; c < amb.dim; ++c) {
    std::vector<int> v(amb.dim, 0);
    v[c] = 1;
    auto coords = coordinates_in(frame, v);
    require(coords.has_value(), ErrorKind::InvalidInput, "frame does not span the ambient space");
    for (int r = 0; r < d; ++r) out.projection.at(r, c) = (*coords)[r];
  }
  for (int i = 0; i < amb.alg->dim; ++i)
    out.module.action.push_back(out.projection * amb.action[i] * out.section);
  // invariance check: action must descend, i.e. act(sub) ⊆ sub
  for (int i = 0; i < amb.alg->dim; ++i)
    for (int b = 0; b < sub.basis.rows; ++b) {
      auto v = sub.basis.row(b);
      Matrix col(amb.dim, 1, amb.alg->p);
      for (int r = 0; r < amb.dim; ++r) col.at(r, 0) = v[r];
      Matrix img = amb.action[i] * col;
      if (!contains(sub, img.transposed().row(0)))
        fail(ErrorKind::InvalidInput, "subspace not invariant; quotient undefined");
    }
  return out;
}

// ---------------------------------------------------------------------------
// idempotents

inline std::vector<int> algebra_elements_count_guard(const FinAlgebra& a) {
  require(pow_u64(a.p, a.dim) <= (1u << 20), ErrorKind::EnumerationBudget,
          "algebra too large for element enumeration");
  return {};
}

inline std::vector<std::vector<int>> all_idempotents(const FinAlgebra& a) {
  algebra_elements_count_guard(a);
  std::vector<std::vector<int>> out;
  std::uint64_t total = pow_u64(a.p, a.dim);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto v = index_to_vector(idx, a.dim, a.p);
    if (a.mul(v, v) == v) out.push_back(v);
  }
  return out;
}

inline bool is_zero_vec(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

/// Primitive nonzero idempotents: not a sum of two orthogonal nonzero ones.
inline std::vector<std::vector<int>> primitive_idempotents(const FinAlgebra& a) {
  auto idems = all_idempotents(a);
  std::vector<std::vector<int>> out;
  for (const auto& e : idems) {
    if (is_zero_vec(e)) continue;
    bool primitive = true;
    for (const auto& f : idems) {
      if (is_zero_vec(f) || f == e) continue;
      // g = e - f; e = f + g orthogonal decomposition?
      std::vector<int> g(a.dim);
      for (int i = 0; i < a.dim; ++i) g[i] = ((e[i] - f[i]) % a.p + a.p) % a.p;
      if (is_zero_vec(g)) continue;
      if (a.mul(g, g) == g && is_zero_vec(a.mul(f, g)) && is_zero_vec(a.mul(g, f)) &&
          is_zero_vec(a.mul(f, std::vector<int>(g))) == is_zero_vec(a.mul(f, g))) {
        primitive = false;
        break;
      }
    }
    if (primitive) out.push_back(e);
  }
  return out;
}

/// e·A as a right A-module (submodule of the regular module).
inline Submodule idempotent_projective(std::shared_ptr<const FinAlgebra> alg,
                                       const std::vector<int>& e) {
  const auto& a = *alg;
  require(a.mul(e, e) == e, ErrorKind::NotIdempotent, "e^2 != e");
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < a.dim; ++i) rows.push_back(a.mul(e, a.basis_vec(i)));
  auto space = row_space(Matrix::from_rows(rows, a.p));
  return submodule_on(regular_module(alg), space);
}

/// The corner algebra eAe with its basis embedded in A.
struct CornerAlgebra {
  FinAlgebra algebra;
  Matrix embedding;  // A.dim x eAe.dim, columns = images of eAe basis in A
};

inline CornerAlgebra corner_algebra(const FinAlgebra& a, const std::vector<int>& e) {
  require(a.mul(e, e) == e, ErrorKind::NotIdempotent, "e^2 != e");
  std::vector<std::vector<int>> span_rows;
  for (int i = 0; i < a.dim; ++i) span_rows.push_back(a.mul(a.mul(e, a.basis_vec(i)), e));
  auto space = row_space(Matrix::from_rows(span_rows, a.p));
  CornerAlgebra out;
  out.algebra.p = a.p;
  out.algebra.dim = space.dim();
  out.embedding = space.basis.transposed();
  for (int i = 0; i < space.dim(); ++i) out.algebra.basis.push_back("c" + std::to_string(i));
  out.algebra.sc.assign(std::size_t(space.dim()) * space.dim() * space.dim(), 0);
  auto coords = [&](const std::vector<int>& v) {
    auto c = coordinates_in(space.basis, v);
    require(c.has_value(), ErrorKind::InvalidInput, "product left the corner");
    return *c;
  };
  for (int i = 0; i < space.dim(); ++i)
    for (int j = 0; j < space.dim(); ++j) {
      auto prod = a.mul(space.basis.row(i), space.basis.row(j));
      auto c = coords(prod);
      for (int k = 0; k < space.dim(); ++k)
        out.algebra.sc[std::size_t(i * space.dim() + j) * space.dim() + k] = c[k];
    }
  out.algebra.unit = coords(e);
  return out;
}

/// The ideal AeA as a subspace of A.
inline Subspace two_sided_ideal(const FinAlgebra& a, const std::vector<int>& e) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      rows.push_back(a.mul(a.mul(a.basis_vec(i), e), a.basis_vec(j)));
  return row_space(Matrix::from_rows(rows, a.p));
}

/// Quotient algebra A / I for a two-sided ideal I.
struct QuotientAlgebra {
  FinAlgebra algebra;
  Matrix projection;  // dim(A/I) x dim(A)
  Matrix section;     // dim(A) x dim(A/I)
};

inline QuotientAlgebra quotient_algebra(const FinAlgebra& a, const Subspace& ideal) {
  auto full = row_space(Matrix::identity(a.dim, a.p));
  auto q = quotient_basis(full, ideal);
  QuotientAlgebra out;
  out.algebra.p = a.p;
  out.algebra.dim = q.dim();
  for (int i = 0; i < q.dim(); ++i) out.algebra.basis.push_back("q" + std::to_string(i));
  Matrix frame = vstack(q.reps, ideal.basis);
  out.section = q.reps.transposed();
  out.projection = Matrix(q.dim(), a.dim, a.p);
  for (int c = 0; c < a.dim; ++c) {
    std::vector<int> v(a.dim, 0);
    v[c] = 1;
    auto coords = coordinates_in(frame, v);
    require(coords.has_value(), ErrorKind::InvalidInput, "quotient frame incomplete");
    for (int r = 0; r < q.dim(); ++r) out.projection.at(r, c) = (*coords)[r];
  }
  out.algebra.sc.assign(std::size_t(q.dim()) * q.dim() * q.dim(), 0);
  auto proj_vec = [&](const std::vector<int>& v) {
    std::vector<int> outv(q.dim(), 0);
    for (int r = 0; r < q.dim(); ++r) {
      int acc = 0;
      for (int c = 0; c < a.dim; ++c) acc = (acc + out.projection.at(r, c) * v[c]) % a.p;
      outv[r] = acc;
    }
    return outv;
  };
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j) {
      auto prod = a.mul(q.reps.row(i), q.reps.row(j));
      auto c = proj_vec(prod);
      for (int k = 0; k < q.dim(); ++k)
        out.algebra.sc[std::size_t(i * q.dim() + j) * q.dim() + k] = c[k];
    }
  out.algebra.unit = proj_vec(a.unit);
  return out;
}

/// Commutative algebra is semisimple iff its nilradical vanishes; used only
/// to gate fast paths, never correctness.
inline bool commutative_semisimple(const FinAlgebra& a) {
  if (!a.commutative()) return false;
  if (pow_u64(a.p, a.dim) > (1u << 16)) return false;
  std::uint64_t total = pow_u64(a.p, a.dim);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto v = index_to_vector(idx, a.dim, a.p);
    auto w = v;
    for (int it = 0; it < a.dim + 1; ++it) {
      w = a.mul(w, w);
      if (is_zero_vec(w)) return false;  // nonzero nilpotent
      // stop early once w stabilizes on idempotent-ish powers
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// bimodule functors (tensor and hom across an idempotent)

/// A bimodule with a left action of algebra B and a right action of algebra
/// A on the same carrier; both given by matrices per basis element, and they
/// commute.
struct Bimodule {
  std::shared_ptr<const FinAlgebra> left_alg;   // B
  std::shared_ptr<const FinAlgebra> right_alg;  // A
  int dim = 0;
  std::vector<Matrix> left_action;   // per B basis element (x ↦ b·x)
  std::vector<Matrix> right_action;  // per A basis element (x ↦ x·a)
};

/// N ⊗_B M for a right B-module N and a (B, A)-bimodule M; the result is a
/// right A-module.  Carrier: (N ⊗ M) / span{ nb ⊗ m - n ⊗ bm }.
struct TensorResult {
  FinModule module;            // right A-module on quotient coordinates
  Matrix projection;           // quotient coords from vec(n ⊗ m), size out.dim x (N.dim*M.dim)
};

inline TensorResult tensor_over(const FinModule& n, const Bimodule& m) {
  require(n.alg->sc == m.left_alg->sc, ErrorKind::AlgebraMismatch, "tensor_over");
  int p = n.alg->p;
  int big = n.dim * m.dim;  // basis n_i ⊗ m_j at index i*m.dim + j
  std::vector<std::vector<int>> rel_rows;
  for (int b = 0; b < m.left_alg->dim; ++b) {
    const Matrix& nb = n.action[b];        // n ↦ n·b
    const Matrix& bm = m.left_action[b];   // m ↦ b·m
    for (int i = 0; i < n.dim; ++i)
      for (int j = 0; j < m.dim; ++j) {
        // (n_i·b) ⊗ m_j - n_i ⊗ (b·m_j)
        std::vector<int> row(big, 0);
        for (int r = 0; r < n.dim; ++r) row[r * m.dim + j] = (row[r * m.dim + j] + nb.at(r, i)) % p;
        for (int r = 0; r < m.dim; ++r)
          row[i * m.dim + r] = ((row[i * m.dim + r] - bm.at(r, j)) % p + p) % p;
        rel_rows.push_back(std::move(row));
      }
  }
  Subspace rel = rel_rows.empty() ? zero_subspace(big, p)
                                  : row_space(Matrix::from_rows(rel_rows, p));
  if (big == 0) rel = zero_subspace(0, p);
  // quotient carrier
  FinModule carrier;  // temporary ambient module structure for the quotient
  carrier.alg = m.right_alg;
  carrier.dim = big;
  for (int a = 0; a < m.right_alg->dim; ++a) {
    // (n ⊗ m)·a = n ⊗ (m·a)
    Matrix act(big, big, p);
    const Matrix& ma = m.right_action[a];
    for (int i = 0; i < n.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        for (int r = 0; r < m.dim; ++r) {
          int v = ma.at(r, j);
          if (v) act.at(i * m.dim + r, i * m.dim + j) = v;
        }
    carrier.action.push_back(std::move(act));
  }
  auto q = quotient_module(carrier, rel);
  return {q.module, q.projection};
}

/// Hom_B(M, N) for right B-modules, where M additionally carries a left
/// A-action commuting with its right B-action; the result is a right
/// A-module via (f·a)(x) = f(a·x).
struct HomResult {
  FinModule module;                 // right A-module
  std::vector<Matrix> basis_maps;   // hom basis as matrices N.dim x M.dim
};

inline HomResult hom_over(const Bimodule& m, const FinModule& n) {
  // here m.right_alg = B (the hom is over B), m.left_alg = A
  require(n.alg->sc == m.right_alg->sc, ErrorKind::AlgebraMismatch, "hom_over");
  int p = n.alg->p;
  FinModule m_as_b;  // M as plain right B-module
  m_as_b.alg = n.alg;
  m_as_b.dim = m.dim;
  m_as_b.action = m.right_action;
  auto basis_maps = module_hom_basis(m_as_b, n);
  int d = int(basis_maps.size());
  HomResult out;
  out.module.alg = m.left_alg;
  out.module.dim = d;
  out.basis_maps = basis_maps;
  // vectorization frame of the hom space
  int vars = n.dim * m.dim;
  std::vector<std::vector<int>> frame_rows;
  for (const auto& f : basis_maps) {
    std::vector<int> row(vars);
    for (int r = 0; r < n.dim; ++r)
      for (int c = 0; c < m.dim; ++c) row[r * m.dim + c] = f.at(r, c);
    frame_rows.push_back(std::move(row));
  }
  Matrix frame = frame_rows.empty() ? Matrix(0, std::max(vars, 1), p)
                                    : Matrix::from_rows(frame_rows, p);
  for (int a = 0; a < m.left_alg->dim; ++a) {
    Matrix act(d, d, p);
    for (int b = 0; b < d; ++b) {
      Matrix fa = basis_maps[b] * m.left_action[a];  // f(a·x)
      std::vector<int> v(vars);
      for (int r = 0; r < n.dim; ++r)
        for (int c = 0; c < m.dim; ++c) v[r * m.dim + c] = fa.at(r, c);
      auto coords = coordinates_in(frame, v);
      require(coords.has_value(), ErrorKind::InvalidInput, "hom action left the hom space");
      for (int r = 0; r < d; ++r) act.at(r, b) = (*coords)[r];
    }
    out.module.action.push_back(std::move(act));
  }
  return out;
}

}  // namespace locus
