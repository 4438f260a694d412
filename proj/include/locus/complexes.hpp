#pragma once

// Bounded chain complexes over a finite-dimensional F_p-algebra, chain maps
// and homotopies, mapping cones, cohomology, and the hom-spaces of the
// bounded homotopy category.
//
// Grading is cohomological: differentials raise degree, the shift is
// X[1]^n = X^{n+1} with differential -d, and the window of F_p[0] shifted
// by 2 is [-2,-2].

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/algebra.hpp"
#include "locus/common.hpp"
#include "locus/linalg.hpp"

namespace locus {

struct ChainComplex {
  std::shared_ptr<const FinAlgebra> alg;
  int lo = 0;                     // window [lo, hi]; empty complex: lo = 0, hi = -1
  int hi = -1;
  std::vector<FinModule> comps;   // comps[n - lo]
  std::vector<Matrix> diffs;      // diffs[n - lo]: d^n : X^n -> X^{n+1}; size = hi - lo when nonempty

  bool empty_window() const { return lo > hi; }
  int dim_at(int n) const { return (n < lo || n > hi) ? 0 : comps[n - lo].dim; }
  const FinModule& comp_at(int n) const { return comps[n - lo]; }
  Matrix diff_at(int n) const {
    if (n < lo || n >= hi) return Matrix(dim_at(n + 1), dim_at(n), alg->p);
    return diffs[n - lo];
  }
  int total_dim() const {
    int t = 0;
    for (const auto& c : comps) t += c.dim;
    return t;
  }
  std::vector<int> dim_vector() const {
    std::vector<int> v;
    for (const auto& c : comps) v.push_back(c.dim);
    return v;
  }
  /// Drops zero components at the window edges.
  ChainComplex trimmed() const {
    int a = lo, b = hi;
    while (a <= b && dim_at(a) == 0) ++a;
    while (b >= a && dim_at(b) == 0) --b;
    ChainComplex out;
    out.alg = alg;
    if (a > b) return out;
    out.lo = a;
    out.hi = b;
    for (int n = a; n <= b; ++n) out.comps.push_back(comp_at(n));
    for (int n = a; n < b; ++n) out.diffs.push_back(diff_at(n));
    return out;
  }
};

inline ChainComplex zero_complex(std::shared_ptr<const FinAlgebra> alg) {
  ChainComplex c;
  c.alg = alg;
  return c;
}

/// A single module concentrated in one degree.
inline ChainComplex concentrated(const FinModule& m, int degree) {
  ChainComplex c;
  c.alg = m.alg;
  if (m.dim == 0) return c;
  c.lo = c.hi = degree;
  c.comps = {m};
  return c;
}

inline std::vector<std::string> validate_complex(const ChainComplex& x) {
  std::vector<std::string> out;
  if (x.empty_window()) return out;
  for (int n = x.lo; n <= x.hi; ++n) {
    auto errs = validate_module(x.comp_at(n));
    for (auto& e : errs) out.push_back("degree " + std::to_string(n) + ": " + e);
  }
  for (int n = x.lo; n < x.hi; ++n) {
    const Matrix& d = x.diff_at(n);
    if (d.rows != x.dim_at(n + 1) || d.cols != x.dim_at(n))
      out.push_back("differential at degree " + std::to_string(n) + " has the wrong shape");
    // A-linearity
    for (int i = 0; i < x.alg->dim; ++i)
      if (!(d * x.comp_at(n).action[i] == x.comp_at(n + 1).action[i] * d))
        out.push_back("differential at degree " + std::to_string(n) + " is not linear over e_" +
                      std::to_string(i));
  }
  for (int n = x.lo; n + 1 < x.hi; ++n)
    if (!(x.diff_at(n + 1) * x.diff_at(n)).is_zero())
      out.push_back("d∘d != 0 at degree " + std::to_string(n));
  return out;
}

inline ChainComplex shift(const ChainComplex& x, int k) {
  ChainComplex out;
  out.alg = x.alg;
  if (x.empty_window()) return out;
  out.lo = x.lo - k;
  out.hi = x.hi - k;
  out.comps = x.comps;
  out.diffs = x.diffs;
  if (k % 2 != 0)
    for (auto& d : out.diffs) d = d.negated();
  return out;
}

inline ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y) {
  require(x.alg->sc == y.alg->sc, ErrorKind::AlgebraMismatch, "direct_sum of complexes");
  if (x.empty_window()) return y;
  if (y.empty_window()) return x;
  ChainComplex out;
  out.alg = x.alg;
  out.lo = std::min(x.lo, y.lo);
  out.hi = std::max(x.hi, y.hi);
  auto zero_mod = zero_module(x.alg);
  for (int n = out.lo; n <= out.hi; ++n) {
    FinModule xm = n >= x.lo && n <= x.hi ? x.comp_at(n) : zero_mod;
    FinModule ym = n >= y.lo && n <= y.hi ? y.comp_at(n) : zero_mod;
    out.comps.push_back(direct_sum(xm, ym));
  }
  for (int n = out.lo; n < out.hi; ++n) {
    Matrix dx = x.diff_at(n), dy = y.diff_at(n);
    Matrix d(x.dim_at(n + 1) + y.dim_at(n + 1), x.dim_at(n) + y.dim_at(n), out.alg->p);
    for (int r = 0; r < dx.rows; ++r)
      for (int c = 0; c < dx.cols; ++c) d.at(r, c) = dx.at(r, c);
    for (int r = 0; r < dy.rows; ++r)
      for (int c = 0; c < dy.cols; ++c) d.at(x.dim_at(n + 1) + r, x.dim_at(n) + c) = dy.at(r, c);
    out.diffs.push_back(std::move(d));
  }
  return out.trimmed();
}

// ---------------------------------------------------------------------------
// chain maps

/// Degreewise matrices f^n : X^n -> Y^n; stored over the overlap window and
/// zero elsewhere.
struct ChainMap {
  int lo = 0;
  int hi = -1;
  std::vector<Matrix> comps;

  Matrix at(int n, const ChainComplex& x, const ChainComplex& y) const {
    if (n < lo || n > hi) return Matrix(y.dim_at(n), x.dim_at(n), x.alg->p);
    return comps[n - lo];
  }
};

inline ChainMap zero_chain_map(const ChainComplex& x, const ChainComplex& y) {
  ChainMap f;
  f.lo = std::max(x.lo, y.lo);
  f.hi = std::min(x.hi, y.hi);
  for (int n = f.lo; n <= f.hi; ++n) f.comps.push_back(Matrix(y.dim_at(n), x.dim_at(n), x.alg->p));
  if (f.lo > f.hi) {
    f.lo = 0;
    f.hi = -1;
    f.comps.clear();
  }
  return f;
}

inline ChainMap identity_chain_map(const ChainComplex& x) {
  ChainMap f;
  f.lo = x.lo;
  f.hi = x.hi;
  for (int n = x.lo; n <= x.hi; ++n) f.comps.push_back(Matrix::identity(x.dim_at(n), x.alg->p));
  if (x.empty_window()) {
    f.lo = 0;
    f.hi = -1;
    f.comps.clear();
  }
  return f;
}

inline ChainMap compose(const ChainMap& g, const ChainMap& f, const ChainComplex& x,
                        const ChainComplex& y, const ChainComplex& z) {
  // g : Y -> Z after f : X -> Y
  ChainMap out;
  out.lo = std::max(x.lo, z.lo);
  out.hi = std::min(x.hi, z.hi);
  if (out.lo > out.hi) {
    out.lo = 0;
    out.hi = -1;
    return out;
  }
  for (int n = out.lo; n <= out.hi; ++n) out.comps.push_back(g.at(n, y, z) * f.at(n, x, y));
  return out;
}

inline ChainMap add(const ChainMap& a, const ChainMap& b, const ChainComplex& x,
                    const ChainComplex& y) {
  ChainMap out = zero_chain_map(x, y);
  for (int n = out.lo; n <= out.hi; ++n)
    out.comps[n - out.lo] = a.at(n, x, y) + b.at(n, x, y);
  return out;
}

inline bool is_chain_map(const ChainComplex& x, const ChainComplex& y, const ChainMap& f) {
  int a = std::min(x.lo, y.lo) - 1, b = std::max(x.hi, y.hi);
  for (int n = a; n <= b; ++n)
    if (!(f.at(n + 1, x, y) * x.diff_at(n) == y.diff_at(n) * f.at(n, x, y))) return false;
  return true;
}

/// Fixed vectorization of the overlap window (degrees ascending, row-major).
inline int chain_map_vec_dim(const ChainComplex& x, const ChainComplex& y) {
  int d = 0;
  for (int n = std::max(x.lo, y.lo); n <= std::min(x.hi, y.hi); ++n) d += x.dim_at(n) * y.dim_at(n);
  return d;
}

inline std::vector<int> vectorize(const ChainComplex& x, const ChainComplex& y, const ChainMap& f) {
  std::vector<int> v;
  for (int n = std::max(x.lo, y.lo); n <= std::min(x.hi, y.hi); ++n) {
    Matrix m = f.at(n, x, y);
    for (int e : m.a) v.push_back(e);
  }
  return v;
}

inline ChainMap devectorize(const ChainComplex& x, const ChainComplex& y,
                            const std::vector<int>& v) {
  ChainMap f;
  f.lo = std::max(x.lo, y.lo);
  f.hi = std::min(x.hi, y.hi);
  if (f.lo > f.hi) {
    f.lo = 0;
    f.hi = -1;
    return f;
  }
  std::size_t pos = 0;
  for (int n = f.lo; n <= f.hi; ++n) {
    Matrix m(y.dim_at(n), x.dim_at(n), x.alg->p);
    for (auto& e : m.a) e = v[pos++];
    f.comps.push_back(std::move(m));
  }
  return f;
}

/// F_p-basis of the space of chain maps X -> Y: kernel of the combined
/// A-linearity and d-commutation system.
inline std::vector<ChainMap> hom_complexes(const ChainComplex& x, const ChainComplex& y) {
  require(x.alg->sc == y.alg->sc && x.alg->p == y.alg->p, ErrorKind::AlgebraMismatch,
          "hom_complexes");
  int p = x.alg->p;
  int vars = chain_map_vec_dim(x, y);
  if (vars == 0) return {};
  // variable layout mirrors vectorize()
  int wlo = std::max(x.lo, y.lo), whi = std::min(x.hi, y.hi);
  std::vector<int> offset(whi - wlo + 1, 0);
  {
    int acc = 0;
    for (int n = wlo; n <= whi; ++n) {
      offset[n - wlo] = acc;
      acc += x.dim_at(n) * y.dim_at(n);
    }
  }
  auto var_of = [&](int n, int r, int c) { return offset[n - wlo] + r * x.dim_at(n) + c; };
  std::vector<std::vector<int>> rows;
  // A-linearity per degree
  for (int n = wlo; n <= whi; ++n)
    for (int i = 0; i < x.alg->dim; ++i) {
      const Matrix& Mi = x.comp_at(n).action[i];
      const Matrix& Ni = y.comp_at(n).action[i];
      for (int r = 0; r < y.dim_at(n); ++r)
        for (int c = 0; c < x.dim_at(n); ++c) {
          std::vector<int> row(vars, 0);
          for (int k = 0; k < x.dim_at(n); ++k)
            row[var_of(n, r, k)] = (row[var_of(n, r, k)] + Mi.at(k, c)) % p;
          for (int k = 0; k < y.dim_at(n); ++k)
            row[var_of(n, k, c)] = ((row[var_of(n, k, c)] - Ni.at(r, k)) % p + p) % p;
          rows.push_back(std::move(row));
        }
    }
  // d-commutation: f^{n+1} d_X^n = d_Y^n f^n
  for (int n = std::min(x.lo, y.lo) - 1; n <= std::max(x.hi, y.hi); ++n) {
    const Matrix dx = x.diff_at(n);
    const Matrix dy = y.diff_at(n);
    int rdim = y.dim_at(n + 1), cdim = x.dim_at(n);
    if (rdim == 0 || cdim == 0) continue;
    for (int r = 0; r < rdim; ++r)
      for (int c = 0; c < cdim; ++c) {
        std::vector<int> row(vars, 0);
        bool nontrivial = false;
        if (n + 1 >= wlo && n + 1 <= whi)
          for (int k = 0; k < x.dim_at(n + 1); ++k)
            if (dx.at(k, c)) {
              row[var_of(n + 1, r, k)] = (row[var_of(n + 1, r, k)] + dx.at(k, c)) % p;
              nontrivial = true;
            }
        if (n >= wlo && n <= whi)
          for (int k = 0; k < y.dim_at(n); ++k)
            if (dy.at(r, k)) {
              row[var_of(n, k, c)] = ((row[var_of(n, k, c)] - dy.at(r, k)) % p + p) % p;
              nontrivial = true;
            }
        if (nontrivial) rows.push_back(std::move(row));
      }
  }
  Subspace ker = rows.empty() ? row_space(Matrix::identity(vars, p))
                              : kernel(Matrix::from_rows(rows, p));
  std::vector<ChainMap> out;
  for (int b = 0; b < ker.dim(); ++b) out.push_back(devectorize(x, y, ker.basis.row(b)));
  return out;
}

/// Subspace (in chain-map vectorization) spanned by maps of the form
/// d_Y s + s d_X over all degreewise A-linear s^n : X^n -> Y^{n-1}.
inline Subspace null_homotopic_subspace(const ChainComplex& x, const ChainComplex& y) {
  int p = x.alg->p;
  int vars = chain_map_vec_dim(x, y);
  std::vector<std::vector<int>> rows;
  FinModule zero_m = zero_module(x.alg);
  for (int n = x.lo; n <= x.hi; ++n) {
    // s^n : X^n -> Y^{n-1}
    if (n - 1 < y.lo || n - 1 > y.hi) continue;
    auto basis = module_hom_basis(x.comp_at(n), y.comp_at(n - 1));
    for (const auto& s : basis) {
      // h = d_Y^{n-1} s at degree n, and s d_X^{n} contributes at... build the
      // full chain map: h^k = d_Y^{k-1} s^k + s^{k+1} d_X^k with s supported
      // in degree n only
      ChainMap h = zero_chain_map(x, y);
      if (h.lo > h.hi) continue;
      auto addm = [&](int k, const Matrix& m) {
        if (k >= h.lo && k <= h.hi && m.rows == y.dim_at(k) && m.cols == x.dim_at(k))
          h.comps[k - h.lo] = h.comps[k - h.lo] + m;
      };
      addm(n, y.diff_at(n - 1) * s);
      addm(n - 1, s * x.diff_at(n - 1));
      rows.push_back(vectorize(x, y, h));
    }
  }
  if (vars == 0) return zero_subspace(0, p);
  return rows.empty() ? zero_subspace(vars, p) : row_space(Matrix::from_rows(rows, p));
}

inline bool is_null_homotopic(const ChainComplex& x, const ChainComplex& y, const ChainMap& f) {
  auto nh = null_homotopic_subspace(x, y);
  if (nh.ambient == 0) return true;
  return contains(nh, vectorize(x, y, f));
}

inline bool is_contractible(const ChainComplex& x) {
  return is_null_homotopic(x, x, identity_chain_map(x));
}

/// Hom-space in the homotopy category: chain maps modulo null-homotopic
/// ones, with a fixed coordinatization frame for class lookups.
struct HomotopyClasses {
  int dim = 0;                         // dimension of the quotient
  std::vector<ChainMap> class_reps;    // representatives of a basis
  Subspace null_subspace;              // null-homotopic chain maps
  Matrix frame;                        // rows: [class reps; null basis]
  int vec_dim = 0;

  /// Coordinates of [f] in the class basis; nullopt if f is not a chain map
  /// combination (should not happen for genuine chain maps).
  std::optional<std::vector<int>> coords(const ChainComplex& x, const ChainComplex& y,
                                         const ChainMap& f) const {
    if (vec_dim == 0) return std::vector<int>{};
    auto full = coordinates_in(frame, vectorize(x, y, f));
    if (!full) return std::nullopt;
    return std::vector<int>(full->begin(), full->begin() + dim);
  }
  /// Linear combination of class representatives with the given coordinates.
  ChainMap rep(const ChainComplex& x, const ChainComplex& y, const std::vector<int>& c) const {
    ChainMap out = zero_chain_map(x, y);
    for (int i = 0; i < dim; ++i)
      if (c[i]) {
        ChainMap scaled = class_reps[i];
        for (auto& m : scaled.comps) m = m.scaled(c[i]);
        out = add(out, scaled, x, y);
      }
    return out;
  }
};

inline HomotopyClasses homotopy_classes(const ChainComplex& x, const ChainComplex& y) {
  HomotopyClasses out;
  out.vec_dim = chain_map_vec_dim(x, y);
  int p = x.alg->p;
  auto maps = hom_complexes(x, y);
  out.null_subspace = null_homotopic_subspace(x, y);
  if (out.vec_dim == 0) {
    out.dim = 0;
    out.frame = Matrix(0, 0, p);
    return out;
  }
  std::vector<std::vector<int>> map_rows;
  for (auto& f : maps) map_rows.push_back(vectorize(x, y, f));
  Subspace full = map_rows.empty() ? zero_subspace(out.vec_dim, p)
                                   : row_space(Matrix::from_rows(map_rows, p));
  auto q = quotient_basis(full, out.null_subspace);
  out.dim = q.dim();
  for (int i = 0; i < q.dim(); ++i) out.class_reps.push_back(devectorize(x, y, q.reps.row(i)));
  out.frame = vstack(q.reps, out.null_subspace.basis);
  return out;
}

// ---------------------------------------------------------------------------
// cones, cohomology

struct ConeTriangle {
  ChainComplex cone;   // C(φ)
  ChainMap injection;  // Y -> C
  ChainMap projection; // C -> X[1]
};

/// Standard cone: C^n = X^{n+1} ⊕ Y^n, differential [[-d_X, 0], [φ, d_Y]].
inline ConeTriangle mapping_cone(const ChainComplex& x, const ChainComplex& y, const ChainMap& phi) {
  require(is_chain_map(x, y, phi), ErrorKind::InvalidInput, "mapping_cone needs a chain map");
  int p = x.alg->p;
  ChainComplex sx = shift(x, 1);
  ChainComplex c;
  c.alg = x.alg;
  if (sx.empty_window() && y.empty_window()) {
    ConeTriangle t{c, zero_chain_map(y, c), zero_chain_map(c, sx)};
    return t;
  }
  c.lo = sx.empty_window() ? y.lo : (y.empty_window() ? sx.lo : std::min(sx.lo, y.lo));
  c.hi = sx.empty_window() ? y.hi : (y.empty_window() ? sx.hi : std::max(sx.hi, y.hi));
  auto zm = zero_module(x.alg);
  for (int n = c.lo; n <= c.hi; ++n) {
    FinModule xm = (n >= sx.lo && n <= sx.hi) ? sx.comp_at(n) : zm;
    FinModule ym = (n >= y.lo && n <= y.hi) ? y.comp_at(n) : zm;
    c.comps.push_back(direct_sum(xm, ym));
  }
  for (int n = c.lo; n < c.hi; ++n) {
    int xr = sx.dim_at(n + 1), yr = y.dim_at(n + 1);
    int xc = sx.dim_at(n), yc = y.dim_at(n);
    Matrix d(xr + yr, xc + yc, p);
    Matrix dsx = sx.diff_at(n);  // already -d_X
    for (int r = 0; r < xr; ++r)
      for (int cc = 0; cc < xc; ++cc) d.at(r, cc) = dsx.at(r, cc);
    Matrix f = phi.at(n + 1, x, y);  // φ^{n+1} : X^{n+1} = SX^n -> Y^{n+1}
    for (int r = 0; r < yr; ++r)
      for (int cc = 0; cc < xc; ++cc) d.at(xr + r, cc) = f.at(r, cc);
    Matrix dy = y.diff_at(n);
    for (int r = 0; r < yr; ++r)
      for (int cc = 0; cc < yc; ++cc) d.at(xr + r, xc + cc) = dy.at(r, cc);
    c.diffs.push_back(std::move(d));
  }
  ConeTriangle t;
  t.cone = c;
  // injection Y -> C
  t.injection.lo = std::max(y.lo, c.lo);
  t.injection.hi = std::min(y.hi, c.hi);
  for (int n = t.injection.lo; n <= t.injection.hi; ++n) {
    Matrix m(c.dim_at(n), y.dim_at(n), p);
    int xd = sx.dim_at(n);
    for (int r = 0; r < y.dim_at(n); ++r) m.at(xd + r, r) = 1;
    t.injection.comps.push_back(std::move(m));
  }
  // projection C -> X[1]
  t.projection.lo = std::max(c.lo, sx.lo);
  t.projection.hi = std::min(c.hi, sx.hi);
  for (int n = t.projection.lo; n <= t.projection.hi; ++n) {
    Matrix m(sx.dim_at(n), c.dim_at(n), p);
    for (int r = 0; r < sx.dim_at(n); ++r) m.at(r, r) = 1;
    t.projection.comps.push_back(std::move(m));
  }
  if (t.injection.lo > t.injection.hi) t.injection = zero_chain_map(y, c);
  if (t.projection.lo > t.projection.hi) t.projection = zero_chain_map(c, sx);
  return t;
}

struct Cohomology {
  int dim = 0;
  Matrix reps;        // rows: representative cycles in X^n coordinates
  Subspace cycles;    // ker d^n
  Subspace boundaries;  // im d^{n-1}
};

inline Cohomology cohomology(const ChainComplex& x, int n) {
  Cohomology out;
  int p = x.alg->p;
  int d = x.dim_at(n);
  if (d == 0) {
    out.reps = Matrix(0, 0, p);
    out.cycles = zero_subspace(0, p);
    out.boundaries = zero_subspace(0, p);
    return out;
  }
  out.cycles = kernel(x.diff_at(n));
  Matrix prev = x.diff_at(n - 1);
  out.boundaries = prev.cols == 0 ? zero_subspace(d, p) : row_space(prev.transposed());
  auto q = quotient_basis(out.cycles, out.boundaries);
  out.dim = q.dim();
  out.reps = q.reps;
  return out;
}

/// Matrix of H^n(φ) in the representative bases of the two cohomologies.
inline Matrix cohomology_map(const ChainComplex& x, const ChainComplex& y, const ChainMap& phi,
                             int n, const Cohomology& hx, const Cohomology& hy) {
  int p = x.alg->p;
  Matrix out(hy.dim, hx.dim, p);
  if (hx.dim == 0 || hy.dim == 0) return out;
  Matrix f = phi.at(n, x, y);
  Matrix frame = vstack(hy.reps, hy.boundaries.basis);
  for (int c = 0; c < hx.dim; ++c) {
    std::vector<int> v = hx.reps.row(c);
    // f applied to the cycle
    std::vector<int> img(y.dim_at(n), 0);
    for (int r = 0; r < y.dim_at(n); ++r) {
      int acc = 0;
      for (int k = 0; k < x.dim_at(n); ++k) acc = int((acc + std::int64_t(f.at(r, k)) * v[k]) % p);
      img[r] = acc;
    }
    auto coords = coordinates_in(frame, img);
    require(coords.has_value(), ErrorKind::InvalidInput, "image of a cycle is not a cycle");
    for (int r = 0; r < hy.dim; ++r) out.at(r, c) = (*coords)[r];
  }
  return out;
}

inline bool is_quasi_iso(const ChainComplex& x, const ChainComplex& y, const ChainMap& phi) {
  require(is_chain_map(x, y, phi), ErrorKind::InvalidInput, "is_quasi_iso needs a chain map");
  int a = std::min(x.empty_window() ? 0 : x.lo, y.empty_window() ? 0 : y.lo);
  int b = std::max(x.empty_window() ? -1 : x.hi, y.empty_window() ? -1 : y.hi);
  for (int n = a; n <= b; ++n) {
    auto hx = cohomology(x, n), hy = cohomology(y, n);
    if (hx.dim != hy.dim) return false;
    auto m = cohomology_map(x, y, phi, n, hx, hy);
    if (hx.dim > 0 && !inverse(m).has_value()) return false;
  }
  return true;
}

/// Cohomology as a module with its induced action (degreewise subquotient).
inline FinModule cohomology_module(const ChainComplex& x, int n) {
  int p = x.alg->p;
  auto h = cohomology(x, n);
  FinModule out;
  out.alg = x.alg;
  out.dim = h.dim;
  if (h.dim == 0) {
    out.action.assign(x.alg->dim, Matrix(0, 0, p));
    return out;
  }
  Matrix frame = vstack(h.reps, h.boundaries.basis);
  for (int i = 0; i < x.alg->dim; ++i) {
    Matrix act(h.dim, h.dim, p);
    for (int c = 0; c < h.dim; ++c) {
      std::vector<int> v = h.reps.row(c);
      const Matrix& M = x.comp_at(n).action[i];
      std::vector<int> img(x.dim_at(n), 0);
      for (int r = 0; r < x.dim_at(n); ++r) {
        int acc = 0;
        for (int k = 0; k < x.dim_at(n); ++k) acc = int((acc + std::int64_t(M.at(r, k)) * v[k]) % p);
        img[r] = acc;
      }
      auto coords = coordinates_in(frame, img);
      require(coords.has_value(), ErrorKind::InvalidInput, "action does not preserve cycles");
      for (int r = 0; r < h.dim; ++r) act.at(r, c) = (*coords)[r];
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

}  // namespace locus
