#pragma once

// Exact dense linear algebra over prime fields F_p.  Everything downstream
// (hom spaces, homotopy quotients, lifting problems) reduces to the
// operations in this header.  No floating point anywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locus/common.hpp"

namespace locus {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_modulus(int p) {
  require(p >= 2 && p < (1 << 16) && is_prime(p), ErrorKind::NotPrime,
          "modulus " + std::to_string(p) + " must be a prime < 2^16");
}

inline int mod_inverse(int a, int p) {
  // extended Euclid; a nonzero mod p
  int t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  require(r == 1, ErrorKind::InvalidInput, "element not invertible");
  return ((t % p) + p) % p;
}

struct Matrix {
  int rows = 0;
  int cols = 0;
  int p = 2;
  std::vector<int> a;  // row-major, entries in [0, p)

  Matrix() = default;
  Matrix(int r, int c, int modulus) : rows(r), cols(c), p(modulus), a(std::size_t(r) * c, 0) {
    check_modulus(modulus);
  }

  static Matrix identity(int n, int modulus) {
    Matrix m(n, n, modulus);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<int>>& rows_in, int modulus) {
    int r = int(rows_in.size());
    int c = r ? int(rows_in[0].size()) : 0;
    Matrix m(r, c, modulus);
    for (int i = 0; i < r; ++i) {
      require(int(rows_in[i].size()) == c, ErrorKind::ShapeMismatch, "ragged rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = ((rows_in[i][j] % modulus) + modulus) % modulus;
    }
    return m;
  }

  int& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  int at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  bool is_zero() const {
    for (int v : a)
      if (v) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && p == o.p && a == o.a;
  }

  Matrix operator*(const Matrix& o) const {
    require(p == o.p, ErrorKind::ModulusMismatch, "matrix product");
    require(cols == o.rows, ErrorKind::ShapeMismatch, "matrix product");
    Matrix r(rows, o.cols, p);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        int v = at(i, k);
        if (!v) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = int((r.at(i, j) + std::int64_t(v) * o.at(k, j)) % p);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    require(p == o.p && rows == o.rows && cols == o.cols, ErrorKind::ShapeMismatch, "matrix sum");
    Matrix r(rows, cols, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + o.a[i]) % p;
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require(p == o.p && rows == o.rows && cols == o.cols, ErrorKind::ShapeMismatch, "matrix diff");
    Matrix r(rows, cols, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] - o.a[i] + p) % p;
    return r;
  }
  Matrix negated() const {
    Matrix r(rows, cols, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (p - a[i]) % p;
    return r;
  }
  Matrix scaled(int c) const {
    c = ((c % p) + p) % p;
    Matrix r(rows, cols, p);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = int(std::int64_t(a[i]) * c % p);
    return r;
  }
  Matrix transposed() const {
    Matrix r(cols, rows, p);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  std::vector<int> row(int i) const {
    return std::vector<int>(a.begin() + std::size_t(i) * cols, a.begin() + std::size_t(i + 1) * cols);
  }
};

/// Stack blocks horizontally / vertically.
inline Matrix hstack(const Matrix& l, const Matrix& r) {
  require(l.rows == r.rows && l.p == r.p, ErrorKind::ShapeMismatch, "hstack");
  Matrix m(l.rows, l.cols + r.cols, l.p);
  for (int i = 0; i < l.rows; ++i) {
    for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
    for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
  }
  return m;
}
inline Matrix vstack(const Matrix& t, const Matrix& b) {
  require(t.cols == b.cols && t.p == b.p, ErrorKind::ShapeMismatch, "vstack");
  Matrix m(t.rows + b.rows, t.cols, t.p);
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < t.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
  return m;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    int inv = mod_inverse(m.at(row, col), m.p);
    for (int j = col; j < m.cols; ++j) m.at(row, j) = int(std::int64_t(m.at(row, j)) * inv % m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      int f = m.at(i, col);
      if (!f) continue;
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = int((m.at(i, j) - std::int64_t(f) * m.at(row, j) % m.p + m.p) % m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Matrix m) { return int(rref_in_place(m).size()); }

/// A subspace of F_p^n held as a reduced row-echelon basis.
struct Subspace {
  int ambient = 0;
  int p = 2;
  Matrix basis;  // RREF, no zero rows
  std::vector<int> pivots;

  int dim() const { return basis.rows; }
};

/// Span of the rows of m.
inline Subspace row_space(Matrix m) {
  Subspace s;
  s.ambient = m.cols;
  s.p = m.p;
  auto piv = rref_in_place(m);
  Matrix b(int(piv.size()), m.cols, m.p);
  for (int i = 0; i < int(piv.size()); ++i)
    for (int j = 0; j < m.cols; ++j) b.at(i, j) = m.at(i, j);
  s.basis = std::move(b);
  s.pivots = std::move(piv);
  return s;
}

inline Subspace zero_subspace(int ambient, int p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  s.basis = Matrix(0, ambient, p);
  return s;
}

/// Reduce v modulo the subspace; returns the residue (zero iff v lies in s).
inline std::vector<int> residue(const Subspace& s, std::vector<int> v) {
  require(int(v.size()) == s.ambient, ErrorKind::ShapeMismatch, "residue");
  for (int i = 0; i < s.basis.rows; ++i) {
    int c = v[s.pivots[i]] % s.p;
    if (!c) continue;
    for (int j = 0; j < s.ambient; ++j)
      v[j] = int((v[j] - std::int64_t(c) * s.basis.at(i, j) % s.p + s.p) % s.p);
  }
  return v;
}

inline bool contains(const Subspace& s, const std::vector<int>& v) {
  auto r = residue(s, v);
  for (int x : r)
    if (x % s.p) return false;
  return true;
}

inline bool subspace_leq(const Subspace& w, const Subspace& v) {
  for (int i = 0; i < w.basis.rows; ++i)
    if (!contains(v, w.basis.row(i))) return false;
  return true;
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient == b.ambient && a.p == b.p, ErrorKind::ShapeMismatch, "subspace sum");
  return row_space(vstack(a.basis, b.basis));
}

/// Basis of { x : Ax = 0 } as a subspace of F_p^cols.
inline Subspace kernel(const Matrix& A) {
  Matrix m = A;
  auto piv = rref_in_place(m);
  std::vector<char> is_pivot(A.cols, 0);
  for (int c : piv) is_pivot[c] = 1;
  std::vector<std::vector<int>> rows;
  for (int c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(A.cols, 0);
    v[c] = 1;
    for (int i = 0; i < int(piv.size()); ++i) v[piv[i]] = (A.p - m.at(i, c)) % A.p;
    rows.push_back(std::move(v));
  }
  Subspace s;
  s.ambient = A.cols;
  s.p = A.p;
  s.basis = Matrix::from_rows(rows, A.p);
  // free-column construction is already in echelon shape up to pivot sorting
  s = row_space(s.basis);
  s.ambient = A.cols;
  return s;
}

/// One solution of Ax = b (free variables set to 0), or empty if inconsistent.
/// b may have several columns; the solution then solves AX = B.
inline std::optional<Matrix> solve(const Matrix& A, const Matrix& b) {
  require(A.p == b.p, ErrorKind::ModulusMismatch, "solve");
  require(A.rows == b.rows, ErrorKind::ShapeMismatch, "solve");
  Matrix aug = hstack(A, b);
  auto piv = rref_in_place(aug);
  Matrix x(A.cols, b.cols, A.p);
  for (int i = 0; i < int(piv.size()); ++i) {
    if (piv[i] >= A.cols) return std::nullopt;  // pivot in an rhs column
    for (int j = 0; j < b.cols; ++j) x.at(piv[i], j) = aug.at(i, A.cols + j);
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& A) {
  require(A.rows == A.cols, ErrorKind::ShapeMismatch, "inverse");
  auto x = solve(A, Matrix::identity(A.rows, A.p));
  if (!x) return std::nullopt;
  if (!((*x * A) == Matrix::identity(A.rows, A.p))) return std::nullopt;
  return x;
}

/// Coset data for V/W: representatives extending a basis of W to one of V.
struct QuotientBasis {
  int ambient = 0;
  int p = 2;
  Matrix reps;  // rows: coset representatives, dim V - dim W of them
  int dim() const { return reps.rows; }
};

inline QuotientBasis quotient_basis(const Subspace& V, const Subspace& W) {
  require(V.ambient == W.ambient && V.p == W.p, ErrorKind::ShapeMismatch, "quotient_basis");
  require(subspace_leq(W, V), ErrorKind::NotSubspace, "W is not contained in V");
  QuotientBasis q;
  q.ambient = V.ambient;
  q.p = V.p;
  Subspace acc = W;
  std::vector<std::vector<int>> reps;
  for (int i = 0; i < V.basis.rows; ++i) {
    auto r = residue(acc, V.basis.row(i));
    bool zero = true;
    for (int x : r)
      if (x) {
        zero = false;
        break;
      }
    if (zero) continue;
    reps.push_back(V.basis.row(i));
    acc = sum(acc, row_space(Matrix::from_rows({r}, V.p)));
  }
  q.reps = Matrix::from_rows(reps, V.p);
  if (q.reps.cols == 0) q.reps = Matrix(int(reps.size()), V.ambient, V.p);
  return q;
}

/// Coordinates of v in the combined frame (quotient reps | subspace basis);
/// the first block gives the class of v modulo the subspace.
inline std::optional<std::vector<int>> coordinates_in(const Matrix& frame_rows,
                                                      const std::vector<int>& v) {
  Matrix A = frame_rows.transposed();
  Matrix b(int(v.size()), 1, frame_rows.p);
  for (int i = 0; i < int(v.size()); ++i) b.at(i, 0) = ((v[i] % frame_rows.p) + frame_rows.p) % frame_rows.p;
  auto x = solve(A, b);
  if (!x) return std::nullopt;
  // verify: frame may not span v
  Matrix back = A * *x;
  if (!(back == b)) return std::nullopt;
  std::vector<int> out(frame_rows.rows);
  for (int i = 0; i < frame_rows.rows; ++i) out[i] = x->at(i, 0);
  return out;
}

/// Enumerates vectors of F_p^n in lexicographic order by index:
/// index = sum v_i * p^i.  Used for deterministic element sweeps.
inline std::vector<int> index_to_vector(std::uint64_t index, int n, int p) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = int(index % p);
    index /= p;
  }
  return v;
}

inline std::uint64_t vector_to_index(const std::vector<int>& v, int p) {
  std::uint64_t idx = 0;
  for (int i = int(v.size()) - 1; i >= 0; --i) idx = idx * p + (((v[i] % p) + p) % p);
  return idx;
}

inline std::uint64_t pow_u64(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace locus
