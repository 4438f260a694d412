#include <catch2/catch_amalgamated.hpp>

#include "locus/linalg.hpp"

using namespace locus;

TEST_CASE("solve: identity system returns the rhs") {
  Matrix A = Matrix::identity(2, 2);
  Matrix b = Matrix::from_rows({{1}, {0}}, 2);
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  REQUIRE(*x == b);
}

TEST_CASE("solve: inconsistent row gives empty") {
  Matrix A = Matrix::from_rows({{1, 1}, {0, 0}}, 2);
  Matrix b = Matrix::from_rows({{1}, {1}}, 2);
  REQUIRE(!solve(A, b).has_value());
}

TEST_CASE("solve: canonical solution has free variables zero") {
  // A = [[1,1]] over F_3, b = [0]; enumeration of all 9 vectors gives the
  // solution set {(0,0),(1,2),(2,1)}; the canonical one is (0,0).
  Matrix A = Matrix::from_rows({{1, 1}}, 3);
  Matrix b = Matrix::from_rows({{0}}, 3);
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  REQUIRE(x->at(0, 0) == 0);
  REQUIRE(x->at(1, 0) == 0);
  REQUIRE(kernel(A).dim() == 1);

  int solutions = 0;
  for (int i = 0; i < 9; ++i) {
    auto v = index_to_vector(i, 2, 3);
    if ((v[0] + v[1]) % 3 == 0) ++solutions;
  }
  REQUIRE(solutions == 3);
}

TEST_CASE("solve: exactness Ax = b on random systems") {
  DetRng rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      int r = 1 + int(rng.below(4)), c = 1 + int(rng.below(4));
      Matrix A(r, c, p);
      for (auto& e : A.a) e = int(rng.below(p));
      Matrix x0(c, 1, p);
      for (auto& e : x0.a) e = int(rng.below(p));
      Matrix b = A * x0;
      auto x = solve(A, b);
      REQUIRE(x.has_value());
      REQUIRE(A * *x == b);
    }
  }
}

TEST_CASE("kernel dimensions") {
  REQUIRE(kernel(Matrix(2, 2, 2)).dim() == 2);          // zero matrix
  REQUIRE(kernel(Matrix::identity(3, 2)).dim() == 0);   // identity
  // [[1,2],[2,4]] over F_5 has rank 1; enumeration of the 25 vectors finds
  // 5 kernel elements, i.e. dimension 1.
  Matrix A = Matrix::from_rows({{1, 2}, {2, 4}}, 5);
  REQUIRE(kernel(A).dim() == 1);
  int members = 0;
  for (int i = 0; i < 25; ++i) {
    auto v = index_to_vector(i, 2, 5);
    if ((v[0] + 2 * v[1]) % 5 == 0 && (2 * v[0] + 4 * v[1]) % 5 == 0) ++members;
  }
  REQUIRE(members == 5);
}

TEST_CASE("rank-nullity on random matrices") {
  DetRng rng(11);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 100; ++trial) {
      int r = 1 + int(rng.below(5)), c = 1 + int(rng.below(5));
      Matrix A(r, c, p);
      for (auto& e : A.a) e = int(rng.below(p));
      REQUIRE(rank(A) + kernel(A).dim() == c);
    }
  }
}

TEST_CASE("quotient basis: trivial cases") {
  Subspace v = row_space(Matrix::identity(3, 2));
  REQUIRE(quotient_basis(v, v).dim() == 0);
  Subspace zero = zero_subspace(3, 2);
  REQUIRE(quotient_basis(v, zero).dim() == 3);
}

TEST_CASE("quotient basis matches exhaustive coset enumeration over F_2^4") {
  Matrix vb = Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}, 2);
  Matrix wb = Matrix::from_rows({{1, 1, 0, 0}}, 2);
  Subspace V = row_space(vb), W = row_space(wb);
  auto q = quotient_basis(V, W);
  REQUIRE(q.dim() == 2);

  // brute force: count distinct cosets of W among the 16 vectors lying in V
  std::vector<std::vector<int>> reps;
  for (int i = 0; i < 16; ++i) {
    auto v = index_to_vector(i, 4, 2);
    if (!contains(V, v)) continue;
    auto r = residue(W, v);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  REQUIRE(int(reps.size()) == 1 << q.dim());
}

TEST_CASE("quotient basis rejects non-subspaces") {
  Subspace V = row_space(Matrix::from_rows({{1, 0}}, 2));
  Subspace W = row_space(Matrix::from_rows({{0, 1}}, 2));
  REQUIRE_THROWS_AS(quotient_basis(V, W), Error);
}

TEST_CASE("inverse") {
  Matrix A = Matrix::from_rows({{1, 1}, {0, 1}}, 5);
  auto inv = inverse(A);
  REQUIRE(inv.has_value());
  REQUIRE(*inv * A == Matrix::identity(2, 5));
  REQUIRE(!inverse(Matrix(2, 2, 5)).has_value());
}

TEST_CASE("modulus validation") {
  REQUIRE_THROWS_AS(Matrix(1, 1, 4), Error);
  REQUIRE_THROWS_AS(Matrix(1, 1, 1), Error);
  Matrix a(1, 1, 2), b(1, 1, 3);
  REQUIRE_THROWS_AS(a * b, Error);
}
