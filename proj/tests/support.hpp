#pragma once

#include <cstdint>
#include <random>

#include "gha/exactla.hpp"
#include "gha/liealg.hpp"

namespace gha::test {

inline Scalar small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 9) - 4;
  const unsigned long den = rng() % 3 + 1;
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Entries zero with probability ~1/2, otherwise small rationals.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<Vector> dense(rows, Vector(cols));
  for (auto& row : dense) {
    for (auto& x : row) {
      if (rng() % 2) x = small_rational(rng);
    }
  }
  return Matrix::from_dense(cols, dense);
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

// F_{d,2}/S for a random S of random codimension, plus a random abelian
// summand, in a random basis: a class-2 algebra with no special shape.
inline LieAlgebra random_class2(std::mt19937_64& rng, std::size_t d) {
  const std::size_t w = wedge_dim(d);
  const Subspace s = random_relation_subspace(d, rng() % (w + 1), rng);
  LieAlgebra a = class2_quotient(d, s);
  if (rng() % 2) a = direct_sum(a, abelian(1 + rng() % 2));
  return change_basis(a, random_invertible(rng, a.dim()));
}

}  // namespace gha::test
