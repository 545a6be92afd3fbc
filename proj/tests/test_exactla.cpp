#include <doctest.h>

#include <random>

#include "gha/errors.hpp"
#include "gha/exactla.hpp"
#include "support.hpp"

using namespace gha;

namespace {

Matrix dense(std::size_t cols, std::vector<Vector> rows) { return Matrix::from_dense(cols, rows); }

SparseVector sv(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return SparseVector::from_dense(v);
}

Subspace span_of(std::size_t n, std::vector<SparseVector> vs) { return Subspace::span(n, vs); }

}  // namespace

TEST_CASE("scalars are canonical and exact") {
  CHECK(to_string(Scalar(6, 4)) == "3/2");
  CHECK(to_string(Scalar(-3)) == "-3");
  CHECK(parse_scalar("-7/3") == Scalar(-7, 3));
  CHECK(parse_scalar("0") == 0);
  for (const char* bad : {"2/4", "3/1", "+1", "-0", "1/0", "1/-2", "", "x", "1.5", "01"}) {
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
  }
  const Scalar a(1, 3), b(2, 7);
  CHECK((a + b) - b == a);
  CHECK(Scalar(1, 3) * 3 == 1);
}

TEST_CASE("rref examples") {
  SUBCASE("zero") {
    const auto r = rref(Matrix(3, 3));
    CHECK(r.rank == 0);
    CHECK(r.reduced == Matrix(3, 3));
  }
  SUBCASE("identity") {
    const auto r = rref(Matrix::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.reduced == Matrix::identity(2));
  }
  SUBCASE("dependent rows") {
    const auto r = rref(dense(2, {{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == dense(2, {{1, 2}, {0, 0}}));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(2)).dim() == 0);
  CHECK(kernel_basis(Matrix(2, 3)) == Subspace::full(3));
  const Subspace k = kernel_basis(dense(3, {{1, 1, 0}}));
  CHECK(k.dim() == 2);
  CHECK(k.contains(Vector{1, -1, 0}));
  CHECK(k.contains(Vector{0, 0, 1}));
  CHECK_FALSE(k.contains(Vector{1, 0, 0}));
}

TEST_CASE("subspace sum and intersection examples") {
  const Subspace e1 = span_of(3, {sv({1, 0, 0})});
  const Subspace zero(3);
  CHECK(subspace_sum(e1, zero) == e1);
  CHECK(subspace_sum(span_of(2, {sv({1, 0})}), span_of(2, {sv({0, 1})})) == Subspace::full(2));
  CHECK(subspace_sum(span_of(3, {sv({1, 1, 0})}), span_of(3, {sv({1, -1, 0})})) ==
        span_of(3, {sv({1, 0, 0}), sv({0, 1, 0})}));

  CHECK(subspace_intersect(e1, Subspace::full(3)) == e1);
  CHECK(subspace_intersect(e1, span_of(3, {sv({0, 1, 0})})).is_zero());
  const Subspace i = subspace_intersect(span_of(3, {sv({1, 0, 0}), sv({0, 1, 0})}),
                                        span_of(3, {sv({0, 1, 0}), sv({0, 0, 1})}));
  CHECK(i == span_of(3, {sv({0, 1, 0})}));

  CHECK_THROWS_AS(subspace_sum(e1, Subspace(2)), DimensionMismatch);
  CHECK_THROWS_AS(subspace_intersect(e1, Subspace(2)), DimensionMismatch);
}

TEST_CASE("contains examples") {
  CHECK(contains(Subspace(2), Vector{0, 0}));
  CHECK_FALSE(contains(span_of(2, {sv({0, 1})}), Vector{1, 0}));
  CHECK(contains(span_of(2, {sv({2, 2})}), Vector{1, 1}));
  CHECK_THROWS_AS(contains(Subspace(2), Vector{0, 0, 0}), DimensionMismatch);
}

TEST_CASE("canonical form: equal spans give equal bases") {
  const Subspace a = span_of(3, {sv({1, 2, 3}), sv({0, 1, 1})});
  const Subspace b = span_of(3, {sv({1, 3, 4}), sv({2, 5, 7})});
  CHECK(a == b);
  for (std::size_t r = 0; r < a.dim(); ++r) CHECK(a.basis().at(r, a.pivots()[r]) == 1);
}

TEST_CASE("inverse and solve") {
  const Matrix m = dense(2, {{2, 1}, {1, 1}});
  CHECK(multiply(m, inverse(m)) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(dense(2, {{1, 2}, {2, 4}})), PreconditionError);
  const auto x = solve(m, Vector{3, 2});
  REQUIRE(x);
  CHECK(apply(m, *x) == Vector{3, 2});
  CHECK_FALSE(solve(dense(2, {{1, 2}, {2, 4}}), Vector{1, 0}));
}

TEST_CASE("random matrices: rref idempotence, rank symmetry, rank-nullity") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 8;
    const std::size_t cols = 1 + rng() % 8;
    const Matrix m = test::random_matrix(rng, rows, cols);
    const RrefResult r = rref(m);
    const RrefResult again = rref(r.reduced);
    CHECK(again.reduced == r.reduced);
    CHECK(again.rank == r.rank);
    CHECK(rank(m.transpose()) == r.rank);
    const Subspace k = kernel_basis(m);
    CHECK(k.dim() + r.rank == cols);
    for (std::size_t i = 0; i < k.dim(); ++i) {
      CHECK(multiply(m, Matrix::from_rows(cols, {k.basis().row(i)}).transpose()) == Matrix(rows, 1));
    }
    CHECK(Subspace::row_space(m) == Subspace::row_space(r.reduced));
  }
}

TEST_CASE("scaling by a nonzero rational keeps the pivot structure") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = test::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    Scalar c;
    do c = test::small_rational(rng); while (c == 0);
    std::vector<SparseVector> scaled;
    for (std::size_t r = 0; r < m.rows(); ++r) scaled.push_back(c * m.row(r));
    const RrefResult a = rref(m);
    const RrefResult b = rref(Matrix::from_rows(m.cols(), scaled));
    CHECK(a.pivots == b.pivots);
    CHECK(a.reduced == b.reduced);
  }
}

TEST_CASE("dimension formula and modular law on random subspaces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const Subspace a = Subspace::row_space(test::random_matrix(rng, rng() % (n + 1), n));
    const Subspace b = Subspace::row_space(test::random_matrix(rng, rng() % (n + 1), n));
    const Subspace extra = Subspace::row_space(test::random_matrix(rng, rng() % (n + 1), n));
    const Subspace c = subspace_sum(a, extra);  // a is contained in c
    CHECK(a.dim() + b.dim() == subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
    CHECK(subspace_intersect(subspace_sum(a, b), c) == subspace_sum(a, subspace_intersect(b, c)));
    CHECK(subspace_sum(a, b).contains(a));
    CHECK(a.contains(subspace_intersect(a, b)));
  }
}
