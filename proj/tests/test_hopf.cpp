#include <doctest.h>

#include <random>

#include "gha/errors.hpp"
#include "gha/fixtures.hpp"
#include "gha/hopf.hpp"
#include "support.hpp"

using namespace gha;

namespace {

LieAlgebra canonical(std::size_t d, std::size_t defect, Variant v = Variant::generic) {
  return canonical_fixture(d, defect, v).algebra;
}

}  // namespace

TEST_CASE("Hall basis sizes") {
  const std::size_t expected[][4] = {{2, 1, 2, 5}, {3, 3, 8, 14}, {4, 6, 20, 30}};
  for (const auto& e : expected) {
    const HallBasis h(e[0]);
    CHECK(h.generators() == e[0]);
    CHECK(h.grade2_dim() == e[1]);
    CHECK(h.grade3_dim() == e[2]);
    CHECK(h.size() == e[3]);
  }
  for (std::size_t d = 1; d <= 6; ++d) CHECK(HallBasis(d).grade3_dim() == (d * d * d - d) / 3);
}

TEST_CASE("Hall labels and rewriting") {
  const HallBasis h(3);
  CHECK(h.label(0) == "x1");
  CHECK(h.label(h.pair(0, 2)) == "[x1,x3]");
  CHECK(h.label(h.triple(0, 1, 2)) == "[[x1,x2],x3]");
  CHECK(h.bracket(0, 0).empty());
  CHECK(h.bracket(h.pair(0, 1), 2) == SparseVector::unit(h.triple(0, 1, 2)));
  // [[x2,x3],x1] = [[x1,x3],x2] - [[x1,x2],x3]
  const SparseVector expected = SparseVector::unit(h.triple(0, 2, 1)) - SparseVector::unit(h.triple(0, 1, 2));
  CHECK(h.bracket(h.pair(1, 2), 0) == expected);
  CHECK(h.bracket(h.triple(0, 1, 2), 0).empty());
  CHECK_THROWS_AS(h.triple(1, 2, 0), PreconditionError);
}

TEST_CASE("free bracket: antisymmetry, grading and Jacobi on all basis elements, d <= 6") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const HallBasis h(d);
    const std::size_t n = h.size();
    bool antisymmetric = true, graded = true, jacobi = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const SparseVector ab = h.bracket(a, b);
        if (!(ab + h.bracket(b, a)).empty()) antisymmetric = false;
        const std::size_t g = h.grade(a) + h.grade(b);
        for (const auto& e : ab.entries()) {
          if (g > 3 || h.grade(e.index) != g) graded = false;
        }
        if (g > 3 && !ab.empty()) graded = false;
      }
    }
    const auto ua = [](std::size_t i) { return SparseVector::unit(i); };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          if (h.grade(a) + h.grade(b) + h.grade(c) > 3) continue;
          SparseVector sum = free_bracket(h, free_bracket(h, ua(a), ua(b)), ua(c));
          sum.add_scaled(free_bracket(h, free_bracket(h, ua(b), ua(c)), ua(a)), 1);
          sum.add_scaled(free_bracket(h, free_bracket(h, ua(c), ua(a)), ua(b)), 1);
          if (!sum.empty()) jacobi = false;
        }
      }
    }
    CAPTURE(d);
    CHECK(antisymmetric);
    CHECK(graded);
    CHECK(jacobi);
  }
}

TEST_CASE("free bracket on random vectors is bilinear and satisfies Jacobi") {
  std::mt19937_64 rng(23);
  const HallBasis h(4);
  auto random_vector = [&] {
    Vector v(h.size());
    for (auto& x : v) {
      if (rng() % 3 == 0) x = test::small_rational(rng);
    }
    return v;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Vector u = random_vector(), v = random_vector(), w = random_vector();
    Vector s(h.size());
    const Vector a = free_bracket(h, free_bracket(h, u, v), w);
    const Vector b = free_bracket(h, free_bracket(h, v, w), u);
    const Vector c = free_bracket(h, free_bracket(h, w, u), v);
    for (std::size_t i = 0; i < h.size(); ++i) s[i] = a[i] + b[i] + c[i];
    CHECK(s == Vector(h.size()));
    const Vector uv = free_bracket(h, u, v), vu = free_bracket(h, v, u);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(uv[i] == -vu[i]);
  }
  CHECK_THROWS_AS(free_bracket(h, Vector(3), Vector(h.size())), DimensionMismatch);
}

TEST_CASE("free nilpotent algebra") {
  const LieAlgebra f = free_nilpotent_algebra(HallBasis(3));
  CHECK(f.dim() == 14);
  CHECK(jacobi_check(f).empty());
  CHECK(nilpotency_class(f) == 3);
}

TEST_CASE("presentations") {
  CHECK(presentation_from_class2(canonical(3, 0)).rel2.is_zero());
  CHECK(presentation_from_class2(canonical(3, 1)).rel2.dim() == 1);
  const FreePresentation h1 = presentation_from_class2(heisenberg(1));
  CHECK(h1.rel2.is_zero());
  CHECK(h1.hall.grade2_dim() == 1);
  BracketTable t;
  t[{0, 1}] = SparseVector::unit(2);
  t[{0, 2}] = SparseVector::unit(3);
  CHECK_THROWS_AS(presentation_from_class2(LieAlgebra(4, {}, t)), ClassTooHigh);
}

TEST_CASE("Hopf multiplier and exterior square") {
  const FreePresentation f = presentation_from_class2(canonical(3, 0));
  CHECK(hopf_multiplier_dim(f) == 8);
  const FreePresentation g = presentation_from_class2(canonical(3, 1));
  CHECK(g.rel2_bracket.dim() == 3);
  CHECK(hopf_multiplier_dim(g) == 6);
  CHECK(exterior_square_oracle(g) == 8);
  const FreePresentation a = presentation_from_class2(abelian(3));
  CHECK(a.rel2.dim() == 3);
  CHECK(hopf_multiplier_dim(a) == 3);
}

TEST_CASE("ker beta") {
  const LieAlgebra g = canonical(3, 1);
  const Subspace kb = ker_beta(presentation_from_class2(g));
  CHECK(kb.dim() == 1);
  CHECK(kb == k_subspace(g));
  CHECK(ker_beta(presentation_from_class2(canonical(3, 0))).dim() == 1);
}

TEST_CASE("exterior center") {
  CHECK(exterior_center(presentation_from_class2(canonical(3, 1))).is_zero());
  const LieAlgebra h2 = heisenberg(2);
  const Subspace z = exterior_center(presentation_from_class2(h2));
  CHECK(z.contains(center(h2)));
  CHECK_FALSE(z.is_zero());
  for (std::size_t n = 2; n <= 4; ++n) CHECK(exterior_center(presentation_from_class2(abelian(n))).is_zero());
  CHECK_FALSE(exterior_center(presentation_from_class2(abelian(1))).is_zero());
}

TEST_CASE("covers") {
  SUBCASE("GH(3,2)") {
    const LieAlgebra g = canonical(3, 1);
    const Cover c = cover_construct(presentation_from_class2(g));
    CHECK(c.algebra.dim() == 11);
    CHECK(nilpotency_class(c.algebra) == 3);
    const CoverReport r = verify_cover(g, c.algebra, c.central_ideal);
    CHECK(r.ok());
    CHECK(r.s == 1);
    CHECK(r.cube_dim == 5);
    CHECK(r.witness.jacobi_ok);
    CHECK(r.witness.s == 1);
  }
  SUBCASE("free class-2 algebra") {
    const Cover c = cover_construct(presentation_from_class2(canonical(3, 0)));
    CHECK(c.algebra == free_nilpotent_algebra(HallBasis(3)));
    const CoverReport r = verify_cover(canonical(3, 0), c.algebra, c.central_ideal);
    CHECK(r.ok());
    CHECK(r.s == 0);
    CHECK(c.central_ideal == lower_central_series(c.algebra)[2]);
  }
  SUBCASE("GH(4,4) realizes one of the allowed branches") {
    const LieAlgebra g = canonical(4, 2);
    const Cover c = cover_construct(presentation_from_class2(g));
    const CoverReport r = verify_cover(g, c.algebra, c.central_ideal);
    CHECK(r.ok());
    CHECK(r.s <= 2);
  }
  SUBCASE("heisenberg(1)") {
    const Cover c = cover_construct(presentation_from_class2(heisenberg(1)));
    CHECK(c.algebra.dim() == 5);
  }
  SUBCASE("abelian targets give a consistent class-2 cover") {
    const Cover c = cover_construct(presentation_from_class2(abelian(3)));
    const CoverReport r = verify_cover(abelian(3), c.algebra, c.central_ideal);
    CHECK(r.consistent());
    CHECK_FALSE(r.class_three);
  }
  SUBCASE("preconditions on B") {
    const LieAlgebra g = canonical(3, 1);
    const Cover c = cover_construct(presentation_from_class2(g));
    CHECK_THROWS_AS(verify_cover(g, c.algebra, Subspace::full(c.algebra.dim())), PreconditionError);
    CHECK_THROWS_AS(verify_cover(g, c.algebra, Subspace(3)), DimensionMismatch);
  }
  SUBCASE("a wrong ideal is caught") {
    const LieAlgebra g = canonical(3, 1);
    const Cover c = cover_construct(presentation_from_class2(g));
    const Subspace cube = lower_central_series(c.algebra)[2];
    const CoverReport r = verify_cover(g, c.algebra, cube);
    CHECK_FALSE(r.dim_matches);
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("covers of every fixture") {
  for (const auto& f : standard_fixtures(3, 6)) {
    CAPTURE(f.name);
    const FreePresentation p = presentation_from_class2(f.algebra);
    const Cover c = cover_construct(p);
    CHECK(jacobi_check(c.algebra).empty());
    CHECK(c.algebra.dim() == f.algebra.dim() + hopf_multiplier_dim(p));
    const CoverReport r = verify_cover(f.algebra, c.algebra, c.central_ideal);
    CHECK(r.ok());
    CHECK(r.s <= f.defect);
  }
}

TEST_CASE("extension witness") {
  const ExtensionWitness w = extension_witness(canonical(3, 1));
  CHECK(w.jacobi_ok);
  CHECK(w.multiplier == 6);
  CHECK(w.cube_dim == 5);
  // x_i, y_s, all e_ij, and (L^2 (x) L/L^2)/K
  CHECK(w.dim == 3 + 2 + 3 + (6 - 1));
}

TEST_CASE("oracle agrees with the exact-sequence count on random class-2 algebras") {
  std::mt19937_64 rng(31);
  for (std::size_t d = 3; d <= 5; ++d) {
    for (int trial = 0; trial < 50; ++trial) {
      const LieAlgebra a = test::random_class2(rng, d);
      const Dimensions dims = compute_dimensions(a);
      const FreePresentation p = presentation_from_class2(a);
      CHECK(hopf_multiplier_dim(p) == dims.multiplier);
      CHECK(exterior_square_oracle(p) == dims.wedge);
      CHECK(ker_beta(p) == k_subspace(p.target));
    }
  }
}
