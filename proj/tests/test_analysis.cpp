#include <doctest.h>

#include <cstdlib>

#include "gha/analysis.hpp"
#include "gha/errors.hpp"
#include "gha/sweep.hpp"

using namespace gha;

TEST_CASE("family detection") {
  const auto g = detect_family(canonical_fixture(4, 1).algebra);
  REQUIRE(g);
  CHECK(g->d == 4);
  CHECK(g->t == 0);
  CHECK(g->defect == 1);
  const auto s = detect_family(with_abelian(canonical_fixture(5, 2), 2).algebra);
  REQUIRE(s);
  CHECK(s->d == 5);
  CHECK(s->t == 2);
  CHECK(s->defect == 2);
  CHECK_FALSE(detect_family(abelian(4)));
  CHECK_FALSE(detect_family(heisenberg(1)));
  CHECK_FALSE(detect_family(canonical_fixture(3, 0).algebra));
}

TEST_CASE("analysis of GH(3,2)") {
  AnalysisOptions options;
  options.oracle = true;
  const Analysis a = analyze(canonical_fixture(3, 1).algebra, options);
  CHECK(a.dims.multiplier == 6);
  CHECK(a.dims.wedge == 8);
  CHECK(a.dims.tensor == 14);
  CHECK(a.dims.j2 == 12);
  REQUIRE(a.capability);
  CHECK(a.capability->capable);
  REQUIRE(a.oracle);
  CHECK(a.oracle->agrees());
  CHECK(a.ok());
  std::size_t expected = 0;
  for (const auto& c : a.comparisons) {
    if (c.formula == "gh.j2.defect1") {
      CHECK(c.predicted == 22);
      CHECK(c.status == Status::expected_mismatch);
    }
    expected += c.status == Status::expected_mismatch;
  }
  CHECK(expected == 3);
  const Json j = to_json(a);
  CHECK(j["dims"]["m_L"] == 6);
  CHECK(j["ok"] == true);
}

TEST_CASE("analysis of other inputs") {
  const Analysis ab = analyze(abelian(3));
  CHECK(ab.dims.multiplier == 3);
  CHECK(ab.dims.tensor == 9);
  CHECK(ab.comparisons.empty());
  const Analysis tri = analyze(canonical_fixture(4, 3, Variant::deficient).algebra);
  CHECK(tri.dims.psi2_rank == 3);
  CHECK(tri.dims.multiplier == 12);
  REQUIRE(tri.family);
  CHECK(tri.family->variant == Variant::deficient);
  CHECK(tri.ok());
  BracketTable t;
  t[{0, 1}] = SparseVector::unit(2);
  t[{0, 2}] = SparseVector::unit(3);
  CHECK_THROWS_AS(analyze(LieAlgebra(4, {}, t)), ClassTooHigh);
}

TEST_CASE("a wrong closed form would be reported as unexpected") {
  Dimensions dims = compute_dimensions(canonical_fixture(4, 1).algebra);
  dims.multiplier += 1;
  bool flagged = false;
  for (const auto& c : compare(dims, {4, 0, 1, Variant::generic})) {
    if (c.formula == "gh.multiplier.defect1") flagged = c.status == Status::unexpected_mismatch;
  }
  CHECK(flagged);
}

TEST_CASE("sweeps") {
  SweepOptions o;
  o.d_min = 3;
  o.d_max = 4;
  o.defects = {1};
  o.t_max = 0;
  o.seeds = 2;
  const SweepReport r = run_sweep(o);
  CHECK(r.rows.size() == 6);
  CHECK(r.ok());
  for (const auto& row : r.rows) {
    for (const auto& c : row.comparisons) {
      if (c.formula == "gh.multiplier.defect1") CHECK((c.computed == 6 || c.computed == 17));
    }
  }

  SweepOptions one = o;
  one.d_max = 3;
  one.t_min = one.t_max = 1;
  one.seeds = 0;
  const SweepReport s = run_sweep(one);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].dims.multiplier == 9);

  SweepOptions bad = o;
  bad.d_min = 2;
  CHECK_THROWS_AS(run_sweep(bad), PreconditionError);
  bad = o;
  bad.max_cases = 3;
  CHECK_THROWS_AS(run_sweep(bad), PreconditionError);
  bad = o;
  bad.defects = {4};
  CHECK_THROWS_AS(run_sweep(bad), PreconditionError);
}

TEST_CASE("sweep output does not depend on the worker count") {
  SweepOptions o;
  o.d_max = 5;
  o.seeds = 2;
  o.threads = 1;
  const std::string serial = to_json(run_sweep(o)).dump();
  o.threads = 4;
  CHECK(to_json(run_sweep(o)).dump() == serial);
}

TEST_CASE("excluding printed J2") {
  SweepOptions o;
  o.d_max = 4;
  o.seeds = 1;
  o.include_printed_j2 = false;
  const SweepReport r = run_sweep(o);
  for (const auto& row : r.rows) {
    for (const auto& c : row.comparisons) CHECK(c.quantity != Quantity::j2);
  }
  for (const auto& f : r.summary.unobserved_expected) CHECK(f.find(".j2.") == std::string::npos);
}

TEST_CASE("worker count") {
  CHECK(worker_count(3) == 3);
  CHECK(worker_count() >= 1);
}
