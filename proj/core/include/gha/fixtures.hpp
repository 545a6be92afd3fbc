#pragma once

// Named generalized Heisenberg instances used by the sweeps and the tests.
// Defect k means rank = d(d-1)/2 - k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gha/liealg.hpp"

namespace gha {

struct Fixture {
  std::string name;
  LieAlgebra algebra;
  std::size_t d = 0;
  std::size_t defect = 0;
  std::size_t t = 0;  // dimension of the abelian summand
  Variant variant = Variant::generic;
  bool generalized_heisenberg = true;
  std::optional<std::uint64_t> seed;
};

// Killed wedges: defect 1 {x1^x2}; defect 2 {x1^x2, x3^x4} (d >= 4) or
// {x1^x2, x1^x3} (d = 3); defect 3 generic {x1^x2, x3^x4, x1^x3}; defect 3
// deficient, the triangle {x1^x2, x2^x3, x1^x3}.
Subspace canonical_relations(std::size_t d, std::size_t defect, Variant variant = Variant::generic);

// d = 3 with defect 2 has no generalized Heisenberg realization; that
// fixture is H(1) + A(1) and carries generalized_heisenberg = false.
Fixture canonical_fixture(std::size_t d, std::size_t defect, Variant variant = Variant::generic);
Fixture seeded_fixture(std::size_t d, std::size_t defect, std::uint64_t seed);
Fixture with_abelian(const Fixture& f, std::size_t t);

// Canonical fixtures for d in [d_min, d_max], defects 0..3 (deficient
// variant included for defect 3), skipping rank < 1.
std::vector<Fixture> standard_fixtures(std::size_t d_min = 3, std::size_t d_max = 6);

}  // namespace gha
