#include "gha/fixtures.hpp"

#include <algorithm>
#include <random>

#include "gha/errors.hpp"

namespace gha {

namespace {

std::string fixture_name(std::size_t d, std::size_t defect, Variant variant) {
  std::string name = "gh-d" + std::to_string(d) + "-k" + std::to_string(defect);
  if (defect == 3) name += variant == Variant::deficient ? "-deficient" : "-generic";
  return name;
}

void check_family(std::size_t d, std::size_t defect) {
  if (d < 3) throw PreconditionError("fixtures need d >= 3");
  if (defect > 3 || defect >= wedge_dim(d)) throw PreconditionError("defect must be 0..3 and leave rank >= 1");
}

}  // namespace

Subspace canonical_relations(std::size_t d, std::size_t defect, Variant variant) {
  check_family(d, defect);
  std::vector<std::pair<std::size_t, std::size_t>> killed;
  switch (defect) {
    case 0:
      break;
    case 1:
      killed = {{0, 1}};
      break;
    case 2:
      killed = d >= 4 ? decltype(killed){{0, 1}, {2, 3}} : decltype(killed){{0, 1}, {0, 2}};
      break;
    default:
      killed = variant == Variant::deficient ? decltype(killed){{0, 1}, {1, 2}, {0, 2}}
                                             : decltype(killed){{0, 1}, {2, 3}, {0, 2}};
  }
  std::vector<SparseVector> vectors;
  for (auto [i, j] : killed) vectors.push_back(SparseVector::unit(wedge_index(d, i, j)));
  return Subspace::span(wedge_dim(d), vectors);
}

Fixture canonical_fixture(std::size_t d, std::size_t defect, Variant variant) {
  check_family(d, defect);
  if (defect != 3) variant = Variant::generic;
  Fixture f;
  f.name = fixture_name(d, defect, variant);
  f.d = d;
  f.defect = defect;
  f.variant = variant;
  const Subspace relations = canonical_relations(d, defect, variant);
  if (d == 3 && defect == 2) {
    f.algebra = class2_quotient(d, relations);
    f.generalized_heisenberg = false;
  } else {
    f.algebra = gh_construct({d, wedge_dim(d) - defect, relations, std::nullopt});
  }
  return f;
}

Fixture seeded_fixture(std::size_t d, std::size_t defect, std::uint64_t seed) {
  check_family(d, defect);
  Fixture f;
  f.name = "gh-d" + std::to_string(d) + "-k" + std::to_string(defect) + "-s" + std::to_string(seed);
  f.d = d;
  f.defect = defect;
  f.seed = seed;
  if (d == 3 && defect == 2) {
    std::mt19937_64 rng(seed);
    f.algebra = class2_quotient(d, random_relation_subspace(d, defect, rng));
    f.generalized_heisenberg = false;
  } else {
    f.algebra = gh_construct({d, wedge_dim(d) - defect, std::nullopt, seed});
  }
  return f;
}

Fixture with_abelian(const Fixture& f, std::size_t t) {
  if (t == 0) return f;
  Fixture out = f;
  out.algebra = direct_sum(f.algebra, abelian(t));
  out.t = f.t + t;
  out.name = f.name + "+a" + std::to_string(out.t);
  return out;
}

std::vector<Fixture> standard_fixtures(std::size_t d_min, std::size_t d_max) {
  std::vector<Fixture> out;
  for (std::size_t d = std::max<std::size_t>(d_min, 3); d <= d_max; ++d) {
    for (std::size_t defect = 0; defect <= 3; ++defect) {
      if (defect >= wedge_dim(d)) continue;
      out.push_back(canonical_fixture(d, defect, Variant::generic));
      if (defect == 3) out.push_back(canonical_fixture(d, defect, Variant::deficient));
    }
  }
  return out;
}

}  // namespace gha
