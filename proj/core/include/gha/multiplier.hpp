#pragma once

// Schur multiplier, exterior square, tensor square and J2 of class-2
// nilpotent Lie algebras, computed from the image of the cyclic map
//
//   x (x) y (x) z  |->  [x,y] (x) z + [z,x] (x) y + [y,z] (x) x
//
// into L^2 (x) L/L^2, together with the capability test by central quotients.
//
// Coordinates on L^2 (x) L/L^2 are lexicographic in (derived-basis index s,
// generator index k): position s * n + k, n = dim L/L^2.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gha/exactla.hpp"
#include "gha/liealg.hpp"

namespace gha {

/// The pieces of a class-2 algebra every computation here is phrased in.
struct Class2Data {
  std::size_t dim = 0;
  std::size_t n = 0;  // dim L/L^2
  std::size_t r = 0;  // dim L^2
  // Standard coordinates outside the pivots of L^2; their unit vectors map
  // to a basis of L/L^2.
  std::vector<std::size_t> generator_coords;
  Subspace derived;
  // [g_i, g_j] for i < j in derived-basis coordinates, by wedge_index(n, i, j).
  std::vector<SparseVector> pair_brackets;

  // [g_i, g_j] for any i, j.
  SparseVector pair(std::size_t i, std::size_t j) const;
  std::size_t tensor_index(std::size_t s, std::size_t k) const { return s * n + k; }
  std::size_t tensor_dim() const { return r * n; }
  // y (x) g_k for y in derived-basis coordinates.
  SparseVector tensor(const SparseVector& y, std::size_t k) const;
};

// Throws ClassTooHigh when L^3 != 0.
Class2Data class2_data(const LieAlgebra& a);

struct Psi2Data {
  std::size_t domain_dim = 0;    // n^3
  std::size_t codomain_dim = 0;  // dim L^2 * dim L/L^2
  Subspace image;

  std::size_t rank() const { return image.dim(); }
};

// Image over generator triples i < j < k.
Psi2Data psi2_image(const LieAlgebra& a);
Psi2Data psi2_image(const Class2Data& data);
// The same span taken over every ordered generator triple.
Subspace k_subspace(const LieAlgebra& a);

// C(n,2) - dim L^2 + (dim L^2 * n - dim K)
std::size_t multiplier_dim(const LieAlgebra& a);
std::size_t square_dim(std::size_t n);
std::size_t exterior_square_dim(const LieAlgebra& a);
std::size_t tensor_square_dim(const LieAlgebra& a);
std::size_t j2_dim(const LieAlgebra& a);

struct Dimensions {
  std::size_t n = 0;  // dim L/L^2
  std::size_t r = 0;  // dim L^2
  std::size_t psi2_rank = 0;
  std::size_t multiplier = 0;
  std::size_t wedge = 0;
  std::size_t tensor = 0;
  std::size_t j2 = 0;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

// All of the above from a single psi2 computation.
Dimensions compute_dimensions(const LieAlgebra& a);

enum class DefectClass { full_rank, defect1, defect2, other };

std::string_view to_string(DefectClass c);

// Which of the rank d(d-1)/2 - k families (k = 0, 1, 2) the multiplier
// dimension certifies. Throws PreconditionError for a non-GH algebra or d < 3.
DefectClass classify_by_multiplier(const LieAlgebra& a);

struct QuotientEvidence {
  SparseVector line;  // spans the one-dimensional central ideal
  std::size_t quotient_multiplier = 0;
  bool strict_drop = false;
};

struct CapabilityOptions {
  std::size_t random_lines = 4;
  std::uint64_t seed = 1;
};

struct CapabilityReport {
  bool capable = false;  // exterior center is zero; authoritative
  std::size_t exterior_center_dim = 0;
  std::size_t multiplier = 0;
  std::vector<QuotientEvidence> quotients;
  bool all_quotients_drop = false;
};

// Compares dim M(L) with dim M(L/K) over the coordinate lines of Z(L) plus
// seeded random central lines; the verdict itself comes from the exterior
// center. Throws ClassTooHigh above class 2.
CapabilityReport capability_by_quotients(const LieAlgebra& a, const CapabilityOptions& options = {});

}  // namespace gha
