#pragma once

// Finite-dimensional Lie algebras over Q given by structure constants, plus
// the constructors for the abelian, Heisenberg and generalized Heisenberg
// families.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gha/exactla.hpp"

namespace gha {

// Keys (i, j) with i < j; the value is [b_i, b_j] in the basis.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Keys with i > j are stored negated, zero values dropped. Throws
  // DimensionMismatch for out-of-range indices and PreconditionError for a
  // nonzero [b_i, b_i]. Missing labels are filled with "b<i>".
  LieAlgebra(std::size_t dim, std::vector<std::string> labels, const BracketTable& brackets);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& table() const { return table_; }

  // [b_i, b_j] with antisymmetry applied.
  SparseVector bracket(std::size_t i, std::size_t j) const;
  SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  BracketTable table_;
};

// Dense bilinear extension of the bracket; throws DimensionMismatch on length.
Vector bracket_vectors(const LieAlgebra& a, const Vector& u, const Vector& v);

// Basis triples i < j < k where the cyclic Jacobi sum is nonzero.
std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& a);

Subspace derived_subalgebra(const LieAlgebra& a);
Subspace center(const LieAlgebra& a);
// span [s, L]
Subspace bracket_with_algebra(const LieAlgebra& a, const Subspace& s);

// L, L^2, L^3, ... ending at the zero subspace, or at the first repeated
// term for a non-nilpotent algebra.
std::vector<Subspace> lower_central_series(const LieAlgebra& a);
// nullopt when not nilpotent; 0 for the zero algebra.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& a);

struct Quotient {
  LieAlgebra algebra;
  Subspace ideal;
  // Old coordinates kept as the quotient basis (the free columns of ideal).
  std::vector<std::size_t> kept;

  SparseVector project(const SparseVector& v) const;
};

// Throws NotAnIdeal when [ideal, L] is not contained in ideal.
Quotient quotient(const LieAlgebra& a, const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra abelian(std::size_t n);
// dim 2m+1, [x_{2i-1}, x_{2i}] = z
LieAlgebra heisenberg(std::size_t m);

// Rows of basis are the new basis vectors written in old coordinates.
LieAlgebra change_basis(const LieAlgebra& a, const Matrix& basis);

struct Rebased {
  LieAlgebra algebra;
  Matrix basis;  // new basis vectors in the input's coordinates
};

// True when L^2 is exactly the span of the trailing basis vectors, i.e. the
// leading dim L/L^2 vectors are generators.
bool has_generators_first_basis(const LieAlgebra& a);
// Re-bases onto (complement unit vectors of L^2, RREF basis of L^2); returns
// the input unchanged when the contract already holds.
Rebased generators_first(const LieAlgebra& a);

// Free nilpotent class-2 quotients -----------------------------------------

inline std::size_t wedge_dim(std::size_t d) { return d < 2 ? 0 : d * (d - 1) / 2; }
// Lexicographic position of x_i ^ x_j (0-based, i < j) among the C(d,2) pairs.
std::size_t wedge_index(std::size_t d, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> wedge_pair(std::size_t d, std::size_t index);

// F_{d,2} / S for S a subspace of the wedge coordinates: d generators then
// the pairs that are free columns of S. No center check.
LieAlgebra class2_quotient(std::size_t d, const Subspace& relations);

// Spans of small-integer random vectors until dim == codim.
Subspace random_relation_subspace(std::size_t d, std::size_t codim, std::mt19937_64& rng);

struct GhSpec {
  std::size_t d = 3;
  std::size_t rank = 3;
  std::optional<Subspace> relation_subspace;
  std::optional<std::uint64_t> seed;
};

inline constexpr int kGhRetryBudget = 64;

// Throws PreconditionError for an invalid spec and CenterViolation when
// Z(L) != L^2 (immediately for an explicit S, after kGhRetryBudget draws for
// a seeded one).
LieAlgebra gh_construct(const GhSpec& spec);

bool is_generalized_heisenberg(const LieAlgebra& a);
// dim L - dim L^2
std::size_t minimal_generators(const LieAlgebra& a);

enum class Variant { generic, deficient };

std::string_view to_string(Variant v);

}  // namespace gha
