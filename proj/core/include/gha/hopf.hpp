#pragma once

// Independent ground truth for class-2 algebras L = F/R: a Hall-basis model of
// the free nilpotent class-3 algebra F_{d,3}, and from it the Hopf formula
// M(L) = (R cap F^2)/[R,F], the exterior square F^2/[R,F], ker(beta), the
// exterior center and the cover F/[R,F].
//
// For a class-2 target F^3 lies in R, so [R,F] = [rel2, F] + F^4 and the
// truncation at class 3 loses nothing.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gha/exactla.hpp"
#include "gha/liealg.hpp"
#include "gha/multiplier.hpp"

namespace gha {

/// Basic commutators of length <= 3 on generators x_0 < ... < x_{d-1}:
/// x_i; [x_i, x_j] with i < j; [[x_i, x_j], x_k] with i < j and k >= i.
/// Full coordinates are ordered grade 1, then grade 2, then grade 3, each
/// lexicographically in its indices.
class HallBasis {
 public:
  explicit HallBasis(std::size_t d);

  std::size_t generators() const { return d_; }
  std::size_t grade2_dim() const { return wedge_dim(d_); }
  std::size_t grade3_dim() const { return triples_.size(); }
  std::size_t size() const { return d_ + grade2_dim() + grade3_dim(); }

  std::size_t grade2_offset() const { return d_; }
  std::size_t grade3_offset() const { return d_ + grade2_dim(); }

  std::size_t gen(std::size_t i) const { return i; }
  std::size_t pair(std::size_t i, std::size_t j) const { return d_ + wedge_index(d_, i, j); }
  // Precondition: i < j, k >= i.
  std::size_t triple(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t grade(std::size_t index) const;
  std::string label(std::size_t index) const;

  // Bracket of two basis elements in full coordinates; zero past grade 3.
  SparseVector bracket(std::size_t a, std::size_t b) const;

 private:
  // [[x_i, x_j], x_k] for i < j and any k, rewritten into basic commutators.
  SparseVector rewrite(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t d_;
  std::vector<std::array<std::size_t, 3>> triples_;
  std::vector<std::ptrdiff_t> triple_index_;  // d^3 table, -1 when not basic
};

SparseVector free_bracket(const HallBasis& h, const SparseVector& u, const SparseVector& v);
Vector free_bracket(const HallBasis& h, const Vector& u, const Vector& v);
LieAlgebra free_nilpotent_algebra(const HallBasis& h);

struct FreePresentation {
  HallBasis hall{0};
  Subspace rel2;          // in grade-2 coordinates
  Subspace rel2_bracket;  // [rel2, F], in grade-3 coordinates
  LieAlgebra target;      // generators-first basis
  Matrix basis;           // target basis vectors in the input's coordinates
  Class2Data data;        // of target
  // Grade-2 lift of each derived basis vector of target.
  std::vector<SparseVector> derived_lifts;
};

// Throws ClassTooHigh above class 2.
FreePresentation presentation_from_class2(const LieAlgebra& a);

// dim rel2 + (d^3 - d)/3 - dim [rel2, F]
std::size_t hopf_multiplier_dim(const FreePresentation& p);
// C(d,2) + (d^3 - d)/3 - dim [rel2, F]
std::size_t exterior_square_oracle(const FreePresentation& p);

// Kernel of y (x) g_k |-> [lift(y), x_k] + [rel2, F], in the multiplier
// module's coordinates for target.
Subspace ker_beta(const FreePresentation& p);

// {x in L : [lift(x), F] in [R, F]}, as a subspace of target. Zero iff the
// target is capable.
Subspace exterior_center(const FreePresentation& p);

struct Cover {
  LieAlgebra algebra;     // F_{d,3}/[rel2, F]; generators first
  Subspace central_ideal;  // B = R/[R, F]
};

Cover cover_construct(const FreePresentation& p);

/// The central extension built directly from the generator/relation table of
/// a class-2 algebra: basis x_i, y_s, e_ij and a basis of (L^2 (x) L/L^2)/K,
/// with [x_i, x_j] = sum c_ij^s y_s + e_ij and [y_s, x_i] = y_s (x) x_i + K.
struct ExtensionWitness {
  std::size_t dim = 0;
  bool jacobi_ok = false;
  std::size_t multiplier = 0;  // dim(M* cap (L*)^2)
  std::size_t cube_dim = 0;    // dim (L*)^3
  std::size_t s = 0;           // multiplier - cube_dim
};

ExtensionWitness extension_witness(const LieAlgebra& a);

struct CoverReport {
  std::size_t nilpotency_class = 0;
  bool class_three = false;
  bool center_in_derived = false;
  bool dim_matches = false;
  bool quotient_matches = false;
  bool cube_in_ideal = false;
  std::size_t cube_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t s = 0;       // dim B - dim cover^3
  std::size_t defect = 0;  // C(n,2) - dim L^2
  bool branch_ok = false;  // cover^3 in B and s <= defect
  ExtensionWitness witness;
  bool witness_agrees = false;

  // Everything except the class, which is 2 rather than 3 for targets whose
  // multiplier is all of degree 2 (abelian ones, for instance).
  bool consistent() const {
    return center_in_derived && dim_matches && quotient_matches && branch_ok && witness_agrees;
  }
  bool ok() const { return class_three && consistent(); }
};

// The first dim L/L^2 basis vectors of cover must lift the generators of a
// (after generators_first). Throws PreconditionError unless B is central and
// inside cover^2.
CoverReport verify_cover(const LieAlgebra& a, const LieAlgebra& cover, const Subspace& B);

}  // namespace gha
