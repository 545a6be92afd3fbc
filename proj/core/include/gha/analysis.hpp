#pragma once

// Everything computed about one class-2 algebra, joined with the closed-form
// predictions for its family and, optionally, the Hopf-formula cross-check.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gha/closed_forms.hpp"
#include "gha/document.hpp"
#include "gha/multiplier.hpp"

namespace gha {

// L = H + A(t) with H generalized Heisenberg on d generators of rank
// d(d-1)/2 - defect.
struct FamilyParams {
  std::size_t d = 0;
  std::size_t t = 0;
  std::size_t defect = 0;
  Variant variant = Variant::generic;
};

// t = dim Z(L) - dim L^2, d = dim L/L^2 - t. nullopt unless L has class
// exactly 2 and (d, defect) lies in the range of the closed forms.
std::optional<FamilyParams> detect_family(const LieAlgebra& a);

// Defect 3 only: generic when the psi2 rank of H reaches C(d,3).
Variant realized_variant(const Dimensions& dims, std::size_t d, std::size_t t);

enum class Status { match, expected_mismatch, unexpected_mismatch };

std::string_view to_string(Status s);

struct Comparison {
  std::string formula;
  Quantity quantity;
  Scalar predicted;
  std::size_t computed = 0;
  Status status = Status::match;
};

std::vector<Comparison> compare(const Dimensions& dims, const FamilyParams& family, bool include_printed_j2 = true);

struct OracleComparison {
  std::size_t multiplier = 0;
  std::size_t hopf_multiplier = 0;
  std::size_t wedge = 0;
  std::size_t exterior_oracle = 0;
  std::size_t k_dim = 0;
  std::size_t ker_beta_dim = 0;
  bool ker_beta_equals_k = false;
  std::size_t exterior_center_dim = 0;

  bool agrees() const { return multiplier == hopf_multiplier && wedge == exterior_oracle && ker_beta_equals_k; }
};

// Throws ClassTooHigh above class 2.
OracleComparison oracle_compare(const LieAlgebra& a);

struct AnalysisOptions {
  bool oracle = false;
  bool capability = true;
  bool include_printed_j2 = true;
  // Overrides detect_family (the variant is always taken from the realized
  // psi2 rank).
  std::optional<FamilyParams> family;
  CapabilityOptions capability_options;
};

struct Analysis {
  std::size_t dim = 0;
  std::size_t nilpotency_class = 0;
  std::size_t center_dim = 0;
  bool generalized_heisenberg = false;
  Dimensions dims;
  std::optional<FamilyParams> family;
  std::vector<Comparison> comparisons;
  std::optional<CapabilityReport> capability;
  std::optional<OracleComparison> oracle;

  std::size_t unexpected_mismatches() const;
  bool ok() const { return unexpected_mismatches() == 0 && (!oracle || oracle->agrees()); }
};

// Throws ClassTooHigh unless the algebra is nilpotent of class <= 2.
Analysis analyze(const LieAlgebra& a, const AnalysisOptions& options = {});

Json to_json(const Dimensions& d);
Json to_json(const FamilyParams& f);
Json to_json(const Comparison& c);
Json to_json(const OracleComparison& o);
Json to_json(const CapabilityReport& c);
Json to_json(const Analysis& a);

}  // namespace gha
