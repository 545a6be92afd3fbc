#include "gha/multiplier.hpp"

#include <random>

#include "gha/errors.hpp"
#include "gha/hopf.hpp"

namespace gha {

SparseVector Class2Data::pair(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return pair_brackets[wedge_index(n, i, j)];
  return Scalar(-1) * pair_brackets[wedge_index(n, j, i)];
}

SparseVector Class2Data::tensor(const SparseVector& y, std::size_t k) const {
  SparseVector out;
  for (const auto& e : y.entries()) out.push_back(tensor_index(e.index, k), e.value);
  return out;
}

Class2Data class2_data(const LieAlgebra& a) {
  Class2Data data;
  data.dim = a.dim();
  data.derived = derived_subalgebra(a);
  if (!bracket_with_algebra(a, data.derived).is_zero()) throw ClassTooHigh("algebra has nilpotency class above 2");
  data.r = data.derived.dim();
  data.n = a.dim() - data.r;
  data.generator_coords = data.derived.free_columns();
  data.pair_brackets.reserve(wedge_dim(data.n));
  for (std::size_t i = 0; i < data.n; ++i) {
    for (std::size_t j = i + 1; j < data.n; ++j) {
      const SparseVector v = a.bracket(data.generator_coords[i], data.generator_coords[j]);
      data.pair_brackets.push_back(SparseVector::from_dense(data.derived.coordinates(v)));
    }
  }
  return data;
}

namespace {

SparseVector cyclic_term(const Class2Data& c, std::size_t i, std::size_t j, std::size_t k) {
  SparseVector v = c.tensor(c.pair(i, j), k);
  v.add_scaled(c.tensor(c.pair(k, i), j), 1);
  v.add_scaled(c.tensor(c.pair(j, k), i), 1);
  return v;
}

}  // namespace

Psi2Data psi2_image(const Class2Data& c) {
  EchelonBuilder builder(c.tensor_dim());
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t j = i + 1; j < c.n; ++j) {
      for (std::size_t k = j + 1; k < c.n; ++k) builder.insert(cyclic_term(c, i, j, k));
    }
  }
  return {c.n * c.n * c.n, c.tensor_dim(), std::move(builder).finish()};
}

Psi2Data psi2_image(const LieAlgebra& a) { return psi2_image(class2_data(a)); }

Subspace k_subspace(const LieAlgebra& a) {
  const Class2Data c = class2_data(a);
  EchelonBuilder builder(c.tensor_dim());
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t j = 0; j < c.n; ++j) {
      for (std::size_t k = 0; k < c.n; ++k) builder.insert(cyclic_term(c, i, j, k));
    }
  }
  return std::move(builder).finish();
}

std::size_t square_dim(std::size_t n) { return n * (n + 1) / 2; }

Dimensions compute_dimensions(const LieAlgebra& a) {
  const Class2Data c = class2_data(a);
  Dimensions d;
  d.n = c.n;
  d.r = c.r;
  d.psi2_rank = psi2_image(c).rank();
  d.multiplier = wedge_dim(c.n) - c.r + (c.tensor_dim() - d.psi2_rank);
  d.wedge = d.multiplier + c.r;
  d.tensor = d.wedge + square_dim(c.n);
  d.j2 = d.tensor - c.r;
  return d;
}

std::size_t multiplier_dim(const LieAlgebra& a) { return compute_dimensions(a).multiplier; }
std::size_t exterior_square_dim(const LieAlgebra& a) { return compute_dimensions(a).wedge; }
std::size_t tensor_square_dim(const LieAlgebra& a) { return compute_dimensions(a).tensor; }
std::size_t j2_dim(const LieAlgebra& a) { return compute_dimensions(a).j2; }

std::string_view to_string(DefectClass c) {
  switch (c) {
    case DefectClass::full_rank:
      return "full-rank";
    case DefectClass::defect1:
      return "defect-1";
    case DefectClass::defect2:
      return "defect-2";
    default:
      return "other";
  }
}

DefectClass classify_by_multiplier(const LieAlgebra& a) {
  if (!is_generalized_heisenberg(a)) throw PreconditionError("not a generalized Heisenberg algebra");
  const Dimensions dims = compute_dimensions(a);
  const std::size_t d = dims.n;
  if (d < 3) throw PreconditionError("classification needs d >= 3");
  const std::size_t full = d * (d - 1) * (d + 1) / 3;
  if (dims.multiplier == full) return DefectClass::full_rank;
  if (dims.multiplier == full - (d - 1)) return DefectClass::defect1;
  if (dims.multiplier == full - 2 * (d - 1)) return DefectClass::defect2;
  return DefectClass::other;
}

CapabilityReport capability_by_quotients(const LieAlgebra& a, const CapabilityOptions& options) {
  CapabilityReport report;
  report.multiplier = compute_dimensions(a).multiplier;

  const Subspace z = center(a);
  std::vector<SparseVector> lines;
  for (std::size_t r = 0; r < z.dim(); ++r) lines.push_back(z.basis().row(r));
  if (!z.is_zero()) {
    std::mt19937_64 rng(options.seed);
    while (lines.size() < z.dim() + options.random_lines) {
      SparseVector v;
      for (std::size_t r = 0; r < z.dim(); ++r) v.add_scaled(z.basis().row(r), static_cast<long>(rng() % 7) - 3);
      if (!v.empty()) lines.push_back(std::move(v));
    }
  }

  report.all_quotients_drop = true;
  for (auto& line : lines) {
    const Quotient q = quotient(a, Subspace::span(a.dim(), std::span<const SparseVector>(&line, 1)));
    QuotientEvidence ev;
    ev.quotient_multiplier = compute_dimensions(q.algebra).multiplier;
    ev.strict_drop = ev.quotient_multiplier < report.multiplier;
    ev.line = std::move(line);
    report.all_quotients_drop = report.all_quotients_drop && ev.strict_drop;
    report.quotients.push_back(std::move(ev));
  }

  report.exterior_center_dim = exterior_center(presentation_from_class2(a)).dim();
  report.capable = report.exterior_center_dim == 0;
  return report;
}

}  // namespace gha
