#include "gha/analysis.hpp"

#include "gha/errors.hpp"
#include "gha/hopf.hpp"

namespace gha {

namespace {

std::size_t choose3(std::size_t d) { return d < 3 ? 0 : d * (d - 1) * (d - 2) / 6; }

bool in_closed_form_range(std::size_t d, std::size_t defect) {
  return d >= 3 && defect >= 1 && defect <= 3 && defect < wedge_dim(d);
}

}  // namespace

std::optional<FamilyParams> detect_family(const LieAlgebra& a) {
  const auto cls = nilpotency_class(a);
  if (!cls || *cls != 2) return std::nullopt;
  const std::size_t r = derived_subalgebra(a).dim();
  const std::size_t z = center(a).dim();
  const std::size_t n = a.dim() - r;
  const std::size_t t = z - r;
  const std::size_t d = n - t;
  if (r > wedge_dim(d)) return std::nullopt;
  const std::size_t defect = wedge_dim(d) - r;
  if (!in_closed_form_range(d, defect)) return std::nullopt;
  return FamilyParams{d, t, defect, Variant::generic};
}

Variant realized_variant(const Dimensions& dims, std::size_t d, std::size_t t) {
  return dims.psi2_rank - dims.r * t == choose3(d) ? Variant::generic : Variant::deficient;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::match:
      return "match";
    case Status::expected_mismatch:
      return "expected-mismatch";
    default:
      return "unexpected-mismatch";
  }
}

std::vector<Comparison> compare(const Dimensions& dims, const FamilyParams& family, bool include_printed_j2) {
  std::vector<Comparison> out;
  for (auto& p : closed_form_eval(family.d, family.t, family.defect, family.variant)) {
    if (p.quantity == Quantity::j2 && !include_printed_j2) continue;
    Comparison c;
    c.computed = p.quantity == Quantity::multiplier ? dims.multiplier
                 : p.quantity == Quantity::wedge    ? dims.wedge
                 : p.quantity == Quantity::tensor   ? dims.tensor
                                                    : dims.j2;
    if (p.value == Scalar(static_cast<unsigned long>(c.computed))) {
      c.status = Status::match;
    } else {
      c.status = is_expected_mismatch(p.formula) ? Status::expected_mismatch : Status::unexpected_mismatch;
    }
    c.formula = std::move(p.formula);
    c.quantity = p.quantity;
    c.predicted = std::move(p.value);
    out.push_back(std::move(c));
  }
  return out;
}

OracleComparison oracle_compare(const LieAlgebra& a) {
  const FreePresentation p = presentation_from_class2(a);
  const Dimensions dims = compute_dimensions(p.target);
  const Subspace k = k_subspace(p.target);
  const Subspace kb = ker_beta(p);
  OracleComparison o;
  o.multiplier = dims.multiplier;
  o.hopf_multiplier = hopf_multiplier_dim(p);
  o.wedge = dims.wedge;
  o.exterior_oracle = exterior_square_oracle(p);
  o.k_dim = k.dim();
  o.ker_beta_dim = kb.dim();
  o.ker_beta_equals_k = kb == k;
  o.exterior_center_dim = exterior_center(p).dim();
  return o;
}

std::size_t Analysis::unexpected_mismatches() const {
  std::size_t n = 0;
  for (const auto& c : comparisons) n += c.status == Status::unexpected_mismatch;
  return n;
}

Analysis analyze(const LieAlgebra& a, const AnalysisOptions& options) {
  Analysis out;
  out.dim = a.dim();
  const auto cls = nilpotency_class(a);
  if (!cls || *cls > 2) throw ClassTooHigh("analysis needs a nilpotent algebra of class at most 2");
  out.nilpotency_class = *cls;
  out.center_dim = center(a).dim();
  out.generalized_heisenberg = is_generalized_heisenberg(a);
  out.dims = compute_dimensions(a);
  out.family = options.family ? options.family : detect_family(a);
  if (out.family) {
    if (out.family->defect == 3) out.family->variant = realized_variant(out.dims, out.family->d, out.family->t);
    out.comparisons = compare(out.dims, *out.family, options.include_printed_j2);
  }
  if (options.capability) out.capability = capability_by_quotients(a, options.capability_options);
  if (options.oracle) out.oracle = oracle_compare(a);
  return out;
}

Json to_json(const Dimensions& d) {
  return {{"n", d.n},           {"rank", d.r},     {"psi2_rank", d.psi2_rank}, {"m_L", d.multiplier},
          {"wedge", d.wedge},   {"tensor", d.tensor}, {"j2", d.j2}};
}

Json to_json(const FamilyParams& f) {
  return {{"d", f.d}, {"t", f.t}, {"defect", f.defect}, {"variant", to_string(f.variant)}};
}

Json to_json(const Comparison& c) {
  return {{"formula", c.formula},
          {"quantity", to_string(c.quantity)},
          {"predicted", to_string(c.predicted)},
          {"computed", c.computed},
          {"status", to_string(c.status)}};
}

Json to_json(const OracleComparison& o) {
  return {{"m_L", o.multiplier},
          {"hopf_m_L", o.hopf_multiplier},
          {"wedge", o.wedge},
          {"hopf_wedge", o.exterior_oracle},
          {"k_dim", o.k_dim},
          {"ker_beta_dim", o.ker_beta_dim},
          {"ker_beta_equals_k", o.ker_beta_equals_k},
          {"exterior_center_dim", o.exterior_center_dim},
          {"agrees", o.agrees()}};
}

Json to_json(const CapabilityReport& c) {
  Json quotients = Json::array();
  for (const auto& q : c.quotients) {
    Json line = Json::object();
    for (const auto& e : q.line.entries()) line[std::to_string(e.index)] = to_string(e.value);
    quotients.push_back({{"line", std::move(line)}, {"m_L", q.quotient_multiplier}, {"strict_drop", q.strict_drop}});
  }
  return {{"capable", c.capable},
          {"exterior_center_dim", c.exterior_center_dim},
          {"m_L", c.multiplier},
          {"all_quotients_drop", c.all_quotients_drop},
          {"quotients", std::move(quotients)}};
}

Json to_json(const Analysis& a) {
  Json j = {{"dim", a.dim},
            {"class", a.nilpotency_class},
            {"center_dim", a.center_dim},
            {"generalized_heisenberg", a.generalized_heisenberg},
            {"dims", to_json(a.dims)}};
  j["family"] = a.family ? to_json(*a.family) : Json(nullptr);
  Json comparisons = Json::array();
  for (const auto& c : a.comparisons) comparisons.push_back(to_json(c));
  j["comparisons"] = std::move(comparisons);
  if (a.capability) j["capability"] = to_json(*a.capability);
  if (a.oracle) j["oracle"] = to_json(*a.oracle);
  j["unexpected_mismatches"] = a.unexpected_mismatches();
  j["ok"] = a.ok();
  return j;
}

}  // namespace gha
