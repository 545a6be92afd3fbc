#pragma once

// Printed closed-form dimension polynomials for d-generator generalized
// Heisenberg algebras H of rank d(d-1)/2 - k (k = 1, 2, 3), and for
// H + A(t), evaluated verbatim. Some of them are known to be wrong; those
// are listed, with the reason, in expected_mismatches().
//
// Formula ids: "<family>.<quantity>.defect<k>[.b0|.b1]" where family is
// "gh" (no abelian summand) or "gh_sum" (H + A(t)), and b0/b1 select the
// first/second alternative of the defect-3 dichotomy.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gha/exactla.hpp"
#include "gha/liealg.hpp"

namespace gha {

enum class Quantity { multiplier, wedge, tensor, j2 };

// "m_L", "wedge", "tensor", "j2"
std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view key);

struct Prediction {
  std::string formula;
  Quantity quantity;
  Scalar value;
};

// All applicable predictions: the gh family when t == 0, the gh_sum family
// always. Defect 3 picks the b0 branch for Variant::generic and b1 for
// Variant::deficient. Throws PreconditionError unless d >= 3,
// 1 <= defect <= 3 and defect < d(d-1)/2.
std::vector<Prediction> closed_form_eval(std::size_t d, std::size_t t, std::size_t defect,
                                         Variant variant = Variant::generic);

struct ExpectedMismatch {
  std::string formula;
  std::string reason;
};

const std::vector<ExpectedMismatch>& expected_mismatches();
bool is_expected_mismatch(std::string_view formula);

}  // namespace gha
