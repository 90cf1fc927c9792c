#pragma once

// Form-spec files (JSON):
//
//   { "kind": "eta_quotient", "factors": [[24, 1]], "weight": "1/2", "level": 576 }
//   { "kind": "unary_theta", "modulus": 4, "values": [0, 1, 0, -1], "power": 1, "weight": "3/2", "level": 64 }
//   { "kind": "raw", "coefficients": [1, 0, [0.5, -2]], "weight": "3/2", "level": 4 }
//
// Optional: "character" (discriminant D of d -> (D/d); inferred for eta quotients when absent),
// "cuspidal" (default true: reject eta quotients failing the cusp-order test), "scale" (eta only).

#include <string>
#include <string_view>

#include "qmf/forms.hpp"

namespace qmf {

// Status::parse with "source:line:column: ..." for syntax errors and "source: field 'x': ..." otherwise.
CuspFormSpec parse_form_spec(std::string_view text, const std::string& source = "<input>");
CuspFormSpec load_form_spec(const std::string& path);
std::string form_spec_to_json(const CuspFormSpec& spec);

}  // namespace qmf
