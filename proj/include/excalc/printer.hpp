#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "excalc/form.hpp"

namespace excalc {

std::string to_text(const Rat& r);
std::string to_text(const GaussRat& c);

/// Canonical text rendering; re-parses to an equal form under the same
/// session. Coefficients print in standard coordinates, e.g. "(x1-1)^2".
std::string to_text(const Form& w);

/// Machine rendering: shifted-basis monomials with exact rational strings,
/// so antiexactness is visible as the absence of a constant term.
nlohmann::json to_json(const Form& w);

std::string label_name(Mode mode, int dim, Label slot);      ///< "x1", "z1", "zb1"
std::string diff_label_name(Mode mode, int dim, Label slot); ///< "dx1", "dz1", "dzb1"
std::string shifted_var_name(Mode mode, int dim, Label slot);///< "u1", "v1", "vb1"

std::ostream& operator<<(std::ostream& os, const Form& w);

}  // namespace excalc
