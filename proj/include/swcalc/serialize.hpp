#pragma once

// Canonical JSON forms.  SW elements serialize as a sorted monomial list
// [{"c": n, "exp": {"t": -1}}, ...]; golden files compare this byte-exactly.
// Coefficients render as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.

#include "swcalc/sw_element.hpp"

#include <json.hpp>

namespace swcalc {

using Json = nlohmann::json;  // alphabetically sorted keys keep output canonical

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json element_to_json(const SWElement& e);
SWElement element_from_json(const Json& terms, const std::vector<std::string>& vars);

Json fraction_to_json(const SWFraction& f);

}  // namespace swcalc
