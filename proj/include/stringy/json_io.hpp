#pragma once

#include <json.hpp>

#include "stringy/fraction.hpp"
#include "stringy/laurent.hpp"
#include "stringy/multiset.hpp"
#include "stringy/ratfunc.hpp"
#include "stringy/repspec.hpp"

namespace stringy {

/// Wire formats:
///   LaurentPoly  — sorted [exponent, coefficient] pairs,
///   RatFunc      — {"num": [...], "den": [...]},
///   IntMultiset  — sorted [value, multiplicity] pairs,
///   RepSpec      — {"p": 7, "d": [5]} (or "d_plus", converted on read),
///   Fraction     — "num/den" string.
/// Coefficients are JSON integers when they fit in 64 bits, decimal
/// strings otherwise.

nlohmann::json lp_to_json(const LaurentPoly& p);
LaurentPoly lp_from_json(const nlohmann::json& j);

nlohmann::json rf_to_json(const RatFunc& f);
RatFunc rf_from_json(const nlohmann::json& j);

nlohmann::json ms_to_json(const IntMultiset& m);
IntMultiset ms_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const RepSpec& s);
RepSpec spec_from_json(const nlohmann::json& j);

nlohmann::json fraction_to_json(const Fraction& f);
Fraction fraction_from_json(const nlohmann::json& j);

} // namespace stringy
