#pragma once

#include "confrac/alpha_series.hpp"
#include "confrac/hermite.hpp"
#include "confrac/ode_solver.hpp"

#include <json.hpp>

namespace confrac {

using Json = nlohmann::json;

/// {"alpha": "p/q", "x0": "p/q", "coeffs": ["p/q", ...]}
Json to_json(const AlphaSeries& s);

/// Inverse of to_json(AlphaSeries). Throws MalformedInput on schema errors.
AlphaSeries series_from_json(const Json& j);

/// Series object plus "m".
Json to_json(const HermitePolyAlpha& h);
HermitePolyAlpha hermite_from_json(const Json& j);

/// {"solution": series, "radius": number | "inf" | null, "residual_ok_through": int}
Json to_json(const SolveReport& r);

Json to_json(const PropertyReport& r);
Json to_json(const OrthogonalityReport& r);

} // namespace confrac
