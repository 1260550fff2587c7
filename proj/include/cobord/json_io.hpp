#pragma once

// JSON forms of the library's values.  Arbitrary-precision integers are
// decimal strings; every to_json has a matching from_json.

#include <json.hpp>

#include "cobord/cellular.hpp"
#include "cobord/coeff.hpp"
#include "cobord/error.hpp"
#include "cobord/fgl.hpp"
#include "cobord/presentations.hpp"
#include "cobord/series.hpp"

namespace cobord {

using Json = nlohmann::json;

Json coeff_to_json(const CoeffPoly& p);
CoeffPoly coeff_from_json(const Json& j, int bound = kUnbounded);

Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

Json presentation_to_json(const GradedPresentation& p);
GradedPresentation presentation_from_json(const Json& j);

// {"rank": r, "torsion": ["n", ...]}; the degree is supplied by the caller.
Json component_to_json(const GradedComponent& c);
GradedComponent component_from_json(const Json& j, int degree);

Json cells_to_json(const CellComplex& c);
CellComplex cells_from_json(const Json& j);

// [{"axiom": name, "residual_degree": d | null}]
Json axioms_to_json(const AxiomReport& report);

Json express_to_json(const ExpressResult& r);
ExpressResult express_from_json(const Json& j);

Json error_to_json(const Error& e);

}  // namespace cobord
