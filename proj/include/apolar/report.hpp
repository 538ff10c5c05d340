#pragma once

// JSON forms of the library's results. Rationals are written as strings so
// that values stay exact; key order is fixed.

#include "json.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/lefschetz.hpp"
#include "apolar/nagata.hpp"
#include "apolar/simplicial.hpp"

namespace apolar {

using Json = nlohmann::ordered_json;

Json to_json(const HilbertData& h);
/// Minimal generators as strings in the dual alphabet.
Json to_json(const GradedIdeal& ideal);
Json to_json(const HessianMatrix& h, const ZeroTest& test);
Json to_json(const ZeroTest& test);
Json to_json(const LefschetzReport& report);
Json to_json(const NagataForm& form);
Json to_json(const IncidenceSummary& summary);
Json to_json(const SimplicialComplex& complex);
Json to_json(const ComplexPrediction& prediction);
Json to_json(const VerificationReport& report);

/// {"vertices": m, "facets": [[1,2,3], ...]}.
SimplicialComplex complex_from_json(const Json& j);

}  // namespace apolar
