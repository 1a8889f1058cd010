// JSON encodings shared by the library and the CLI. Polynomials follow the
// wire format {"vars", "deg", "field": {"m"}, "terms": [{"exp", "coef"}]}
// with coefficients as hex bitstrings in the fixed power basis; term order
// is the deterministic exponent order, so equal inputs give byte-identical
// output.
#pragma once

#include <json.hpp>

#include "qc2/families.hpp"
#include "qc2/gauss.hpp"
#include "qc2/lattice.hpp"
#include "qc2/singular.hpp"
#include "qc2/weierstrass.hpp"

namespace qc2 {

using Json = nlohmann::ordered_json;

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json surface_to_json(const QuarticSurface& X);
QuarticSurface surface_from_json(const Json& j);

Json weierstrass_to_json(const WeierstrassModel& W);
WeierstrassModel weierstrass_from_json(const Json& j);

Json point_to_json(const ProjPoint& p);
Json locus_report_to_json(const SingularLocusReport& rep);
Json degree_ledger_to_json(const DegreeLedger& led);
Json configuration_to_json(const ConfigurationReport& rep);
Json strange_locus_to_json(const StrangeLocus& s);
Json verify_to_json(const VerifyResult& v);
Json insep_report_to_json(const InsepReport& r);
Json fiber_report_to_json(const FiberReport& r);
Json euler_ledger_to_json(const EulerLedger& led);
Json lattice_to_json(const LatticeBasis& B);

}  // namespace qc2
