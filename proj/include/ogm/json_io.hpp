#pragma once

// JSON forms for the library types. Exact values travel as strings; counts,
// degrees and indices are plain JSON numbers. Key order is fixed so output
// is byte-stable. The from_json side throws parse_error on bad documents.

#include <map>
#include <utility>

#include <json.hpp>

#include "ogm/comodules.hpp"
#include "ogm/springer.hpp"

namespace ogm {

using Json = nlohmann::ordered_json;

Json backend_to_json(const BackendConfig& cfg);
BackendConfig backend_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& g);  // {"coeffs": {"<deg>": "<scalar>"}}
LaurentPoly laurent_from_json(const Json& j, const BackendConfig& cfg);
Json laurent2_to_json(const LaurentPoly2& g);  // coefficient keys "i,j"
LaurentPoly2 laurent2_from_json(const Json& j, const BackendConfig& cfg);

Json expression_to_json(const GeneratorExpression& ex);
GeneratorExpression expression_from_json(const Json& j, const BackendConfig& cfg);

Json membership_to_json(const MembershipVerdict& v);

Json point_to_json(const GPoint& pt);  // {"t","x","ring"}
GPoint point_from_json(const Json& j, const BackendConfig& cfg);

Json matrix_to_json(const Matrix& m);  // column-major [["<scalar>",...],...]
Matrix matrix_from_json(const Json& j, const BackendConfig& cfg);

Json pair_to_json(const GradedSpace& v, const Lattice& m);  // {"degrees","basis"}
std::pair<GradedSpace, Lattice> pair_from_json(const Json& j,
                                               const BackendConfig& cfg);

Json admissibility_to_json(const AdmissibilityVerdict& v);
Json hopf_report_to_json(const HopfReport& r);

// {"admissible": true, "axioms": {...}, "entries": [[laurent,...],...]}
Json comodule_to_json(const ComoduleMatrix& cm, const ComoduleReport& rep);
// {"admissible": false, "witness": {...}, "entry": {...}}
Json non_admissible_to_json(const NonAdmissibleDetail& d);
Json morphism_to_json(const MorphismVerdict& v);
Json torsion_to_json(const TorsionComodule& tc, const TorsionReport& rep);
Json grading_to_json(const GradingReport& rep);

Json window_to_json(const WindowSpec& spec);
WindowSpec window_from_json(const Json& j);
Json strata_to_json(const std::map<long, long>& strata);
Json stable_set_to_json(const StableLatticeSet& set);
Json polyfit_to_json(const PolyFitReport& rep);

}  // namespace ogm
