#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quotnef/config.hpp"
#include "quotnef/quot.hpp"

namespace quotnef {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" (or "p" when the denominator is 1) so output is
// exact; vectors and cones build on that.
Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);
Json vec_to_json(const RatVec& v);
RatVec vec_from_json(const Json& j);
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

// {"basis": tag, "coords": [...]}; parameters are supplied externally, they
// are not part of the class payload.
Json sym_class_to_json(const DivClassSym& c);
DivClassSym sym_class_from_json(const CurveParams& p, const Json& j);

// {"a": "p/q", "beta": {...}} with beta always in canonical coordinates.
Json quot_class_to_json(const DivClassQuot& c);
DivClassQuot quot_class_from_json(const CurveParams& p, const Json& j);

Json params_to_json(const CurveParams& p);
CurveParams params_from_json(const Json& j);

Json certificate_to_json(const NefCertificate& c);
Json verdict_to_json(const CurveParams& p, const DivClassQuot& cls, const NefVerdict& v,
                     const std::vector<std::string>& extra_flags = {});

// Everything the cone subcommand reports for one parameter cell. The weak
// upper bound and the tau/rho discrepancy surface through flags rather than
// separate fields.
struct ReportData {
    CurveParams params;
    std::optional<Cone> upper;
    std::optional<Cone> lower;  // always set by make_report
    std::optional<Cone> exact;
    std::optional<std::string> theorem;
    std::vector<BoundaryCert> boundary;
    std::optional<Picture> picture;
    std::vector<std::string> flags;
};

// Assembles bounds, exact cone, boundary certificates, picture, and flags.
// extra_flags come from t-resolution at the CLI layer (for example
// "conjectural-t-refused"); "conjectural-t", "t-unknown",
// "weak-upper-no-tilde-delta", "no-upper-bound", and "tau-rho-discrepancy"
// are derived here. Flags are deduplicated, insertion-ordered.
ReportData make_report(const CurveParams& p,
                       const std::vector<std::string>& extra_flags = {});

Json report_to_json(const ReportData& r);
ReportData report_from_json(const Json& j);

}  // namespace quotnef
