#pragma once

#include <json.hpp>

#include "defectk/defect.hpp"
#include "defectk/families.hpp"
#include "defectk/macaulay.hpp"

namespace defectk {

using Json = nlohmann::ordered_json;

// Rationals are [num, den]; integers beyond 64 bits are written as strings.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const GradedPoly& f);
GradedPoly graded_poly_from_json(const Json& j);

Json to_json(const PointSet& points);
PointSet point_set_from_json(const Json& j);

Json to_json(const HilbertProfile& h);
HilbertProfile profile_from_json(const Json& j);

Json to_json(const DefectReport& r);
DefectReport defect_report_from_json(const Json& j);

Json to_json(const MacaulayExpansion& e);
Json to_json(const BaseLocus& b);
Json to_json(const std::vector<GrowthViolation>& v);
Json to_json(const SingularProbe& p);
Json to_json(const GridParams& p);
Json to_json(const HighdimParams& p);

} // namespace defectk
