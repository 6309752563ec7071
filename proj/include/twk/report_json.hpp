#ifndef TWK_REPORT_JSON_HPP
#define TWK_REPORT_JSON_HPP

#include "twk/su2.hpp"
#include "twk/su3.hpp"

#include <json.hpp>

namespace twk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json su2_report_to_json(const SU2Report& rep);
SU2Report su2_report_from_json(const Json& j);

Json su3_report_to_json(const SU3Report& rep);
SU3Report su3_report_from_json(const Json& j);

/// Matrix export: array-of-rows of canonical polynomial strings over
/// Z[s1,s2] plus the cleared denominator exponent; round-trips
/// bit-exactly through matrices_from_json.
Json matrices_to_json(const SU3ChainComplex& cx);
SU3ChainComplex matrices_from_json(const Json& j);

} // namespace twk

#endif
