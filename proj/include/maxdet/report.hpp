#ifndef MAXDET_REPORT_HPP
#define MAXDET_REPORT_HPP

#include <string>

#include <json.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/witnesses.hpp"

namespace maxdet {

using json = nlohmann::ordered_json;

// Registry export: {cap, mode, orders: [{order, tag}]}.
json registry_json(const OrderRegistry& reg);

// Report export: entries carry {name, n, ln_D, ln_R, R_if_representable,
// source}.  ExactInt values are decimal strings.
json bound_report_json(const BoundReport& rep);
std::string bound_report_csv(const BoundReport& rep);

json certificate_json(const WitnessCertificate& cert,
                      const std::string& matrix_file = "");

// Rebuild a certificate from its JSON plus the matrix text; throws
// parse_error on malformed input.
WitnessCertificate certificate_from_json(const json& j,
                                         const std::string& matrix_text);

}  // namespace maxdet

#endif
