#ifndef DYNIRR_JSON_IO_HPP
#define DYNIRR_JSON_IO_HPP

/* JSON serialization for polynomials, certificates and reports.
   Coefficients travel as decimal strings so round-trips are bit-exact.

   Schemas:
     univariate  {"var": "a", "coeffs": ["c0", "c1", ...]}
     bivariate   {"vars": ["a", "b"], "terms": [[[i, j], "coeff"], ...]}
     mod-p       {"p": 3, "var": "a", "coeffs": [...]}                      */

#include <string>

#include <json.hpp>

#include "dynirr/certify.hpp"
#include "dynirr/modpoly.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/poly1.hpp"
#include "dynirr/poly2.hpp"
#include "dynirr/report.hpp"
#include "dynirr/unicritical.hpp"

namespace dynirr::io {

using json = nlohmann::ordered_json;

json to_json(const IntPoly1& f);
json to_json(const IntPoly2& f);
json to_json(const ModPoly& f, const std::string& var = "a");
IntPoly1 poly1_from_json(const json& j);
IntPoly2 poly2_from_json(const json& j);
ModPoly modpoly_from_json(const json& j);

json to_json(const certify::EisensteinCertificate& cert);
certify::EisensteinCertificate eisenstein_from_json(const json& j);
json to_json(const certify::PipelineCertificate& cert);
json to_json(const certify::OriginReport& rep);

json to_json(const StructureReport& rep);
json to_json(const uni::ResultantWitness& w);
json to_json(const uni::ModpPowerReport& rep);
json to_json(const uni::GleasonReport& rep);
json to_json(const std::vector<uni::SurveyRow>& rows);
json to_json(const oracle::FamilyValidation& v);

/* parse with a byte-offset error on malformed input */
json parse(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/* re-run the hypotheses of a serialized Eisenstein certificate; true when
   every recorded witness and the verdict reproduce */
bool verify_certificate_text(const std::string& text);

}  // namespace dynirr::io

#endif
