#pragma once

#include <json.hpp>

#include "algfact/catalog.hpp"
#include "algfact/classify.hpp"

namespace algfact {

/* Documents are JSON objects with "format_version": "1" and a "kind"
 * discriminator.  Coefficients travel as strings so nothing is ever
 * rounded.  nlohmann::json keeps keys sorted, so rendering the same object
 * twice gives identical bytes. */
using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

Json to_doc(const FieldSpec& f);
Json to_doc(const Matrix& m);                  // kind "matrix"
Json to_doc(const Algebra& a);                 // kind "algebra"
Json to_doc(const Subspace& s);                // kind "subspace"
Json to_doc(const Factorization& f);           // kind "factorization"
Json to_doc(const MatchedPair& p);             // kind "matched_pair"
Json to_doc(const DeformationMap& r);          // kind "deformation_map"
Json to_doc(const Fingerprint& fp);            // kind "fingerprint"
Json to_doc(const IsoVerdict& v);              // kind "iso_verdict"
Json to_doc(const ClassificationReport& r);    // kind "classification_report"
Json bilinear_to_doc(const BilinearMap& b);    // bare tensor, no kind
Json maps_to_doc(const FieldSpec& f, std::size_t a_dim, std::size_t x_dim,
                 const std::vector<DeformationMap>& maps);  // kind "deformation_map_list"

FieldSpec field_from_doc(const Json& j);
Matrix matrix_from_doc(const Json& j);
Algebra algebra_from_doc(const Json& j);
Subspace subspace_from_doc(const Json& j);
Factorization factorization_from_doc(const Json& j);
MatchedPair pair_from_doc(const Json& j);
DeformationMap map_from_doc(const Json& j);    // shape only; run is_deformation_map to validate
Fingerprint fingerprint_from_doc(const Json& j);
std::vector<DeformationMap> maps_from_doc(const Json& j);
BilinearMap bilinear_from_doc(const FieldSpec& f, const Json& j);

/* Throws ParseError unless j is an object of this kind with the supported
 * format version. */
void expect_kind(const Json& j, const std::string& kind);

std::string render(const Json& j);             // 2-space indent + trailing newline
Json parse_document(const std::string& text);  // ParseError on malformed JSON
Json load_document_file(const std::string& path);

}  // namespace algfact
