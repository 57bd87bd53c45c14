#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homjordan/bimodule.hpp"
#include "homjordan/constructions.hpp"

namespace homjordan {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

// {"kind":"hom_algebra","field":{"type":"Q"}|{"type":"GF","p":5},"dim":2,
//  "basis_labels":[...]?,"mu":[{"i":0,"j":0,"k":1,"c":"1"},...],
//  "alpha":[["0","1"],["1","0"]],"jordan_mode":false?}
// Sparse mu entries may give only one of (i,j)/(j,i); the loader
// symmetrizes and rejects conflicting duplicates.
HomAlgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const HomAlgebra& a,
                     const std::vector<std::string>& basis_labels = {});

HomAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const HomAlgebra& a,
                              const std::vector<std::string>& basis_labels = {});

// {"kind":"bimodule","algebra":{...}|"path.json","dim_w":1,
//  "alpha_w":[["1"]],"rho_l":[[["1"]],[["1"]]]}
// `load_file` resolves an algebra given by path; `algebra_override` replaces
// whatever the document carries.
BimoduleRep bimodule_from_json(const Json& doc,
                               const std::function<std::string(const std::string&)>& load_file,
                               const std::optional<HomAlgebra>& algebra_override = std::nullopt);
Json bimodule_to_json(const BimoduleRep& r);

FieldDescriptor field_from_json(const Json& j);
Json field_to_json(const FieldDescriptor& f);

// ---------------------------------------------------------------------------
// Report fragments
// ---------------------------------------------------------------------------

Json vector_to_json(const Vec& v);
Json matrix_to_json(const Mat& m);
Json subspace_to_json(const Subspace& s);
Json witness_to_json(const Witness& w);
Json check_to_json(const CheckResult& c);
Json report_to_json(const VerificationReport& r);
Json series_to_json(const DerivedSeries& s);
Json signature_to_json(const ClassificationSignature& s);

// FNV-1a hash of the raw input bytes, as fixed-width hex.
std::string content_digest(const std::string& bytes);

}  // namespace homjordan
