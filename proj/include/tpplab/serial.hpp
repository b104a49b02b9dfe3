#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "tpplab/bounds.hpp"
#include "tpplab/matrix.hpp"
#include "tpplab/tpp.hpp"

namespace tpplab {

inline constexpr const char* kToolVersion = "0.1.0";

// Triple documents carry the group spec string and element lists in
// canonical text. A single triple:
//   {"group": "cyc(4)^3", "S": [...], "T": [...], "U": [...]}
// and a family:
//   {"group": "...", "triples": [{"S": ..., "T": ..., "U": ...}, ...]}
nlohmann::json triple_to_json(const IndexTriple& t);
nlohmann::json family_to_json(const TripleFamily& f);

using TripleDocument = std::variant<IndexTriple, TripleFamily>;
TripleDocument triple_document_from_json(const nlohmann::json& j);

// Matrices: JSON array-of-rows, or CSV with one row per line.
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const nlohmann::json& j);
ExactMatrix read_exact_matrix(const std::string& path);
void write_exact_matrix_csv(std::ostream& out, const ExactMatrix& m);

// Top-level CLI result envelope.
nlohmann::json make_envelope(const std::string& command, nlohmann::json params,
                             nlohmann::json results);

}  // namespace tpplab
