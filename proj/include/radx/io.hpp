#pragma once

#include <string>

#include <json.hpp>

#include "radx/hemiring.hpp"
#include "radx/monoid.hpp"
#include "radx/semimodule.hpp"

namespace radx {

// Structure documents: UTF-8 JSON with fields
//   kind:     "hemiring" | "semimodule" | "monoid"
//   name:     text
//   elements: list of labels
//   zero:     label of the additive identity
//   add:      |X| x |X| table of labels, row = left operand
//   mul:      (hemirings) |R| x |R| table of labels
//   action:   (semimodules) |R| rows x |M| columns of labels, row = scalar
//   hemiring_ref: (semimodules) inline document or file path
// Tables use labels, not indices; the parser resolves labels and pins zero to
// index 0 internally.

nlohmann::json to_document(const Hemiring& R);
nlohmann::json to_document(const CommMonoid& M);
nlohmann::json to_document(const Semimodule& M);

enum class DocumentKind { hemiring, semimodule, monoid };
DocumentKind document_kind(const nlohmann::json& doc);

// Parse + validate. Throws MalformedTables on structural problems and
// AxiomViolation when the tables fail an axiom. `base_dir` resolves relative
// hemiring_ref paths.
HemiringPtr parse_hemiring(const nlohmann::json& doc);
CommMonoidPtr parse_monoid(const nlohmann::json& doc);
SemimodulePtr parse_semimodule(const nlohmann::json& doc, const std::string& base_dir = ".");

nlohmann::json load_json_file(const std::string& path);

}  // namespace radx
