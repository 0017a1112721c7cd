#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "centra/matrix.hpp"
#include "centra/poly.hpp"

namespace centra {

inline constexpr const char* kVersion = "0.1.0";

/// A matrix document pairs a field declaration with rectangular rows:
///   {"field": {"kind": "prime", "p": 5} | {"kind": "rational"},
///    "rows": [[0, 1], [0, 0]]}
/// Rational entries may be integers or "num/den" strings.
struct MatrixDocument {
  FieldSpec field;
  Matrix matrix;
};

FieldSpec parse_field_spec(const nlohmann::json& j);
MatrixDocument parse_matrix_document(const nlohmann::json& j);
/// Reads and parses a document file; std::runtime_error on I/O failure,
/// std::invalid_argument on malformed content.
MatrixDocument load_matrix_document(const std::string& path);
/// Same, with the document's field declaration replaced.
MatrixDocument load_matrix_document(const std::string& path,
                                    const FieldSpec& field_override);

nlohmann::json field_to_json(const FieldSpec& spec);
nlohmann::json scalar_to_json(const FieldElem& e);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);
/// {"coeffs": [...], "display": "a0 + a1*t + ..."}
nlohmann::json poly_to_json(const Poly& p);

/// FNV-1a digest of the raw bytes of the given files, for the report's
/// inputs field.
std::string digest_files(const std::vector<std::string>& paths);

}  // namespace centra
