#pragma once

#include <nlohmann/json.hpp>

#include "zhdd/dense.hpp"
#include "zhdd/sqmdd.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd {

using Json = nlohmann::json;

// Amplitudes are [re, im] pairs; a bare number is read as a real amplitude.
Json amplitude_to_json(Amplitude a);
Amplitude amplitude_from_json(const Json& j);

/// {"kind": ..., "params": {...}, "children": [...]}.
Json term_to_json(const ZhTerm& t);
ZhTerm term_from_json(const Json& j);

/// Vertices are renumbered breadth-first on output; the terminal is "t".
Json sqmdd_to_json(const Sqmdd& d);
Sqmdd sqmdd_from_json(const Json& j);

Json vector_to_json(std::span<const Amplitude> v);
DenseVector vector_from_json(const Json& j);
/// Array of rows.
Json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);

enum class DocumentKind { Term, Sqmdd, Vector, Matrix };

/// Terms carry "kind", diagrams carry "nodes"/"scalar", vectors and matrices
/// are arrays. Throws ParseError for anything else.
DocumentKind detect_document(const Json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace zhdd
