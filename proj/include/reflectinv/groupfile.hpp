#pragma once

// JSON interchange format for groups, representations and optional expected
// results. Every field scalar is an entry-text string; polynomials use the
// canonical text form. Structural counts (n, degrees, orders) are integers.

#include <string>

#include "reflectinv/catalog.hpp"

namespace reflectinv {

/// Parses and validates a group document. ParseError for malformed JSON or
/// entries, InvalidInput for missing or mistyped fields, DimensionMismatch
/// for matrices of the wrong size, GeneratorCountMismatch for representations
/// with the wrong number of images.
CatalogEntry parse_group_json(const std::string& text);
CatalogEntry load_group_file(const std::string& path);

/// Inverse of parse_group_json; output is deterministic and indented.
std::string export_group_json(const CatalogEntry& entry);

}  // namespace reflectinv
