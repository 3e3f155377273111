#pragma once

// Shared JSON helpers for cards and reports (internal).

#include "multisec/geometry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace multisec::json_util {

using Json = nlohmann::ordered_json;

/// Integers that fit in a long are JSON numbers, larger ones decimal strings.
Json from_integer(const Integer& x);
Json from_vector(const IntVector& v);
Json from_matrix_rows(const IntMatrix& m);

/// Readers; `field` is used in the ValidationError. Decimal strings are
/// accepted only with allow_string (reports), never in cards.
Integer to_integer(const Json& j, const std::string& field, bool allow_string = false);
long to_long(const Json& j, const std::string& field);
IntVector to_vector(const Json& j, const std::string& field, bool allow_string = false);
std::vector<IntVector> to_vector_list(const Json& j, const std::string& field, bool allow_string = false);
IntMatrix to_matrix_rows(const Json& j, std::size_t cols, const std::string& field, bool allow_string = false);

/// Objects one key per line, arrays of scalars (or of arrays of scalars) inline.
std::string format(const Json& j);

}  // namespace multisec::json_util
