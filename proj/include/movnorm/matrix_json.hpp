#pragma once

#include "movnorm/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace movnorm {

/// Matrix file format:
///   {"dim": n, "re": [[...], ...], "im": [[...], ...]}
/// "re" and the optional "im" are n x n arrays of numbers; "im" defaults to 0.
/// Throws ParseError on malformed JSON or wrong field types, and
/// DimensionMismatch on shape errors.
Matrix matrix_from_json(const nlohmann::json& j);
Matrix parse_matrix_json(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);

/// Writes "im" only when some imaginary part is nonzero.
nlohmann::json matrix_to_json(const Matrix& x);

} // namespace movnorm
