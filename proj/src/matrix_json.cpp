#include "movnorm/matrix_json.hpp"

#include "movnorm/errors.hpp"

#include <fstream>
#include <sstream>

namespace movnorm {

namespace {

// Reads an n x n array of numbers into the real or imaginary parts of `out`.
void read_block(const nlohmann::json& j, const char* field, std::size_t n, std::vector<Complex>& out, bool imag) {
  const auto& rows = j.at(field);
  if (!rows.is_array()) throw ParseError(std::string("\"") + field + "\" must be an array");
  if (rows.size() != n) {
    throw DimensionMismatch(std::string("\"") + field + "\" has " + std::to_string(rows.size()) +
                            " rows, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) throw ParseError(std::string("\"") + field + "\" rows must be arrays");
    if (row.size() != n) {
      throw DimensionMismatch(std::string("\"") + field + "\" row " + std::to_string(i) + " has " +
                              std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_number()) throw ParseError(std::string("\"") + field + "\" entries must be numbers");
      const double v = row[k].get<double>();
      if (imag) {
        out[i * n + k].imag(v);
      } else {
        out[i * n + k].real(v);
      }
    }
  }
}

} // namespace

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("dim") || !j.contains("re")) throw ParseError("matrix JSON needs \"dim\" and \"re\"");
  const auto& dim = j.at("dim");
  if (!dim.is_number_integer()) throw ParseError("\"dim\" must be an integer");
  if (dim.get<long long>() < 1) throw DimensionMismatch("\"dim\" must be positive");
  const auto n = static_cast<std::size_t>(dim.get<long long>());

  std::vector<Complex> entries(n * n);
  read_block(j, "re", n, entries, false);
  if (j.contains("im")) read_block(j, "im", n, entries, true);
  return Matrix(n, std::move(entries));
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

nlohmann::json matrix_to_json(const Matrix& x) {
  const std::size_t n = x.dim();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  bool complex = false;
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ir = nlohmann::json::array();
    for (std::size_t k = 0; k < n; ++k) {
      rr.push_back(x(i, k).real());
      ir.push_back(x(i, k).imag());
      complex = complex || x(i, k).imag() != 0.0;
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  nlohmann::json j = {{"dim", n}, {"re", std::move(re)}};
  if (complex) j["im"] = std::move(im);
  return j;
}

} // namespace movnorm
