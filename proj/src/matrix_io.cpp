#include "ibn/matrix_io.hpp"

#include <fstream>

#include "ibn/errors.hpp"
#include "ibn/poly_text.hpp"

namespace ibn {

nlohmann::json matrix_to_json(const AMatrix& m, const Presentation& pres) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(to_text(m.at(r, c), pres));
  }
  return nlohmann::json{{"rows", m.rows()},
                        {"cols", m.cols()},
                        {"entries", std::move(entries)},
                        {"presentation", pres.id()}};
}

MatrixFile matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries") ||
      !j.contains("presentation")) {
    throw Error(errc::bad_file, "matrix file needs rows, cols, entries, presentation");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() ||
      !j["entries"].is_array() || !j["presentation"].is_string()) {
    throw Error(errc::bad_file, "matrix file field has the wrong type");
  }
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  if (rows < 1 || cols < 1) throw Error(errc::bad_file, "matrix dimensions must be positive");
  if (j["entries"].size() != rows * cols) {
    throw Error(errc::bad_file, "entry count does not match rows * cols");
  }
  Presentation pres = [&] {
    try {
      return Presentation::from_id(j["presentation"].get<std::string>());
    } catch (const Error& e) {
      throw Error(errc::bad_file, e.what());
    }
  }();
  AMatrix m(rows, cols);
  std::size_t i = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c, ++i) {
      const auto& cell = j["entries"][i];
      if (!cell.is_string()) throw Error(errc::bad_file, "matrix entries must be strings");
      try {
        m.at(r, c) = parse_poly(cell.get<std::string>(), pres);
      } catch (const SyntaxError& e) {
        throw Error(errc::bad_file, "entry " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  return MatrixFile{std::move(m), std::move(pres)};
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::bad_file, "cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::bad_file, "invalid JSON in '" + path.string() + "': " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const AMatrix& m,
                       const Presentation& pres) {
  std::ofstream out(path);
  if (!out) throw Error(errc::bad_file, "cannot write '" + path.string() + "'");
  out << matrix_to_json(m, pres).dump(2) << "\n";
}

}  // namespace ibn
