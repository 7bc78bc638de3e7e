#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ibn/amatrix.hpp"
#include "ibn/presentation.hpp"

// Matrix file format:
//   { "rows": r, "cols": c,
//     "entries": [ "<poly>", ... ],        row-major polynomial text
//     "presentation": "cuntz:2" | "unc:m,n" | "toeplitz2" }

namespace ibn {

struct MatrixFile {
  AMatrix matrix;
  Presentation presentation;
};

nlohmann::json matrix_to_json(const AMatrix& m, const Presentation& pres);
MatrixFile matrix_from_json(const nlohmann::json& j);  // throws errc::bad_file

MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const AMatrix& m,
                       const Presentation& pres);

}  // namespace ibn
