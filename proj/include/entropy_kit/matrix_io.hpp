#pragma once

// JSON matrix files: {"d": n, "re": [[...]], "im": [[...]]}, row-major.

#include <filesystem>

#include <nlohmann/json.hpp>

#include "entropy_kit/linops.hpp"

namespace entropy_kit {

nlohmann::json matrix_to_json(const Matrix& m);
/// Validates shape and Hermiticity. A missing "im" is read as zero.
HermitianOperator hermitian_from_json(const nlohmann::json& j);

HermitianOperator read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace entropy_kit
