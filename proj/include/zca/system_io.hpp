#pragma once

#include "zca/system_model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace zca {

/// Accepts {"builtin": "heat"|"wave", "modes": N} or
/// {"modes": [{"lambda_re", "lambda_im", "c_re", "c_im"}, ...], "label": s}.
/// Throws InvalidArgument with the offending mode index on Re(lambda) > 0.
DiagonalSystem system_from_json(const nlohmann::json& doc);

/// Explicit mode-list form; doubles survive a round trip bit-exactly.
nlohmann::json system_to_json(const DiagonalSystem& system);

/// {"atoms": [{"re", "im", "mass"}, ...]}
PointMeasure measure_from_json(const nlohmann::json& doc);
nlohmann::json measure_to_json(const PointMeasure& measure);

nlohmann::json read_json_file(const std::filesystem::path& path);
DiagonalSystem load_system(const std::filesystem::path& path);
PointMeasure load_measure(const std::filesystem::path& path);

/// Writes via a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace zca
