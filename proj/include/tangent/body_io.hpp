#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tangent/geometry.hpp"

namespace tangent {

/// A body read from JSON, with its densities q_0..q_{m-1}.
///
///   {"kind": "ellipse", "a": 2, "b": 1, "tilt": 0.3}
///   {"kind": "trig", "rho2": {"cos": ["5/2", 0, "3/2"], "sin": []}}
///   {"kind": "perturbed", "base": {...}, "eps": 0.05, "frequency": 4}
///
/// plus optional "m" and "densities": [{"cos": [...], "sin": [...]}, ...].
/// A coefficient is a JSON number or a "p/q" string. Integers and strings
/// are exact; a body is exact when all its coefficients are (and tilt is 0).
/// Without "densities" the body carries q_0 = 1.
struct BodyDocument {
  SupportFunction body;
  std::vector<CircleFunction> densities;

  TangentialData data() const { return TangentialData(body, densities); }
};

/// Throws ConfigError for malformed documents, InvalidParameter when the
/// body itself is rejected (nonpositive axis, ρ² not positive, ...).
/// `m`, when given, must match the document.
SupportFunction parse_support(const nlohmann::json& doc, int grid);
BodyDocument parse_body(const nlohmann::json& doc, int grid, std::optional<int> m = std::nullopt);
BodyDocument load_body(const std::filesystem::path& path, int grid,
                       std::optional<int> m = std::nullopt);

}  // namespace tangent
