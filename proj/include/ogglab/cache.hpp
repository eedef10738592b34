#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "ogglab/brandt.hpp"

namespace ogglab {

std::filesystem::path brandtCachePath(const std::filesystem::path& dir, long p, long q);

nlohmann::json brandtToJson(const BrandtModule& module);

/// Rebuilds a module from its cached form. Re-checks the algebra's ramification,
/// the order, the unit weights, the mass formula and B(1) = identity; any
/// failure throws InvalidInput.
BrandtModule brandtFromJson(const nlohmann::json& j);

/// Writes to a temporary file in the same directory, then renames over the target.
void writeJsonAtomic(const std::filesystem::path& path, const nlohmann::json& j);
std::optional<nlohmann::json> readJsonFile(const std::filesystem::path& path);

/// Loads the cached module if present, otherwise builds it.
BrandtModule loadOrBuildBrandt(const std::filesystem::path& dir, long p, long q, bool* loaded = nullptr);

}  // namespace ogglab
