// Built-in rigid models and the JSON catalog format.
#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "tanaka/frames.hpp"

namespace tanaka {

// Sorted by id. Rigid entries cover k <= 10; two negative or alternative entries
// (explicit L for the sphere, a Levi-flat graph) are included.
std::vector<ModelSpec> builtin_catalog();

nlohmann::json model_to_json(const ModelSpec& m);
ModelSpec model_from_json(const nlohmann::json& j);
nlohmann::json catalog_to_json(const std::vector<ModelSpec>& models);
std::vector<ModelSpec> catalog_from_json(const nlohmann::json& j);
std::vector<ModelSpec> load_catalog(const std::string& path);

// Throws std::out_of_range naming the id.
const ModelSpec& find_model(const std::vector<ModelSpec>& catalog, const std::string& id);

}  // namespace tanaka
