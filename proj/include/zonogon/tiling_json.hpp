#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "zonogon/complex.hpp"
#include "zonogon/enumerate.hpp"

namespace zonogon {

// Persisted form keeps undirected edge ids only; face orientation is
// reconstructed on load from vertex chaining plus the turning sum.
nlohmann::json tiling_to_json(const TilingComplex& c);

// Throws std::runtime_error with a "parse:" message on malformed input.
TilingComplex tiling_from_json(const nlohmann::json& j);

TilingComplex load_tiling(const std::string& path);
void save_tiling(const TilingComplex& c, const std::string& path);

// File stem "class_NNNN" for the class at `index` in canonical code order.
std::string class_file_stem(std::size_t index);

// Deterministic run report: class count, per-case tallies for k = 4, one
// entry per class ordered by canonical code bytes. No timestamps.
nlohmann::json summary_json(const ClassSet& classes);

}  // namespace zonogon
