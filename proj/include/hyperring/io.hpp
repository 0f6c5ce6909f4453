#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "hyperring/hyperring.hpp"

namespace hyperring {

// Hyperring document:
//   {"name": str, "n": int, "zero": int, "add": [[int]], "mul": [[[int]]]}
// Every mul cell is a nonempty, strictly increasing index list.
RawTables raw_from_json(nlohmann::json const& doc);
RawTables load_raw(std::filesystem::path const& path);

nlohmann::json to_json(FiniteHyperring const& ring);
nlohmann::json to_json(RawTables const& raw);

// Compact, keys sorted, set lists sorted. Byte-stable across runs.
std::string canonical_dump(nlohmann::json const& doc);

nlohmann::json subset_json(Subset const& s);

}  // namespace hyperring
