#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "tg/alpha.hpp"
#include "tg/game.hpp"
#include "tg/graph.hpp"
#include "tg/payoff.hpp"
#include "tg/well_spread.hpp"

// JSON uses 1-based player and vertex ids and "num/den" strings for
// rationals. Objects serialize with sorted keys; unknown keys are ignored.
namespace tg::io {

using nlohmann::json;

json to_json(const SimpleGame& game);
json to_json(const Graph& g);
json to_json(const Certificate& cert);
json to_json(const AlphaResult& result);
json to_json(const WellSpreadDecomposition& d);
json to_json(const GEDecomposition& ge);

SimpleGame game_from_json(const json& j);
Graph graph_from_json(const json& j);
Certificate certificate_from_json(const json& j);

/// Parses a file; malformed JSON raises InvalidInput naming the file.
json read_file(const std::filesystem::path& path);
/// Compact dump with a trailing newline.
std::string dump(const json& j);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace tg::io
