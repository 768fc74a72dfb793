#pragma once

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

#include "lppgames/core.hpp"
#include "lppgames/stability.hpp"

namespace lpp {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance document: {"A": [[...]], "B": [[...]], "p": [...], "c": ..., "r": ...}.
/// Every number is a JSON integer or a string holding an integer, "num/den"
/// or a decimal; dimensions are inferred (g from A's columns, q from B's
/// rows, n from B's columns; A must have q+1 rows). Unknown keys are ignored.
LPPInstance instance_from_json(const nlohmann::json& doc);
LPPInstance parse_instance_text(const std::string& text);
LPPInstance load_instance(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const LPPInstance& instance);

/// Coalition key: concatenated 1-based labels ("12") while single digits
/// suffice, comma-separated ("1,10") beyond nine players.
std::string coalition_key(Coalition coalition, int players);
Coalition coalition_from_key(const std::string& key, int players);

/// {"n": 3, "v": {"1": "4", "12": "22", ...}} with exact rational strings.
nlohmann::ordered_json game_to_json(const CharacteristicGame& game);
CharacteristicGame game_from_json(const nlohmann::json& doc);

/// {"n": 3, "rule": ..., "V": {"{1,2}|{1,2}{3}": "...", ...}}.
nlohmann::ordered_json partition_game_to_json(const PartitionFunctionGame& game);

nlohmann::ordered_json core_report_to_json(const CoreReport& report);
nlohmann::ordered_json regime_report_to_json(const RegimeReport& report);

}  // namespace lpp
