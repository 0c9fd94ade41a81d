// json_io.hpp
// Game documents and JSON (de)serialization. A document is exactly one of:
//   explicit    {"n": int, "minimal_winning": [[player indices]...]}
//   invariants  {"classes": [n1..nt], "shift_minimal": [[row]...]}
//   weighted    {"quota": q, "weights": [per player]} or
//               {"quota": q, "class_weights": [w1..wt], "classes": [n1..nt]}
// Player indices are 0-based everywhere.

#pragma once

#include "tlab/invariants.hpp"
#include "tlab/trades.hpp"
#include "tlab/weights.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tlab {

using Json = nlohmann::json;

struct GameDocument {
  enum class Form { Explicit, Invariants, Weighted };
  Form form = Form::Explicit;
  std::optional<SimpleGame> game;                    // Explicit
  std::optional<CharacteristicInvariants> invariants; // Invariants
  long long quota = 0;                               // Weighted
  std::vector<long long> player_weights;
};

// Throws std::invalid_argument with a field diagnostic on malformed input.
GameDocument parse_game_document(const Json& j);

// Any form to an explicit game. Weighted documents expand losslessly to their
// minimal winning coalitions.
SimpleGame document_to_game(const GameDocument& doc);

SimpleGame weighted_to_game(long long quota, const std::vector<long long>& weights);

Json game_to_json(const SimpleGame& g);
Json invariants_to_json(const CharacteristicInvariants& ci);
CharacteristicInvariants invariants_from_json(const Json& j);
Json representation_to_json(const WeightedRepresentation& rep);
Json vectorial_to_json(const VectorialTrade& v, TradeMode mode, int k);
VectorialTrade vectorial_from_json(const Json& j);
Json transform_to_json(const TradingTransform& t);
Json coalition_to_json(const Coalition& c);

} // namespace tlab
