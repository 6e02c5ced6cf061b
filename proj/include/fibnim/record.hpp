#pragma once

// Outcome records and their two serializations: a single-line key=value form
//
//   piles=3,4,10 bound=inf dyn=2 outcome=N moves=3:1;10:5 provenance=oracle
//
// (moves are pile-size:take pairs, "-" when empty) and a JSON object.

#include <string>
#include <vector>

#include <json.hpp>

#include "fibnim/position.hpp"

namespace fibnim {

struct OutcomeRecord {
    Position position;
    Outcome outcome = Outcome::kP;
    std::vector<Move> winning_moves;
    std::string provenance = "oracle";

    friend bool operator==(const OutcomeRecord&, const OutcomeRecord&) = default;
};

class RecordParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string to_line(const OutcomeRecord& rec);

/// Inverse of to_line. Field order is free; provenance defaults to "oracle".
OutcomeRecord parse_line(const std::string& line);

nlohmann::json move_to_json(const Move& m);
nlohmann::json position_to_json(const Position& pos);
nlohmann::json to_json(const OutcomeRecord& rec);

Position position_from_json(const nlohmann::json& j);
OutcomeRecord record_from_json(const nlohmann::json& j);

}  // namespace fibnim
