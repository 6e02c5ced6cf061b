#include "fibnim/record.hpp"

#include <map>
#include <set>
#include <sstream>

namespace fibnim {
namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw RecordParseError(std::string("bad ") + what + ": '" + text + "'");
    }
    return v;
}

}  // namespace

std::string to_line(const OutcomeRecord& rec) {
    std::ostringstream os;
    os << "piles=" << join_piles(rec.position.piles) << " bound=" << rec.position.bound.to_string()
       << " dyn=" << multiplier(rec.position.dynamic) << " outcome=" << to_string(rec.outcome) << " moves=";
    if (rec.winning_moves.empty()) {
        os << '-';
    }
    for (std::size_t i = 0; i < rec.winning_moves.size(); ++i) {
        if (i > 0) {
            os << ';';
        }
        os << rec.winning_moves[i].pile_size << ':' << rec.winning_moves[i].take;
    }
    os << " provenance=" << rec.provenance;
    return os.str();
}

OutcomeRecord parse_line(const std::string& line) {
    std::map<std::string, std::string> fields;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw RecordParseError("expected key=value, got '" + token + "'");
        }
        const auto key = token.substr(0, eq);
        static const std::set<std::string> known{"piles", "bound", "dyn", "outcome", "moves", "provenance"};
        if (!known.contains(key)) {
            throw RecordParseError("unknown field '" + key + "'");
        }
        if (!fields.emplace(key, token.substr(eq + 1)).second) {
            throw RecordParseError("duplicate field '" + key + "'");
        }
    }
    for (const char* key : {"piles", "bound", "dyn", "outcome", "moves"}) {
        if (!fields.contains(key)) {
            throw RecordParseError(std::string("missing field ") + key);
        }
    }

    OutcomeRecord rec;
    ExtNat bound;
    try {
        bound = ExtNat::parse(fields["bound"]);
    } catch (const std::exception& e) {
        throw RecordParseError(std::string("bad bound: ") + e.what());
    }
    std::vector<std::uint64_t> piles;
    try {
        piles = parse_piles(fields["piles"]);
    } catch (const std::exception& e) {
        throw RecordParseError(std::string("bad piles: ") + e.what());
    }
    Dynamic dyn{};
    try {
        dyn = dynamic_from_int(static_cast<int>(parse_u64(fields["dyn"], "dyn")));
    } catch (const RecordParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw RecordParseError(e.what());
    }
    rec.position = Position::make(std::move(piles), bound, dyn);

    const auto& oc = fields["outcome"];
    if (oc == "N") {
        rec.outcome = Outcome::kN;
    } else if (oc == "P") {
        rec.outcome = Outcome::kP;
    } else {
        throw RecordParseError("bad outcome: '" + oc + "'");
    }

    const auto& moves = fields["moves"];
    if (moves != "-" && !moves.empty()) {
        std::istringstream ms(moves);
        std::string item;
        while (std::getline(ms, item, ';')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw RecordParseError("bad move: '" + item + "'");
            }
            const auto size = parse_u64(item.substr(0, colon), "move pile");
            const auto take = parse_u64(item.substr(colon + 1), "move take");
            const auto idx = rec.position.index_of(size);
            if (idx == rec.position.piles.size()) {
                throw RecordParseError("move names a pile of size " + std::to_string(size) + " that is not present");
            }
            rec.winning_moves.push_back(Move{idx, size, take});
        }
    }
    if (auto it = fields.find("provenance"); it != fields.end()) {
        rec.provenance = it->second;
    }
    return rec;
}

nlohmann::json move_to_json(const Move& m) {
    return {{"pile_index", m.pile_index}, {"pile_size", m.pile_size}, {"take", m.take}};
}

nlohmann::json position_to_json(const Position& pos) {
    nlohmann::json bound = pos.bound.is_inf() ? nlohmann::json("inf") : nlohmann::json(pos.bound.value());
    return {{"piles", pos.piles}, {"bound", bound}, {"dynamic", multiplier(pos.dynamic)}};
}

nlohmann::json to_json(const OutcomeRecord& rec) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : rec.winning_moves) {
        moves.push_back(move_to_json(m));
    }
    return {{"position", position_to_json(rec.position)},
            {"outcome", to_string(rec.outcome)},
            {"winning_moves", moves},
            {"provenance", rec.provenance}};
}

Position position_from_json(const nlohmann::json& j) {
    try {
        auto piles = j.at("piles").get<std::vector<std::uint64_t>>();
        const auto& b = j.at("bound");
        ExtNat bound = b.is_string() ? ExtNat::parse(b.get<std::string>()) : ExtNat{b.get<std::uint64_t>()};
        Dynamic dyn = Dynamic::kFibonacci;
        if (j.contains("dynamic")) {
            dyn = dynamic_from_int(j.at("dynamic").get<int>());
        }
        return Position::make(std::move(piles), bound, dyn);
    } catch (const nlohmann::json::exception& e) {
        throw RecordParseError(std::string("bad position JSON: ") + e.what());
    }
}

OutcomeRecord record_from_json(const nlohmann::json& j) {
    OutcomeRecord rec;
    try {
        rec.position = position_from_json(j.at("position"));
        const auto oc = j.at("outcome").get<std::string>();
        if (oc != "N" && oc != "P") {
            throw RecordParseError("bad outcome: '" + oc + "'");
        }
        rec.outcome = oc == "N" ? Outcome::kN : Outcome::kP;
        for (const auto& m : j.at("winning_moves")) {
            rec.winning_moves.push_back(
                Move{m.at("pile_index").get<std::size_t>(), m.at("pile_size").get<std::uint64_t>(),
                     m.at("take").get<std::uint64_t>()});
        }
        rec.provenance = j.value("provenance", std::string("oracle"));
    } catch (const nlohmann::json::exception& e) {
        throw RecordParseError(std::string("bad record JSON: ") + e.what());
    }
    return rec;
}

}  // namespace fibnim
